#include "braids/dual_nf.hpp"

#include <random>

namespace braids {

bool DualNF::is_simply_nested() const {
  for (size_t i = 0; i + 1 < factors.size(); ++i)
    if (!simply_nested_pair(factors[i], factors[i + 1])) return false;
  return true;
}

BraidWord DualNF::to_word() const {
  BraidWord w(n);
  if (p != 0) w.letters.push_back(GeneratorToken::small_delta(p));
  for (const DualSimple& f : factors) {
    BraidWord fw = f.to_word();
    w.letters.insert(w.letters.end(), fw.letters.begin(), fw.letters.end());
  }
  return w;
}

namespace {

struct Accumulator {
  int n;
  long long p = 0;
  std::vector<DualSimple> fs;

  void shift_all(int k) {
    for (DualSimple& f : fs) f = f.tau(k);
  }

  // Appends a^{+1}, or a^{-1} = delta^{-1} (delta a^{-1}).
  void push_atom(int i, int j, bool positive) {
    if (positive) {
      fs.push_back(DualSimple::atom(n, i, j));
      return;
    }
    --p;
    shift_all(-1);
    // u = delta a^{-1}: pi_u = pi_a o pi_delta.
    DualSimple dl = DualSimple::delta(n);
    DualSimple a = DualSimple::atom(n, i, j);
    std::vector<int> next(static_cast<size_t>(n));
    for (int x = 1; x <= n; ++x)
      next[static_cast<size_t>(x - 1)] = a.next(dl.next(x));
    std::optional<DualSimple> u = DualSimple::from_permutation(n, std::move(next));
    if (!u) throw index_error("internal error: delta complement not simple");
    if (!u->is_identity()) fs.push_back(*u);
  }
};

}  // namespace

DualNF normal_form_d(const BraidWord& w) {
  int n = w.n;
  Accumulator acc{n};
  for (const GeneratorToken& t : w.letters) {
    validate_token(t, n);
    switch (t.kind) {
      case GenKind::small_delta:
        acc.p += t.power;
        acc.shift_all(static_cast<int>(((t.power % n) + n) % n));
        break;
      case GenKind::artin: {
        long long count = t.power > 0 ? t.power : -t.power;
        for (long long k = 0; k < count; ++k)
          acc.push_atom(t.i, t.i + 1, t.power > 0);
        break;
      }
      case GenKind::band: {
        long long count = t.power > 0 ? t.power : -t.power;
        for (long long k = 0; k < count; ++k)
          acc.push_atom(t.i, t.j, t.power > 0);
        break;
      }
      case GenKind::big_delta: {
        BraidWord only(n);
        only.letters.push_back(t);
        for (auto [i, positive] : expand_to_artin_letters(only))
          acc.push_atom(i, i + 1, positive);
        break;
      }
    }
  }

  std::vector<DualSimple>& fs = acc.fs;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < fs.size(); ++i) {
      DualSimple t = meet_d(fs[i].complement(), fs[i + 1]);
      if (!t.is_identity()) {
        std::optional<DualSimple> merged = mult(fs[i], t);
        if (!merged) throw index_error("internal error: slide left-factor not simple");
        fs[i] = *merged;
        fs[i + 1] = left_quotient(t, fs[i + 1]);
        changed = true;
      }
      if (fs[i + 1].is_identity()) {
        fs.erase(fs.begin() + static_cast<long>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  while (!fs.empty() && fs.front().is_delta()) {
    fs.erase(fs.begin());
    ++acc.p;
  }

  DualNF nf;
  nf.n = n;
  nf.p = acc.p;
  nf.factors = std::move(fs);
  return nf;
}

long long sup_d(const BraidWord& w) { return normal_form_d(w).sup(); }
long long inf_d(const BraidWord& w) { return normal_form_d(w).inf(); }
long long len_d(const BraidWord& w) { return normal_form_d(w).canonical_length(); }
long long garside_len_d(const BraidWord& w) { return normal_form_d(w).garside_length(); }

DualNF random_simply_nested_nf(int n, int r, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<DualSimple>& all = DualSimple::enumerate(n);
  std::vector<DualSimple> usable;
  for (const DualSimple& d : all)
    if (!d.is_identity() && !d.is_delta()) usable.push_back(d);

  DualNF nf;
  nf.n = n;
  nf.p = static_cast<long long>(rng() % 7) - 3;
  for (int k = 0; k < r; ++k) {
    std::vector<const DualSimple*> candidates;
    for (const DualSimple& d : usable) {
      if (!nf.factors.empty()) {
        const DualSimple& prev = nf.factors.back();
        if (!left_weighted_d(prev, d) || !simply_nested_pair(prev, d)) continue;
      }
      candidates.push_back(&d);
    }
    if (candidates.empty())
      throw generation_error("no simply-nested extension exists");
    nf.factors.push_back(*candidates[rng() % candidates.size()]);
  }
  return nf;
}

BraidWord random_simply_nested(int n, int r, uint64_t seed) {
  return random_simply_nested_nf(n, r, seed).to_word();
}

}  // namespace braids

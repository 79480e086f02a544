#include "braids/classical_nf.hpp"

namespace braids {

BraidWord ClassicalNF::to_word() const {
  BraidWord w(n);
  if (p != 0) w.letters.push_back(GeneratorToken::big_delta(p));
  for (const PermSimple& f : factors) {
    BraidWord fw = f.to_word();
    w.letters.insert(w.letters.end(), fw.letters.begin(), fw.letters.end());
  }
  return w;
}

namespace {

struct Accumulator {
  int n;
  long long p = 0;
  std::vector<PermSimple> fs;

  void tau_all() {
    for (PermSimple& f : fs) f = f.tau();
  }

  // Appends simple factor s^{+1} or s^{-1} = Delta^{-1} (Delta s^{-1}).
  void push(const PermSimple& s, bool positive) {
    if (s.is_identity()) return;
    if (positive) {
      fs.push_back(s);
      return;
    }
    --p;
    tau_all();
    PermSimple u = compose(s.inverse_permutation(), PermSimple::delta(n));
    if (!u.is_identity()) fs.push_back(u);
  }
};

}  // namespace

ClassicalNF normal_form_c(const BraidWord& w) {
  int n = w.n;
  Accumulator acc{n};
  for (const GeneratorToken& t : w.letters) {
    validate_token(t, n);
    switch (t.kind) {
      case GenKind::big_delta:
        acc.p += t.power;
        if (t.power % 2 != 0) acc.tau_all();
        break;
      case GenKind::small_delta: {
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = i % n + 1;
        PermSimple d = PermSimple::from_image(std::move(img));
        long long count = t.power > 0 ? t.power : -t.power;
        for (long long k = 0; k < count; ++k) acc.push(d, t.power > 0);
        break;
      }
      case GenKind::artin: {
        PermSimple s = PermSimple::artin(n, t.i);
        long long count = t.power > 0 ? t.power : -t.power;
        for (long long k = 0; k < count; ++k) acc.push(s, t.power > 0);
        break;
      }
      case GenKind::band: {
        BraidWord b = band_to_artin(t.i, t.j, n);
        BraidWord use = t.power > 0 ? b : invert(b);
        long long count = t.power > 0 ? t.power : -t.power;
        for (long long k = 0; k < count; ++k)
          for (auto [i, positive] : expand_to_artin_letters(use))
            acc.push(PermSimple::artin(n, i), positive);
        break;
      }
    }
  }

  // Left-to-right sliding until every adjacent pair is left-weighted.
  std::vector<PermSimple>& fs = acc.fs;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < fs.size(); ++i) {
      PermSimple t = meet_c(fs[i].complement(), fs[i + 1]);
      if (!t.is_identity()) {
        fs[i] = compose(fs[i], t);
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
  ClassicalNF nf;
  nf.n = n;
  nf.p = acc.p;
  nf.factors = std::move(fs);
  return nf;
}

long long sup_c(const BraidWord& w) { return normal_form_c(w).sup(); }
long long inf_c(const BraidWord& w) { return normal_form_c(w).inf(); }
long long len_c(const BraidWord& w) { return normal_form_c(w).canonical_length(); }
long long garside_len_c(const BraidWord& w) { return normal_form_c(w).garside_length(); }

}  // namespace braids

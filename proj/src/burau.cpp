#include "braids/burau.hpp"

#include <map>
#include <mutex>

namespace braids {

BurauMatrix rho_sigma(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1) throw index_error("artin index out of range");
  BurauMatrix m = BurauMatrix::identity(n);
  LaurentPoly q = LaurentPoly::q();
  if (n == 2) {
    m.at(1, 1) = -q;
    return m;
  }
  if (i == 1) {
    m.at(1, 1) = -q;
    m.at(2, 1) = LaurentPoly::one();
  } else if (i == n - 1) {
    m.at(n - 2, n - 1) = q;
    m.at(n - 1, n - 1) = -q;
  } else {
    m.at(i - 1, i) = q;
    m.at(i, i) = -q;
    m.at(i + 1, i) = LaurentPoly::one();
  }
  return m;
}

BurauMatrix rho_sigma_inverse(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1) throw index_error("artin index out of range");
  BurauMatrix m = BurauMatrix::identity(n);
  LaurentPoly qi = LaurentPoly::q(-1);
  if (n == 2) {
    m.at(1, 1) = -qi;
    return m;
  }
  if (i == 1) {
    m.at(1, 1) = -qi;
    m.at(2, 1) = qi;
  } else if (i == n - 1) {
    m.at(n - 2, n - 1) = LaurentPoly::one();
    m.at(n - 1, n - 1) = -qi;
  } else {
    m.at(i - 1, i) = LaurentPoly::one();
    m.at(i, i) = -qi;
    m.at(i + 1, i) = qi;
  }
  return m;
}

void apply_artin_right(BurauMatrix& m, int i, bool inverse) {
  int n = m.n();
  int k = m.dim();
  if (i < 1 || i > n - 1) throw index_error("artin index out of range");
  // Right multiplication by a generator only rewrites column i.
  for (int r = 1; r <= k; ++r) {
    LaurentPoly v;
    if (!inverse) {
      if (n == 2) {
        v = m.at(r, 1).shifted(1);
        v = -v;
      } else if (i == 1) {
        v = -m.at(r, 1).shifted(1) + m.at(r, 2);
      } else if (i == n - 1) {
        v = m.at(r, n - 2).shifted(1) - m.at(r, n - 1).shifted(1);
      } else {
        v = m.at(r, i - 1).shifted(1) - m.at(r, i).shifted(1) + m.at(r, i + 1);
      }
    } else {
      if (n == 2) {
        v = m.at(r, 1).shifted(-1);
        v = -v;
      } else if (i == 1) {
        v = -m.at(r, 1).shifted(-1) + m.at(r, 2).shifted(-1);
      } else if (i == n - 1) {
        v = m.at(r, n - 2) - m.at(r, n - 1).shifted(-1);
      } else {
        v = m.at(r, i - 1) - m.at(r, i).shifted(-1) + m.at(r, i + 1).shifted(-1);
      }
    }
    m.at(r, i) = std::move(v);
  }
}

namespace {

// rho(Delta^2) is a homothety; its ratio drives fast powers of Delta and
// delta (delta^n = Delta^2).
const LaurentPoly& full_twist_ratio(int n) {
  static std::map<int, LaurentPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  BraidWord w(n);
  w.letters.push_back(GeneratorToken::big_delta(2));
  BurauMatrix m = BurauMatrix::identity(n);
  for (auto [i, positive] : expand_to_artin_letters(w))
    apply_artin_right(m, i, !positive);
  std::optional<LaurentPoly> ratio = m.homothety_ratio();
  if (!ratio || ratio->coeffs().size() != 1 || ratio->coeffs()[0] != Int(1))
    throw std::logic_error("rho(Delta^2) is not a q-power homothety");
  return cache.emplace(n, std::move(*ratio)).first->second;
}

}  // namespace

BurauMatrix rho(const BraidWord& w) {
  int n = w.n;
  BurauMatrix m = BurauMatrix::identity(n);
  for (const GeneratorToken& t : w.letters) {
    validate_token(t, n);
    long long reduced = t.power;
    if (t.kind == GenKind::big_delta || t.kind == GenKind::small_delta) {
      // Peel off full twists as scalar factors.
      long long period = t.kind == GenKind::big_delta ? 2 : n;
      long long twists = (reduced >= 0 ? reduced : reduced - (period - 1)) / period;
      reduced -= twists * period;
      if (twists != 0) {
        const LaurentPoly& ratio = full_twist_ratio(n);
        long long e = ratio.lo();  // ratio is a monomial q^n
        m.scale_by_q_power(e * twists);
      }
      if (reduced == 0) continue;
    }
    GeneratorToken rest = t;
    rest.power = reduced;
    BraidWord one(n);
    one.letters.push_back(rest);
    for (auto [i, positive] : expand_to_artin_letters(one))
      apply_artin_right(m, i, !positive);
  }
  return m;
}

BurauMatrix rho(const DualSimple& d) { return rho(d.to_word()); }

const BurauMatrix& rho_dual_simple_inverse(const DualSimple& d) {
  static std::map<std::pair<int, std::vector<int>>, BurauMatrix> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::pair<int, std::vector<int>> key{d.n(), d.permutation()};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, rho(invert(d.to_word()))).first->second;
}

BurauMatrix rho_delta_power(int n, long long p) {
  BraidWord w(n);
  if (p != 0) w.letters.push_back(GeneratorToken::small_delta(p));
  return rho(w);
}

bool is_identity(const BurauMatrix& m) { return m.is_identity(); }

std::optional<LaurentPoly> is_homothety(const BurauMatrix& m) {
  return m.homothety_ratio();
}

}  // namespace braids

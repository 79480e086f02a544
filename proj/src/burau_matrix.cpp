#include "braids/burau_matrix.hpp"

#include <bit>

namespace braids {

BurauMatrix::BurauMatrix(int n) : n_(n) {
  if (n < 2) throw dimension_error("strand count must be at least 2");
  e_.resize(static_cast<size_t>(dim()) * static_cast<size_t>(dim()));
}

BurauMatrix BurauMatrix::identity(int n) {
  BurauMatrix m(n);
  for (int i = 1; i <= m.dim(); ++i) m.at(i, i) = LaurentPoly::one();
  return m;
}

LaurentPoly& BurauMatrix::at(int i, int j) {
  if (i < 1 || i > dim() || j < 1 || j > dim())
    throw dimension_error("matrix index out of range");
  return e_[idx(i, j)];
}

const LaurentPoly& BurauMatrix::at(int i, int j) const {
  if (i < 1 || i > dim() || j < 1 || j > dim())
    throw dimension_error("matrix index out of range");
  return e_[idx(i, j)];
}

BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
  if (a.n_ != b.n_) throw dimension_error("matrix dimension mismatch");
  BurauMatrix r(a.n_);
  int k = a.dim();
  for (int i = 1; i <= k; ++i)
    for (int l = 1; l <= k; ++l) {
      const LaurentPoly& x = a.at(i, l);
      if (x.is_zero()) continue;
      for (int j = 1; j <= k; ++j) {
        if (b.at(l, j).is_zero()) continue;
        r.at(i, j) += x * b.at(l, j);
      }
    }
  return r;
}

void BurauMatrix::scale_by_q_power(long long e) {
  for (LaurentPoly& p : e_) p = p.shifted(e);
}

DegreeStats BurauMatrix::stats() const {
  DegreeStats s;
  for (const LaurentPoly& p : e_) {
    s.min_deg = std::min(s.min_deg, p.min_deg());
    s.max_deg = std::max(s.max_deg, p.max_deg());
  }
  return s;
}

Degree BurauMatrix::row_max(int i) const {
  Degree m = Degree::neg_inf();
  for (int j = 1; j <= dim(); ++j) m = std::max(m, at(i, j).max_deg());
  return m;
}

Degree BurauMatrix::col_max(int j) const {
  Degree m = Degree::neg_inf();
  for (int i = 1; i <= dim(); ++i) m = std::max(m, at(i, j).max_deg());
  return m;
}

LaurentPoly BurauMatrix::det() const {
  // Laplace expansion as a subset DP: minor[S] is the determinant of the
  // submatrix on rows 1..popcount(S) and column set S.
  int k = dim();
  std::vector<LaurentPoly> cur(size_t{1} << k), next;
  cur[0] = LaurentPoly::one();
  for (int r = 0; r < k; ++r) {
    next.assign(size_t{1} << k, LaurentPoly::zero());
    for (unsigned s = 0; s < (1u << k); ++s) {
      if (std::popcount(s) != r || cur[s].is_zero()) continue;
      for (int c = 0; c < k; ++c) {
        if (s & (1u << c)) continue;
        const LaurentPoly& a = at(r + 1, c + 1);
        if (a.is_zero()) continue;
        int below = std::popcount(s & ((1u << c) - 1));
        LaurentPoly term = cur[s] * a;
        if ((r + below) % 2 != 0) term = -term;
        next[s | (1u << c)] += term;
      }
    }
    cur.swap(next);
  }
  return cur[(size_t{1} << k) - 1];
}

bool BurauMatrix::is_identity() const { return *this == identity(n_); }

std::optional<LaurentPoly> BurauMatrix::homothety_ratio() const {
  const LaurentPoly& c = at(1, 1);
  if (c.is_zero()) return std::nullopt;
  for (int i = 1; i <= dim(); ++i)
    for (int j = 1; j <= dim(); ++j) {
      if (i == j && at(i, j) != c) return std::nullopt;
      if (i != j && !at(i, j).is_zero()) return std::nullopt;
    }
  return c;
}

BurauMatrix mat_mul(const BurauMatrix& a, const BurauMatrix& b) { return a * b; }
BurauMatrix mat_identity(int n) { return BurauMatrix::identity(n); }
LaurentPoly mat_det(const BurauMatrix& a) { return a.det(); }
DegreeStats mat_stats(const BurauMatrix& a) { return a.stats(); }

}  // namespace braids

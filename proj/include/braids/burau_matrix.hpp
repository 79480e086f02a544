#pragma once

#include <optional>
#include <vector>

#include "braids/laurent.hpp"

namespace braids {

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dense (n-1)x(n-1) matrix over integer Laurent polynomials.
/// Rows and columns are 1-based to match the puncture indexing.
class BurauMatrix {
 public:
  explicit BurauMatrix(int n);
  static BurauMatrix identity(int n);

  int n() const { return n_; }
  int dim() const { return n_ - 1; }

  LaurentPoly& at(int i, int j);
  const LaurentPoly& at(int i, int j) const;

  friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b);
  BurauMatrix& operator*=(const BurauMatrix& o) { return *this = *this * o; }
  friend bool operator==(const BurauMatrix& a, const BurauMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const BurauMatrix& a, const BurauMatrix& b) {
    return !(a == b);
  }

  /// Multiplies every entry by q^e.
  void scale_by_q_power(long long e);

  DegreeStats stats() const;
  Degree row_max(int i) const;
  Degree col_max(int j) const;

  LaurentPoly det() const;

  bool is_identity() const;
  /// Returns the ratio c when the matrix equals c * I, with c nonzero.
  std::optional<LaurentPoly> homothety_ratio() const;

 private:
  int n_;
  std::vector<LaurentPoly> e_;  // row-major, dim*dim

  size_t idx(int i, int j) const {
    return static_cast<size_t>(i - 1) * static_cast<size_t>(dim()) +
           static_cast<size_t>(j - 1);
  }
};

BurauMatrix mat_mul(const BurauMatrix& a, const BurauMatrix& b);
BurauMatrix mat_identity(int n);
LaurentPoly mat_det(const BurauMatrix& a);
DegreeStats mat_stats(const BurauMatrix& a);

}  // namespace braids

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "braids/ints.hpp"

namespace braids {

/// q-degree extended with the zero-polynomial conventions m(0) = +inf,
/// M(0) = -inf.
class Degree {
 public:
  constexpr Degree() = default;
  static constexpr Degree finite(long long v) { return Degree(Kind::finite, v); }
  static constexpr Degree pos_inf() { return Degree(Kind::pos_inf, 0); }
  static constexpr Degree neg_inf() { return Degree(Kind::neg_inf, 0); }

  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
  long long value() const {
    if (!is_finite()) throw std::logic_error("Degree::value on infinite degree");
    return v_;
  }

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.v_ == b.v_);
  }
  friend bool operator!=(const Degree& a, const Degree& b) { return !(a == b); }
  friend bool operator<(const Degree& a, const Degree& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.kind_ == Kind::finite && a.v_ < b.v_;
  }
  friend bool operator>(const Degree& a, const Degree& b) { return b < a; }
  friend bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }
  friend bool operator>=(const Degree& a, const Degree& b) { return !(a < b); }

  std::string to_string() const {
    if (is_pos_inf()) return "+inf";
    if (is_neg_inf()) return "-inf";
    return std::to_string(v_);
  }

 private:
  enum class Kind { neg_inf, finite, pos_inf };
  constexpr Degree(Kind k, long long v) : kind_(k), v_(v) {}
  int rank() const { return kind_ == Kind::neg_inf ? -1 : (kind_ == Kind::finite ? 0 : 1); }

  Kind kind_ = Kind::finite;
  long long v_ = 0;
};

struct DegreeStats {
  Degree min_deg = Degree::pos_inf();
  Degree max_deg = Degree::neg_inf();

  friend bool operator==(const DegreeStats& a, const DegreeStats& b) {
    return a.min_deg == b.min_deg && a.max_deg == b.max_deg;
  }
};

/// Integer Laurent polynomial in one variable q, canonically trimmed:
/// coeffs[k] is the coefficient of q^(lo+k); first and last entries are
/// nonzero; the empty sequence is the zero polynomial.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(Int c) { return monomial(std::move(c), 0); }
  static LaurentPoly one() { return constant(1); }
  static LaurentPoly q(long long e = 1) { return monomial(1, e); }
  static LaurentPoly monomial(Int c, long long e);
  static LaurentPoly from_terms(long long lo, std::vector<Int> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  long long lo() const { return lo_; }  // meaningful only when nonzero
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(long long e) const;
  size_t term_count() const;

  Degree min_deg() const {
    return is_zero() ? Degree::pos_inf() : Degree::finite(lo_);
  }
  Degree max_deg() const {
    return is_zero() ? Degree::neg_inf()
                     : Degree::finite(lo_ + static_cast<long long>(coeffs_.size()) - 1);
  }
  DegreeStats stats() const { return {min_deg(), max_deg()}; }

  /// Multiplication by q^e.
  LaurentPoly shifted(long long e) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.coeffs_.empty() || a.lo_ == b.lo_);
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  long long lo_ = 0;
  std::vector<Int> coeffs_;

  void trim();
};

DegreeStats poly_stats(const LaurentPoly& p);

}  // namespace braids

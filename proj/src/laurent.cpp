#include "braids/laurent.hpp"

#include <algorithm>

namespace braids {

LaurentPoly LaurentPoly::monomial(Int c, long long e) {
  LaurentPoly p;
  if (!c.is_zero()) {
    p.lo_ = e;
    p.coeffs_.push_back(std::move(c));
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(long long lo, std::vector<Int> coeffs) {
  LaurentPoly p;
  p.lo_ = lo;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && lo_ == 0 && coeffs_[0] == Int(1);
}

Int LaurentPoly::coeff(long long e) const {
  long long k = e - lo_;
  if (is_zero() || k < 0 || k >= static_cast<long long>(coeffs_.size())) return Int(0);
  return coeffs_[static_cast<size_t>(k)];
}

size_t LaurentPoly::term_count() const {
  size_t c = 0;
  for (const Int& v : coeffs_)
    if (!v.is_zero()) ++c;
  return c;
}

LaurentPoly LaurentPoly::shifted(long long e) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.lo_ += e;
  return p;
}

void LaurentPoly::trim() {
  size_t begin = 0, end = coeffs_.size();
  while (begin < end && coeffs_[begin].is_zero()) ++begin;
  while (end > begin && coeffs_[end - 1].is_zero()) --end;
  if (begin == end) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  lo_ += static_cast<long long>(begin);
  coeffs_ = std::vector<Int>(coeffs_.begin() + static_cast<long>(begin),
                             coeffs_.begin() + static_cast<long>(end));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long long lo = std::min(a.lo_, b.lo_);
  long long hi = std::max(a.lo_ + static_cast<long long>(a.coeffs_.size()),
                          b.lo_ + static_cast<long long>(b.coeffs_.size()));
  std::vector<Int> c(static_cast<size_t>(hi - lo));
  for (size_t k = 0; k < a.coeffs_.size(); ++k)
    c[static_cast<size_t>(a.lo_ - lo) + k] += a.coeffs_[k];
  for (size_t k = 0; k < b.coeffs_.size(); ++k)
    c[static_cast<size_t>(b.lo_ - lo) + k] += b.coeffs_[k];
  return LaurentPoly::from_terms(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + (-b);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (Int& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly::zero();
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly::from_terms(a.lo_ + b.lo_, std::move(c));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const Int& c = coeffs_[k];
    if (c.is_zero()) continue;
    long long e = lo_ + static_cast<long long>(k);
    std::string mag = (c.sign() < 0 ? (-c).to_string() : c.to_string());
    if (!out.empty())
      out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0)
      out += "-";
    if (e == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += e == 1 ? "q" : "q^" + std::to_string(e);
    }
  }
  return out;
}

DegreeStats poly_stats(const LaurentPoly& p) { return p.stats(); }

}  // namespace braids

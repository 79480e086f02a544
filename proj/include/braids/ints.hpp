#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <climits>
#include <memory>
#include <string>

namespace braids {

/// Exact integer with an int64 fast path. Arithmetic is overflow-checked
/// and promotes to an arbitrary-precision value on demand; values that fit
/// back into int64 are demoted so equality stays structural.
class Int {
 public:
  using big_t = boost::multiprecision::cpp_int;

  Int() = default;
  Int(long long v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  Int(int v) : small_(v) {}        // NOLINT(google-explicit-constructor)
  explicit Int(const big_t& v) { assign_big(v); }

  static Int from_string(const std::string& s) { return Int(big_t(s)); }

  bool is_zero() const { return big_ ? big_->is_zero() : small_ == 0; }
  int sign() const {
    if (big_) return big_->sign();
    return small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
  }
  bool fits_int64() const { return !big_; }
  long long as_int64() const { return small_; }  // only when fits_int64()
  big_t as_big() const { return big_ ? *big_ : big_t(small_); }

  friend Int operator+(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) {
      long long r;
      if (!__builtin_add_overflow(a.small_, b.small_, &r)) return Int(r);
    }
    return Int(big_t(a.as_big() + b.as_big()));
  }
  friend Int operator-(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) {
      long long r;
      if (!__builtin_sub_overflow(a.small_, b.small_, &r)) return Int(r);
    }
    return Int(big_t(a.as_big() - b.as_big()));
  }
  friend Int operator*(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) {
      long long r;
      if (!__builtin_mul_overflow(a.small_, b.small_, &r)) return Int(r);
    }
    return Int(big_t(a.as_big() * b.as_big()));
  }
  Int operator-() const {
    if (!big_ && small_ != LLONG_MIN) return Int(-small_);
    return Int(big_t(-as_big()));
  }
  Int& operator+=(const Int& o) { return *this = *this + o; }
  Int& operator-=(const Int& o) { return *this = *this - o; }
  Int& operator*=(const Int& o) { return *this = *this * o; }

  friend bool operator==(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    return a.as_big() == b.as_big();
  }
  friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
  friend bool operator<(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.small_ < b.small_;
    return a.as_big() < b.as_big();
  }
  friend bool operator>(const Int& a, const Int& b) { return b < a; }
  friend bool operator<=(const Int& a, const Int& b) { return !(b < a); }
  friend bool operator>=(const Int& a, const Int& b) { return !(a < b); }

  std::string to_string() const {
    return big_ ? big_->str() : std::to_string(small_);
  }

 private:
  long long small_ = 0;
  std::shared_ptr<const big_t> big_;  // engaged => value lives here

  void assign_big(const big_t& v) {
    static const big_t kMin(LLONG_MIN), kMax(LLONG_MAX);
    if (v >= kMin && v <= kMax) {
      small_ = static_cast<long long>(v);
      big_.reset();
    } else {
      small_ = 0;
      big_ = std::make_shared<const big_t>(v);
    }
  }
};

}  // namespace braids

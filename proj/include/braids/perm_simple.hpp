#pragma once

#include <set>
#include <vector>

#include "braids/word.hpp"

namespace braids {

struct not_simple_error : std::invalid_argument {
  not_simple_error(int a, int b)
      : std::invalid_argument("strands " + std::to_string(a) + " and " +
                              std::to_string(b) + " cross more than once"),
        strand_a(a),
        strand_b(b) {}
  int strand_a, strand_b;
};

/// Positive permutation braid, stored as its strand permutation:
/// image(i) is the final position of the strand starting at position i.
/// Composition follows word order, compose(a, b) = braid a then braid b.
class PermSimple {
 public:
  explicit PermSimple(int n);  // identity
  static PermSimple identity(int n) { return PermSimple(n); }
  static PermSimple delta(int n);
  static PermSimple artin(int n, int i);
  static PermSimple from_image(std::vector<int> image);

  int n() const { return n_; }
  int image(int i) const { return img_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& image_vector() const { return img_; }

  bool is_identity() const;
  bool is_delta() const;
  int length() const;  // number of inversions = artin letter count

  friend PermSimple compose(const PermSimple& a, const PermSimple& b);
  PermSimple inverse_permutation() const;

  std::set<int> starting_set() const;
  std::set<int> finishing_set() const;

  /// Prefix-order divisibility among simple elements.
  bool left_divides(const PermSimple& t) const;

  friend PermSimple meet_c(const PermSimple& a, const PermSimple& b);
  /// The right complement: s . complement() = Delta.
  PermSimple complement() const;
  /// u^{-1} t, assuming u left-divides t.
  friend PermSimple left_quotient(const PermSimple& u, const PermSimple& t);
  /// Delta^{-1} s Delta.
  PermSimple tau() const;

  BraidWord to_word() const;
  static PermSimple from_positive_word(const BraidWord& w);
  static std::vector<PermSimple> enumerate(int n);

  friend bool operator==(const PermSimple& a, const PermSimple& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const PermSimple& a, const PermSimple& b) {
    return !(a == b);
  }
  friend bool operator<(const PermSimple& a, const PermSimple& b) {
    return a.img_ < b.img_;
  }

 private:
  int n_;
  std::vector<int> img_;
};

bool left_weighted_c(const PermSimple& s, const PermSimple& t);

}  // namespace braids

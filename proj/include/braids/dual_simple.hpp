#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "braids/word.hpp"

namespace braids {

/// Dual (Birman-Ko-Lee) simple element of B_n, a non-crossing partition of
/// the circularly ordered punctures {1..n}. Stored as its permutation:
/// next(i) is the clockwise successor of i inside its block (so every block
/// acts as a one-notch clockwise rotation of its convex hull).
class DualSimple {
 public:
  explicit DualSimple(int n);  // identity (all singletons)
  static DualSimple identity(int n) { return DualSimple(n); }
  static DualSimple delta(int n);
  static DualSimple atom(int n, int i, int j);
  static DualSimple from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  /// Validates that the permutation is a product of clockwise cycles on
  /// pairwise non-crossing supports.
  static std::optional<DualSimple> from_permutation(int n, std::vector<int> next);

  int n() const { return n_; }
  int next(int i) const { return next_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& permutation() const { return next_; }

  std::vector<std::vector<int>> blocks() const;    // ascending, incl. singletons
  std::vector<std::vector<int>> polygons() const;  // blocks of size >= 2
  int block_count() const;
  int length() const { return n_ - block_count(); }  // atom count
  bool is_identity() const;
  bool is_delta() const;

  /// Product in the dual monoid; empty when the product is not simple.
  friend std::optional<DualSimple> mult(const DualSimple& a, const DualSimple& b);
  /// Non-crossing-lattice order; equals both left and right divisibility.
  bool left_divides(const DualSimple& d) const;
  friend DualSimple meet_d(const DualSimple& a, const DualSimple& b);
  friend DualSimple join_d(const DualSimple& a, const DualSimple& b);
  /// s^{-1} d for s dividing d.
  friend DualSimple complement_d(const DualSimple& s, const DualSimple& d);
  /// The right complement: d . complement() = delta.
  DualSimple complement() const;
  /// t^{-1} b for t dividing b.
  friend DualSimple left_quotient(const DualSimple& t, const DualSimple& b);
  /// delta^{-k} d delta^{k}: every block shifted by +k mod n.
  DualSimple tau(int k = 1) const;

  /// Polygon edge atoms whose ordered product equals this simple.
  std::vector<std::pair<int, int>> atoms() const;
  BraidWord to_word() const;

  static const std::vector<DualSimple>& enumerate(int n);  // cached, n <= 8

  /// Folds a positive word of band/artin atoms into a single simple;
  /// throws when the product leaves the simple interval.
  static DualSimple from_atom_word(const BraidWord& w);

  friend bool operator==(const DualSimple& a, const DualSimple& b) {
    return a.next_ == b.next_;
  }
  friend bool operator!=(const DualSimple& a, const DualSimple& b) {
    return !(a == b);
  }
  friend bool operator<(const DualSimple& a, const DualSimple& b) {
    return a.next_ < b.next_;
  }

 private:
  int n_;
  std::vector<int> next_;
};

/// The obstruction relation a_{k,l} |- a_{i,j}, read literally with ordered
/// pairs; (a,b) is the closed clockwise arc {a, a+1, ..., b} mod n.
bool obstructs_ordered(int n, std::pair<int, int> kl, std::pair<int, int> ij);
/// Symmetrized over the orderings of both unordered pairs.
bool obstructs(int n, std::pair<int, int> kl, std::pair<int, int> ij);

bool left_weighted_d(const DualSimple& d, const DualSimple& dp);
bool simply_nested_pair(const DualSimple& d, const DualSimple& dp);

}  // namespace braids

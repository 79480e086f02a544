#pragma once

#include <cstdint>

#include "braids/dual_simple.hpp"

namespace braids {

/// Dual left normal form delta^p d_1 ... d_r.
struct DualNF {
  int n = 2;
  long long p = 0;
  std::vector<DualSimple> factors;

  long long sup() const { return p + static_cast<long long>(factors.size()); }
  long long inf() const { return p; }
  long long canonical_length() const { return static_cast<long long>(factors.size()); }
  long long garside_length() const {
    return std::max(sup(), 0LL) - std::min(inf(), 0LL);
  }

  bool is_simply_nested() const;
  BraidWord to_word() const;

  friend bool operator==(const DualNF& a, const DualNF& b) {
    return a.n == b.n && a.p == b.p && a.factors == b.factors;
  }
  friend bool operator!=(const DualNF& a, const DualNF& b) { return !(a == b); }
};

DualNF normal_form_d(const BraidWord& w);

long long sup_d(const BraidWord& w);
long long inf_d(const BraidWord& w);
long long len_d(const BraidWord& w);
long long garside_len_d(const BraidWord& w);

struct generation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Emits delta^p d_1 ... d_r with every adjacent pair left-weighted and
/// simply-nested, deterministic per seed. The delta power is sampled from
/// a small symmetric range.
DualNF random_simply_nested_nf(int n, int r, uint64_t seed);
BraidWord random_simply_nested(int n, int r, uint64_t seed);

}  // namespace braids

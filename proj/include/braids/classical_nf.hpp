#pragma once

#include "braids/perm_simple.hpp"

namespace braids {

/// Classical left normal form Delta^p s_1 ... s_r with every adjacent pair
/// left-weighted and no factor trivial or Delta.
struct ClassicalNF {
  int n = 2;
  long long p = 0;
  std::vector<PermSimple> factors;

  long long sup() const { return p + static_cast<long long>(factors.size()); }
  long long inf() const { return p; }
  long long canonical_length() const { return static_cast<long long>(factors.size()); }
  long long garside_length() const {
    return std::max(sup(), 0LL) - std::min(inf(), 0LL);
  }

  BraidWord to_word() const;

  friend bool operator==(const ClassicalNF& a, const ClassicalNF& b) {
    return a.n == b.n && a.p == b.p && a.factors == b.factors;
  }
};

ClassicalNF normal_form_c(const BraidWord& w);

long long sup_c(const BraidWord& w);
long long inf_c(const BraidWord& w);
long long len_c(const BraidWord& w);
long long garside_len_c(const BraidWord& w);

}  // namespace braids

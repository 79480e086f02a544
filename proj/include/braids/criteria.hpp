#pragma once

#include <array>

#include "braids/classical_nf.hpp"
#include "braids/dual_nf.hpp"
#include "braids/laurent.hpp"

namespace braids {

/// Outcome of a non-vanishing check. A guaranteed verdict certifies that the
/// cited statement's hypotheses hold, hence rho(x) != 1.
struct Verdict {
  bool applicable = true;
  bool guaranteed = false;
  std::string reason;
  std::vector<std::pair<std::string, long long>> data;  // witness numbers
};

/// Guaranteed when the classical normal form of a 4-braid has no factor
/// equal to s2 s1 s3.
Verdict classical_criterion_b4(const BraidWord& w);

/// Row-degree profile of a positive 4-braid with infimum 0, canonical length
/// at least 2 and no s2 s1 s3 factor, together with the case inequalities it
/// is expected to satisfy.
struct Lemma31Profile {
  bool applicable = false;
  std::string violation;  // set when not applicable
  std::set<int> starting_set;
  std::array<long long, 3> row_max{0, 0, 0};
  bool case_holds = false;
  long long sup_c = 0;
  Degree mat_max = Degree::neg_inf();
  bool sup_bound_holds = false;  // sup <= M(rho) <= 3 sup
};
Lemma31Profile lemma31_profile(const BraidWord& w);

/// The six left-weighted but not simply-nested pairs of dual simples in B4.
const std::vector<std::pair<DualSimple, DualSimple>>& forbidden_pairs_b4();

/// Guaranteed when no adjacent pair of the dual normal form is forbidden.
Verdict dual_criterion_b4(const BraidWord& w);

struct DegreeBoundReport {
  Degree max_deg = Degree::neg_inf();
  long long sup_d = 0;
  bool bound_holds = false;
  bool equality = false;
  bool simply_nested = false;
};
DegreeBoundReport degree_bound_report(const BraidWord& w);

/// Guaranteed when some prefix delta^p d_1 ... d_{r'} is simply-nested with
/// r' > e(d_{r'+1} ... d_r).
Verdict kernel_exclusion(const BraidWord& w);

}  // namespace braids

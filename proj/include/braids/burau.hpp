#pragma once

#include "braids/burau_matrix.hpp"
#include "braids/dual_simple.hpp"
#include "braids/word.hpp"

namespace braids {

/// Convention marker: braids act on the right of the standard-fork basis,
/// so rho(xy) = rho(x) rho(y) with words read left to right.
struct RhoConvention {
  static constexpr const char* description =
      "right action, rho(xy) = rho(x) rho(y), standard-fork basis";
};

/// The reduced Burau matrix of a single Artin generator, assembled from the
/// block forms (edge cases i = 1 and i = n-1 included).
BurauMatrix rho_sigma(int n, int i);
BurauMatrix rho_sigma_inverse(int n, int i);

/// Right-multiplies M by rho(sigma_i^{+-1}) in place as a column operation.
void apply_artin_right(BurauMatrix& m, int i, bool inverse);

BurauMatrix rho(const BraidWord& w);
BurauMatrix rho(const DualSimple& d);
/// Cached rho(d)^{-1} keyed by the simple; thread safe.
const BurauMatrix& rho_dual_simple_inverse(const DualSimple& d);
BurauMatrix rho_delta_power(int n, long long p);

bool is_identity(const BurauMatrix& m);
std::optional<LaurentPoly> is_homothety(const BurauMatrix& m);

}  // namespace braids

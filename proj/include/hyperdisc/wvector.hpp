#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperdisc/core.hpp"

namespace hyperdisc {

// The level profile (W_0, ..., W_k) of a weighting:
//
//   W_0 = |d(w)|,   W_i = average over ordered pairs (x, y) of the
//                         (i-1)-th entry of the profile of w_xy,
//
// equivalently W_i is the average of |<w, phi_star>| over all
// relabellings of the level-i canonical weighting.  W_i measures how
// much of w lives at level i: W_i = 0 exactly when the level-i component
// of w vanishes.
struct WVector {
  int n = 0;
  int k = 0;
  std::vector<double> values;      // k+1 entries, levels 0..k
  std::vector<double> std_errors;  // empty unless Monte Carlo
};

// Exact, by the recursive definition (averages of difference-weighting
// profiles).  Work grows like n^{2k}; guarded by a capacity check.
WVector wvector_recursive(const Weighting& w);

// Exact, by averaging |<w, phi_star>| over the relabellings of the
// canonical weighting at each level.  Relabellings that differ only by
// pair order or by swapping within pairs share one |inner| value, so the
// average runs over unordered pair families.  Much cheaper than the
// recursion for larger n.
WVector wvector_canonical(const Weighting& w);

// Unbiased Monte Carlo estimate: each sample draws one ordered 2k-tuple
// of distinct vertices (seeded per sample from (seed, sample index)) and
// evaluates |<w, phi_star>| on its length-2i prefixes.  std_errors holds
// the standard error of each mean.
WVector wvector_mc(const Weighting& w, std::int64_t samples,
                   std::uint64_t seed);

// Per-level caps W_i <= 2^i * l1(w) / binom(n,k), plus the aggregate
// witnesses: sum of levels, sum of caps, and the scale-free ratio
// sum(W) * n^k / l1(w) (meaningful only when the norm is nonzero).
struct WVectorBounds {
  WVector wvector;
  std::vector<double> level_caps;
  double sum = 0.0;
  double cap_sum = 0.0;
  double normalized_sum = 0.0;  // sum * n^k / l1(w)
  bool degenerate = false;      // l1(w) == 0
};

WVectorBounds wvector_bounds(const Weighting& w);

// The two lower-bound sums a pair of profiles induces:
//
//   disc_product_sum = n^(2k+1) * sum_{i>=1} n^-i     * W_i^2 U_i^2
//   expected_abs_sum = n^k      * sum_{i>=0} n^-(i/2) * W_i U_i
//
// which bound disc+ * disc- and the expected absolute pairing up to
// constants independent of n.
struct PairLowerBounds {
  double disc_product_sum = 0.0;
  double expected_abs_sum = 0.0;
  std::vector<double> level_products;  // W_i * U_i, levels 0..k
};

PairLowerBounds pair_lower_bounds(const Weighting& w, const Weighting& u);

// Splits a family of zero-total weightings into k classes by the argmax
// level of their profiles (ties to the smallest level).  Class c holds
// the indices of the members whose profile peaks at level c+1.
std::vector<std::vector<std::size_t>> partition_by_wvector(
    std::span<const Weighting> family);

// Average of |w(A + x) - w(A + y)| over all (k-1)-sets A and ordered
// pairs x != y outside A.  Strictly positive for any nonconstant w; for
// zero-total w it is bounded below by a dimension-dependent multiple of
// n^-k * l1(w).
double mean_local_difference(const Weighting& w);

}  // namespace hyperdisc

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperdisc/core.hpp"

namespace hyperdisc {

// The average of <w_pi, u> over all relabellings pi: the product of the
// densities times the edge count, d(w) d(u) binom(n,k).
double expected_intersection(const Weighting& w, const Weighting& u);

// One full pass over all n! relabellings of w against a fixed u.
// Witnesses are the first permutations (in lexicographic image order)
// attaining the extremes, so results are independent of `threads`.
struct PermutationScan {
  double max_value = 0.0;
  double min_value = 0.0;
  Permutation argmax;
  Permutation argmin;
  double mean = 0.0;
  double mean_abs = 0.0;
  std::int64_t count = 0;
};

PermutationScan scan_permutations(const Weighting& w, const Weighting& u,
                                  int threads = 1);

// How far the extreme relabelled intersections sit from the average:
//   disc_plus  = max over pi of <w_pi, u>  -  baseline
//   disc_minus = baseline  -  min over pi of <w_pi, u>
//   disc       = max(disc_plus, disc_minus)
// where baseline = expected_intersection(w, u).
struct DiscrepancyReport {
  double disc_plus = 0.0;
  double disc_minus = 0.0;
  double disc = 0.0;
  double baseline = 0.0;
  Permutation argmax;  // witness for the max side
  Permutation argmin;  // witness for the min side
  std::string method;  // "exact" or "heuristic"
};

// Exhaustive (n <= 10).  Throws capacity_error beyond that, pointing the
// caller at disc_heuristic.
DiscrepancyReport disc_exact(const Weighting& w, const Weighting& u,
                             int threads = 1);

struct AnnealingSchedule {
  double initial_temperature = 1.0;
  double cooling = 0.995;  // multiplicative, per step
  int steps = 2000;
};

struct SearchParams {
  int restarts = 20;
  int max_sweeps = 500;     // steepest-move rounds per restart
  int plateau_budget = 25;  // zero-gain moves tolerated per restart
  std::uint64_t seed = 0;
  std::optional<AnnealingSchedule> annealing;  // optional warm-up walk
};

// Local search over the transposition neighbourhood: each candidate move
// swaps two vertices of the current relabelling, whose effect on the
// intersection is evaluated in O(binom(n-2, k-1)) through the
// difference-weighting identity.  Runs independent maximizing and
// minimizing searches from seeded random starts; reported values never
// exceed the exact ones.
DiscrepancyReport disc_heuristic(const Weighting& w, const Weighting& u,
                                 const SearchParams& params = {});

// Exact E|<w_pi, u>| over all relabellings (n <= 10).
double exp_abs_exact(const Weighting& w, const Weighting& u, int threads = 1);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
};

// Monte Carlo E|<w_pi, u>| with one seeded permutation per sample.
McEstimate exp_abs_mc(const Weighting& w, const Weighting& u,
                      std::int64_t samples, std::uint64_t seed);

// One-sided discrepancy over vertex subsets:
//   disc_plus  = max over S of  w(S) - d(w) binom(|S|, k)
//   disc_minus = max over S of  d(w) binom(|S|, k) - w(S)
// evaluated over all 2^n subsets with Gray-code incremental updates
// (n <= 22).  Witness subsets are reported sorted.
struct SubsetDiscrepancyReport {
  double disc_plus = 0.0;
  double disc_minus = 0.0;
  double disc = 0.0;
  std::vector<int> argmax_set;
  std::vector<int> argmin_set;
};

SubsetDiscrepancyReport single_disc(const Weighting& w);

}  // namespace hyperdisc

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hyperdisc/core.hpp"
#include "hyperdisc/discrepancy.hpp"

namespace hyperdisc {

// --- families of disjoint transpositions --------------------------------
//
// A family is an indexed list of disjoint vertex pairs (x_i, y_i); each
// index i names the transposition swapping x_i and y_i.  Because the
// pairs are disjoint the transpositions commute, so any index subset J
// yields a single well-defined involution: the product of the swaps in J.

struct TranspositionFamily {
  std::vector<std::pair<int, int>> pairs;

  // (0,1), (2,3), ..., floor(n/2) pairs
  static TranspositionFamily whole_vertex_set(int n);

  int size() const noexcept { return static_cast<int>(pairs.size()); }

  // all 2|I| vertices distinct and inside [0, n)
  void validate(int n) const;

  // The product of the transpositions named by `subset` (indices into
  // `pairs`, no duplicates), as a permutation of {0,...,n-1}.
  Permutation permutation(int n, std::span<const int> subset) const;
};

// The pair indices whose transposition actually moves the edge: those i
// with |edge intersect {x_i, y_i}| = 1.  Invariant under applying any
// index subset of the family to the edge.
std::vector<int> moved_indices(const TranspositionFamily& family,
                               std::span<const int> edge);

// <w,u> - <w_tau,u> for the single transposition tau = (x y), computed
// directly from the two inner products.  Mathematically this equals
// <w_xy, u_xy>, the inner product of the two difference weightings; the
// two routes are kept separate so they can check each other.
double delta(const Weighting& w, const Weighting& u, int x, int y);

// w relabelled by the product of the family's transpositions named by
// `subset`.  The product is an involution: applying it twice restores w.
Weighting apply_family(const Weighting& w, const TranspositionFamily& family,
                       std::span<const int> subset);

// Both sides of the half-sum identity
//
//   <w,u> - <w_tauJ,u> = 1/2 sum_e (w(e) - w(tauJ e)) (u(e) - u(tauJ e))
//
// evaluated independently: `direct` from the two inner products,
// `half_sum` from the edgewise product sum.
struct DecompositionCheck {
  double direct = 0.0;
  double half_sum = 0.0;
  double residual = 0.0;  // |direct - half_sum|
};

DecompositionCheck decomposition_check(const Weighting& w, const Weighting& u,
                                       const TranspositionFamily& family,
                                       std::span<const int> subset);

// The expected displacement E_J[<w,u> - <w_tauJ,u>], where J keeps each
// family index independently with probability p, expanded exactly as a
// polynomial in p: coefficients[r-1] carries the p^r coefficient for
// r = 1..k.  The constant term vanishes identically and the linear
// coefficient equals the sum of the single-swap displacements; what is
// left of those facts after floating-point evaluation is reported in the
// residual fields.  Degree can never exceed k (no edge meets more than k
// pairs), so for families larger than k the trailing coefficients also
// vanish; `high_order_residual` reports the largest one.
struct PolyCoeffs {
  std::vector<double> coefficients;   // A_1..A_k
  double constant_residual = 0.0;     // |A_0|
  double high_order_residual = 0.0;   // max |A_r| for r > k (0 if none)

  // sum_r A_r p^r over the reported coefficients
  double eval(double p) const;
};

// Exact subset enumeration: 2^|I| displacement evaluations, so |I| <= 16.
PolyCoeffs poly_coeffs(const Weighting& w, const Weighting& u,
                       const TranspositionFamily& family);

// --- the average displacement gamma -------------------------------------
//
// gamma(w, u) = E over independent uniform relabellings pi, sigma of
// |<w_pi, u_sigma> - <w_tau.pi, u_sigma>| for a transposition tau; the
// value does not depend on which transposition is chosen.

// Exact value, computed as the average over (rho uniform in S_n, {a,b}
// uniform vertex pair) of |<w_rho,u> - <w_(ab).rho,u>|: substituting
// rho = sigma^-1 pi turns the two-permutation average into this one,
// with the conjugated transposition uniform over pairs and independent
// of rho.  That reduction is derived here, not quoted, so the tests
// validate it against the two-permutation definition below.
// n! C(n,2) terms: limited to n <= 9.
double gamma_exact(const Weighting& w, const Weighting& u);

// Monte Carlo estimate straight from the definition: two independent
// uniform permutations per sample and the fixed transposition (x y).
// Serves as the independent oracle for gamma_exact; different choices of
// (x, y) must agree.
McEstimate gamma_mc(const Weighting& w, const Weighting& u,
                    std::int64_t samples, std::uint64_t seed, int x = 0,
                    int y = 1);

// --- lower-bound ratio report --------------------------------------------
//
// The discrepancy lower bounds state that disc+ * disc- exceeds a
// constant multiple of gamma^2 n^2 and that E_pi|<w_pi,u>| exceeds a
// constant multiple of gamma sqrt(n).  This report evaluates both sides
// with the exact engines and returns the two ratios
//
//   product_ratio = disc+ disc- / (gamma^2 n^2)
//   average_ratio = E_pi|<w_pi,u>| / (gamma sqrt(n))
//
// after replacing each input by its zero-total part (the quantities are
// unchanged by adding constants, and the bounds are stated for zero-total
// weightings).  gamma = 0 makes both bounds vacuous: the ratios are set
// to zero and `degenerate` is raised.
struct BoundRatios {
  double gamma = 0.0;
  double disc_plus = 0.0;
  double disc_minus = 0.0;
  double exp_abs = 0.0;
  double product_ratio = 0.0;
  double average_ratio = 0.0;
  bool degenerate = false;
};

BoundRatios bound_ratios(const Weighting& w, const Weighting& u);

}  // namespace hyperdisc

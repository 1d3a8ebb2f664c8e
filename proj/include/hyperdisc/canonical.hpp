#pragma once

#include <vector>

#include "hyperdisc/core.hpp"

namespace hyperdisc {

// A level-i pairing sequence: 2i distinct vertices read as ordered pairs
// (x_1, y_1, ..., x_i, y_i).
struct CanonicalSequence {
  std::vector<int> vertices;

  int level() const noexcept { return static_cast<int>(vertices.size()) / 2; }
  // The lexicographically smallest sequence (0, 1, ..., 2i-1).
  static CanonicalSequence first(int i);
  void validate(int n) const;  // even length, distinct, inside [0, n)
};

// The signed indicator weighting at level i: an edge A is "compatible"
// when it hits every pair {x_j, y_j} exactly once, and then carries
// weight (-1)^{|A ∩ {y_1,...,y_i}|}; incompatible edges carry 0.  Its
// support has 2^i * binom(n-2i, k-i) edges.  Level 0 is the all-ones
// weighting.  Requires 0 <= i <= k and n >= 2k.
Weighting phi(int n, int k, int i, const CanonicalSequence& seq);
Weighting phi(int n, int k, int i);  // uses CanonicalSequence::first(i)

// phi divided by binom(n-2i, k-i), so its l1 norm is 2^i.
Weighting phi_star(int n, int k, int i, const CanonicalSequence& seq);
Weighting phi_star(int n, int k, int i);

// Orthonormal basis of the span of all relabellings of phi at one level,
// produced by modified Gram-Schmidt (with reorthogonalization) over the
// phi weightings of every ordered 2i-tuple of distinct vertices.
struct SubspaceBasis {
  int n = 0;
  int k = 0;
  int level = 0;
  std::vector<Weighting> vectors;     // orthonormal
  std::int64_t spanning_count = 0;    // ordered tuples examined

  int rank() const noexcept { return static_cast<int>(vectors.size()); }
};

SubspaceBasis subspace_basis(int n, int k, int i);

// Orthogonal projection of w onto the spanned subspace.
Weighting project(const Weighting& w, const SubspaceBasis& basis);
Weighting project(const Weighting& w, int i);  // builds the basis first

// w written as a sum of one component per level 0..k, plus the l1 norm of
// what is left over (which should be noise: the levels fill the whole
// space).
struct Decomposition {
  std::vector<Weighting> components;
  double residual_l1 = 0.0;
};

Decomposition full_decompose(const Weighting& w);

// The k weightings phi_1, ..., phi_k rescaled so each has l1 norm exactly
// binom(n, k).  Every member has total weight 0, and any two members have
// identically zero pairing under every relabelling of either side.
std::vector<Weighting> orthoset(int n, int k);

}  // namespace hyperdisc

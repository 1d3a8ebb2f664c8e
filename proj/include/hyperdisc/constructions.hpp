#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperdisc/core.hpp"

namespace hyperdisc {

// --- Steiner triple systems ----------------------------------------------
//
// A Steiner triple system of order n is a set of n(n-1)/6 triples covering
// every vertex pair exactly once; they exist exactly for n = 1 or 3
// (mod 6).  The generators here build explicit systems (Bose for n = 3
// mod 6, Skolem for n = 1 mod 6) and then verify pair coverage
// exhaustively, so correctness never rests on the construction details.

struct SteinerSystem {
  int n = 0;
  std::vector<std::array<int, 3>> triples;  // each sorted; list sorted

  // 3-uniform 0/1 weighting with a one on every triple
  Weighting indicator() const;
};

// Explicit system of order n; requires n >= 7 and n = 1 or 3 (mod 6).
SteinerSystem steiner_triple_system(int n);

// Indicator weighting of steiner_triple_system(n).
Weighting sts(int n);

// --- crosscut indicators --------------------------------------------------
//
// The 3-uniform indicator of all triples meeting both `a` and its
// complement.  Any Steiner system meets this in exactly |A||B|/2 triples
// no matter how it is relabelled - each cross pair lies in exactly one
// triple and each straddling triple holds exactly two cross pairs - which
// makes (crosscut, STS) an unweighted pair with zero discrepancy.
Weighting crosscut(int n, std::span<const int> a);

// The (crosscut(n, a), sts(n)) pair.  Requires |A| |B| even, which the
// intersection formula |A||B|/2 forces; for every valid order n is odd,
// so one of |A|, |B| is even and the check can never fire - it guards
// against future relaxations of the order constraint.
std::pair<Weighting, Weighting> zero_disc_pair(int n, std::span<const int> a);

// --- random hypergraphs ----------------------------------------------------

// Indicator weighting with each edge present independently with
// probability p; reproducible per seed.
Weighting random_hypergraph(int n, int k, double p, std::uint64_t seed);

// --- composite generators ---------------------------------------------------

// The k scaled canonical weightings with pairwise zero discrepancy
// (delegates to orthoset; listed here as the generator entry point).
std::vector<Weighting> scaled_phi_family(int n, int k);

// Searches the cyclic translates of steiner_triple_system(n) for one
// sharing no triple with the base system.  Returns the first
// edge-disjoint pair found, or nullopt when no translate works - the
// search verifies rather than guarantees.
std::optional<std::pair<SteinerSystem, SteinerSystem>> disjoint_sts_pair(
    int n);

}  // namespace hyperdisc

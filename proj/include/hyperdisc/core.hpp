#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "hyperdisc/errors.hpp"

namespace hyperdisc {

inline constexpr int kMaxVertices = 64;
inline constexpr std::int64_t kMaxEdges = 10'000'000;

// Binomial coefficient from a precomputed table; 0 outside 0 <= k <= n.
// Exact for all n <= 64 (the largest entry fits in a signed 64-bit int).
std::int64_t binom(int n, int k) noexcept;

// Compensated (double-double) accumulator.  Keeps the running sum as an
// unevaluated hi + lo pair so that sums whose exact value needs a little
// more than 53 bits — in particular signed sums of a single repeated
// magnitude, which is what inner products of scaled +/-1 weightings
// produce — come out exact instead of accumulating rounding noise.
class ExactSum {
 public:
  void add(double x) noexcept {
    double s = hi_ + x;
    double b = s - hi_;
    double err = (hi_ - (s - b)) + (x - b);
    double t = lo_ + err;
    hi_ = s + t;
    lo_ = t - (hi_ - s);
  }
  double value() const noexcept { return hi_ + lo_; }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

// --- k-sets -----------------------------------------------------------
//
// Edges are k-element subsets of {0, ..., n-1}, stored sorted ascending
// and addressed by colexicographic rank:
//
//   rank{v_0 < v_1 < ... < v_{k-1}} = sum_j binom(v_j, j+1)
//
// so the edge {0,...,k-1} has rank 0 and {n-k,...,n-1} has rank
// binom(n,k)-1.  k = 0 is allowed: the single empty edge has rank 0.

// Rank of a sorted k-set.  Throws input_error if the vertices are not
// strictly increasing or lie outside [0, n).
std::int64_t rank_kset(std::span<const int> vertices, int n);

// Inverse of rank_kset.
std::vector<int> unrank_kset(std::int64_t rank, int n, int k);

// Visits every k-subset of {0,...,n-1} in colexicographic order, i.e. in
// increasing rank order.  visit(vertices, rank).
template <typename F>
void for_each_kset(int n, int k, F&& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  std::int64_t rank = 0;
  for (;;) {
    visit(std::span<const int>(v), rank);
    ++rank;
    int j = 0;
    while (j < k && (j + 1 < k ? v[j] + 1 == v[j + 1] : v[j] + 1 == n)) ++j;
    if (j == k) break;
    ++v[j];
    for (int t = 0; t < j; ++t) v[t] = t;
  }
}

// --- permutations ------------------------------------------------------

// A permutation of {0,...,n-1} stored as its image table.
struct Permutation {
  std::vector<int> images;  // images[v] = pi(v)

  Permutation() = default;
  explicit Permutation(std::vector<int> imgs);  // validates bijectivity
  static Permutation identity(int n);

  int n() const noexcept { return static_cast<int>(images.size()); }
  int operator()(int v) const { return images[v]; }
  Permutation inverse() const;
  bool operator==(const Permutation&) const = default;
};

// (outer * inner)(v) = outer(inner(v)).
Permutation compose(const Permutation& outer, const Permutation& inner);

// --- weightings ---------------------------------------------------------

// A weighting of the k-subsets of an n-element vertex set: one double per
// edge, dense, indexed by colexicographic rank.  Construction enforces
// 0 <= k <= n <= 64 and binom(n,k) <= 1e7.
class Weighting {
 public:
  Weighting(int n, int k);  // all weights zero
  Weighting(int n, int k, std::vector<double> weights);
  static Weighting constant(int n, int k, double value);
  static Weighting all_ones(int n, int k) { return constant(n, k, 1.0); }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::int64_t edge_count() const noexcept {
    return static_cast<std::int64_t>(weights_.size());
  }
  double operator[](std::int64_t rank) const { return weights_[rank]; }
  double& operator[](std::int64_t rank) { return weights_[rank]; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  double total() const;    // total weight w(V)
  double density() const;  // w(V) / binom(n,k)
  double l1_norm() const;

  bool same_shape(const Weighting& other) const noexcept {
    return n_ == other.n_ && k_ == other.k_;
  }

 private:
  int n_;
  int k_;
  std::vector<double> weights_;
};

// Sum over edges of w(e) * u(e).  Shapes must match.
double inner(const Weighting& w, const Weighting& u);

// Total weight of the sub-hypergraph induced on a vertex subset: the sum
// of w(e) over all edges e contained in `vertices`.  Zero when the subset
// has fewer than k vertices.
double induced_weight(const Weighting& w, std::span<const int> vertices);

// The relabelled weighting w_pi with w_pi(e) = w(pi^{-1}(e)), so that
// permute(permute(w, rho), pi) == permute(w, compose(pi, rho)).
Weighting permute(const Weighting& w, const Permutation& pi);

// Difference weighting on V minus {x, y}: a (k-1)-uniform weighting on
// n-2 vertices (relabelled order-preservingly to 0..n-3) with
//
//   w_xy(e) = w(e + x) - w(e + y).
//
// Requires k >= 1 and x != y.
Weighting diff_weighting(const Weighting& w, int x, int y);

// Splits w into (w0, w1) where w0 is constant with each edge carrying the
// density d(w) and w1 = w - w0 has total weight ~0.
std::pair<Weighting, Weighting> split_constant(const Weighting& w);

namespace detail {

// For a fixed vertex pair (x, y): the three-way rank correspondence
// between (k-1)-subsets f of V minus {x,y} (compressed labels, colex
// order) and the k-sets f+x and f+y in the original labelling.  Shared by
// the difference-weighting, transposition-delta and search inner loops.
struct PairDiffIndex {
  std::vector<std::int64_t> with_x;  // rank of f + x, indexed by rank of f
  std::vector<std::int64_t> with_y;  // rank of f + y
};

PairDiffIndex build_pair_diff_index(int n, int k, int x, int y);

// Throws input_error unless `vertices` is strictly increasing inside
// [0, n).  `what` names the offending argument in the message.
void check_vertex_set(std::span<const int> vertices, int n, const char* what);

}  // namespace detail

}  // namespace hyperdisc

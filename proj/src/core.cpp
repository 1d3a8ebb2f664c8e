#include "hyperdisc/core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace hyperdisc {

namespace {

struct BinomTable {
  std::array<std::array<std::int64_t, kMaxVertices + 1>, kMaxVertices + 1> c{};
  BinomTable() {
    for (int n = 0; n <= kMaxVertices; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const BinomTable g_binom;

}  // namespace

std::int64_t binom(int n, int k) noexcept {
  if (n < 0 || k < 0 || k > n || n > kMaxVertices) return 0;
  return g_binom.c[n][k];
}

namespace detail {

void check_vertex_set(std::span<const int> vertices, int n, const char* what) {
  int prev = -1;
  for (int v : vertices) {
    if (v < 0 || v >= n)
      throw input_error(std::string(what) + ": vertex " + std::to_string(v) +
                        " outside [0, " + std::to_string(n) + ")");
    if (v <= prev)
      throw input_error(std::string(what) +
                        ": vertices must be strictly increasing");
    prev = v;
  }
}

PairDiffIndex build_pair_diff_index(int n, int k, int x, int y) {
  if (x == y || x < 0 || y < 0 || x >= n || y >= n)
    throw input_error("pair (x, y) must be two distinct vertices");
  if (k < 1) throw input_error("difference weighting needs k >= 1");
  // rest[i] = i-th vertex of V minus {x, y} in increasing order
  std::vector<int> rest;
  rest.reserve(n - 2);
  for (int v = 0; v < n; ++v)
    if (v != x && v != y) rest.push_back(v);

  PairDiffIndex idx;
  const std::int64_t m = binom(n - 2, k - 1);
  idx.with_x.resize(m);
  idx.with_y.resize(m);
  std::vector<int> edge(k);
  auto insert_ranked = [&](std::span<const int> f, int extra) {
    int j = 0;
    while (j < static_cast<int>(f.size()) && f[j] < extra) {
      edge[j] = f[j];
      ++j;
    }
    edge[j] = extra;
    for (; j < static_cast<int>(f.size()); ++j) edge[j + 1] = f[j];
    std::int64_t r = 0;
    for (int t = 0; t < k; ++t) r += binom(edge[t], t + 1);
    return r;
  };
  std::vector<int> mapped(k - 1);
  for_each_kset(n - 2, k - 1, [&](std::span<const int> f, std::int64_t rf) {
    for (int t = 0; t < k - 1; ++t) mapped[t] = rest[f[t]];
    idx.with_x[rf] = insert_ranked(mapped, x);
    idx.with_y[rf] = insert_ranked(mapped, y);
  });
  return idx;
}

}  // namespace detail

std::int64_t rank_kset(std::span<const int> vertices, int n) {
  detail::check_vertex_set(vertices, n, "k-set");
  std::int64_t r = 0;
  for (std::size_t j = 0; j < vertices.size(); ++j)
    r += binom(vertices[j], static_cast<int>(j) + 1);
  return r;
}

std::vector<int> unrank_kset(std::int64_t rank, int n, int k) {
  if (k < 0 || k > n)
    throw input_error("unrank_kset: k outside [0, n]");
  if (rank < 0 || rank >= binom(n, k))
    throw input_error("unrank_kset: rank " + std::to_string(rank) +
                      " outside [0, binom(n,k))");
  std::vector<int> v(k);
  for (int j = k; j >= 1; --j) {
    // largest vertex value whose j-subset count fits under the rank
    int lo = j - 1, hi = n - 1, best = j - 1;
    while (lo <= hi) {
      int mid = (lo + hi) / 2;
      if (binom(mid, j) <= rank) {
        best = mid;
        lo = mid + 1;
      } else {
        hi = mid - 1;
      }
    }
    v[j - 1] = best;
    rank -= binom(best, j);
    n = best;  // remaining vertices must be smaller
  }
  return v;
}

Permutation::Permutation(std::vector<int> imgs) : images(std::move(imgs)) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
      throw input_error("permutation image table is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images.resize(images.size());
  for (int v = 0; v < n(); ++v) inv.images[images[v]] = v;
  return inv;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.n() != inner.n())
    throw input_error("compose: permutations act on different vertex counts");
  Permutation r;
  r.images.resize(outer.n());
  for (int v = 0; v < outer.n(); ++v) r.images[v] = outer(inner(v));
  return r;
}

Weighting::Weighting(int n, int k) : n_(n), k_(k) {
  if (k < 0 || n < k)
    throw input_error("weighting needs 0 <= k <= n");
  if (n > kMaxVertices)
    throw capacity_error("weighting: n > " + std::to_string(kMaxVertices) +
                         " vertices unsupported");
  std::int64_t m = binom(n, k);
  if (m > kMaxEdges)
    throw capacity_error("weighting: binom(n,k) = " + std::to_string(m) +
                         " exceeds the dense-storage cap of " +
                         std::to_string(kMaxEdges));
  weights_.assign(static_cast<std::size_t>(m), 0.0);
}

Weighting::Weighting(int n, int k, std::vector<double> weights)
    : Weighting(n, k) {
  if (static_cast<std::int64_t>(weights.size()) != binom(n, k))
    throw input_error("weighting: expected binom(n,k) = " +
                      std::to_string(binom(n, k)) + " weights, got " +
                      std::to_string(weights.size()));
  for (double x : weights)
    if (!std::isfinite(x))
      throw input_error("weighting: weights must be finite");
  weights_ = std::move(weights);
}

Weighting Weighting::constant(int n, int k, double value) {
  Weighting w(n, k);
  std::fill(w.weights_.begin(), w.weights_.end(), value);
  return w;
}

double Weighting::total() const {
  ExactSum s;
  for (double x : weights_) s.add(x);
  return s.value();
}

double Weighting::density() const {
  return total() / static_cast<double>(binom(n_, k_));
}

double Weighting::l1_norm() const {
  ExactSum s;
  for (double x : weights_) s.add(std::abs(x));
  return s.value();
}

double inner(const Weighting& w, const Weighting& u) {
  if (!w.same_shape(u))
    throw input_error("inner: weightings have different (n, k)");
  ExactSum s;
  const auto& a = w.weights();
  const auto& b = u.weights();
  for (std::size_t i = 0; i < a.size(); ++i) s.add(a[i] * b[i]);
  return s.value();
}

double induced_weight(const Weighting& w, std::span<const int> vertices) {
  detail::check_vertex_set(vertices, w.n(), "induced_weight subset");
  const int s = static_cast<int>(vertices.size());
  const int k = w.k();
  if (s < k) return 0.0;
  ExactSum sum;
  std::vector<int> edge(k);
  for_each_kset(s, k, [&](std::span<const int> f, std::int64_t) {
    std::int64_t r = 0;
    for (int t = 0; t < k; ++t) r += binom(vertices[f[t]], t + 1);
    sum.add(w[r]);
  });
  return sum.value();
}

Weighting permute(const Weighting& w, const Permutation& pi) {
  if (pi.n() != w.n())
    throw input_error("permute: permutation size differs from vertex count");
  Weighting out(w.n(), w.k());
  const int k = w.k();
  std::vector<int> img(k);
  for_each_kset(w.n(), k, [&](std::span<const int> f, std::int64_t rf) {
    for (int t = 0; t < k; ++t) img[t] = pi(f[t]);
    std::sort(img.begin(), img.end());
    std::int64_t r = 0;
    for (int t = 0; t < k; ++t) r += binom(img[t], t + 1);
    out[r] = w[rf];  // out(pi(f)) = w(f), i.e. out(e) = w(pi^{-1} e)
  });
  return out;
}

Weighting diff_weighting(const Weighting& w, int x, int y) {
  if (w.k() < 1) throw input_error("diff_weighting: needs k >= 1");
  auto idx = detail::build_pair_diff_index(w.n(), w.k(), x, y);
  Weighting out(w.n() - 2, w.k() - 1);
  for (std::size_t i = 0; i < idx.with_x.size(); ++i)
    out[static_cast<std::int64_t>(i)] = w[idx.with_x[i]] - w[idx.with_y[i]];
  return out;
}

std::pair<Weighting, Weighting> split_constant(const Weighting& w) {
  const double d = w.density();
  Weighting w0 = Weighting::constant(w.n(), w.k(), d);
  Weighting w1(w.n(), w.k());
  for (std::int64_t r = 0; r < w.edge_count(); ++r) w1[r] = w[r] - d;
  return {std::move(w0), std::move(w1)};
}

}  // namespace hyperdisc

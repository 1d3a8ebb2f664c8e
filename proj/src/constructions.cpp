#include "hyperdisc/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hyperdisc/canonical.hpp"
#include "hyperdisc/rng.hpp"

namespace hyperdisc {

namespace {

std::array<int, 3> sorted_triple(int a, int b, int c) {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Exhaustive self-check: every pair covered exactly once, right count.
void verify_steiner(const SteinerSystem& s) {
  const int n = s.n;
  if (static_cast<std::int64_t>(s.triples.size()) !=
      static_cast<std::int64_t>(n) * (n - 1) / 6)
    throw std::logic_error("steiner self-check: wrong triple count");
  std::vector<int> covered(static_cast<std::size_t>(n) * n, 0);
  for (const auto& t : s.triples) {
    if (t[0] < 0 || t[0] >= t[1] || t[1] >= t[2] || t[2] >= n)
      throw std::logic_error("steiner self-check: malformed triple");
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) ++covered[t[i] * n + t[j]];
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (covered[a * n + b] != 1)
        throw std::logic_error("steiner self-check: pair {" +
                               std::to_string(a) + "," + std::to_string(b) +
                               "} covered " +
                               std::to_string(covered[a * n + b]) + " times");
}

// n = 3m with m odd: vertices Z_m x {0,1,2} encoded as i + layer*m.
// The layer-preserving triples use the idempotent commutative quasigroup
// i*j = (i+j)/2 on Z_m (division by the inverse of 2, which exists
// because m is odd).
SteinerSystem bose(int n) {
  const int m = n / 3;
  const int half = (m + 1) / 2;  // inverse of 2 mod m
  SteinerSystem s;
  s.n = n;
  auto vert = [m](int i, int layer) { return i + layer * m; };
  for (int i = 0; i < m; ++i)
    s.triples.push_back(sorted_triple(vert(i, 0), vert(i, 1), vert(i, 2)));
  for (int layer = 0; layer < 3; ++layer)
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const int q = static_cast<int>(
            (static_cast<std::int64_t>(half) * (i + j)) % m);
        s.triples.push_back(
            sorted_triple(vert(i, layer), vert(j, layer),
                          vert(q, (layer + 1) % 3)));
      }
  return s;
}

// n = 6t+1: vertices {inf} + Z_2t x {1,2,3}, inf encoded as n-1 and
// (i, layer) as i + (layer-1)*2t.  Uses the half-idempotent commutative
// quasigroup i*j = h(i+j mod 2t) with h(2s) = s, h(2s+1) = s+t.
SteinerSystem skolem(int n) {
  const int t = n / 6;
  const int q = 2 * t;
  const int inf = n - 1;
  SteinerSystem s;
  s.n = n;
  auto vert = [q](int i, int layer) { return i + (layer - 1) * q; };
  auto h = [t](int v) { return v % 2 == 0 ? v / 2 : v / 2 + t; };
  for (int i = 0; i < t; ++i)
    s.triples.push_back(sorted_triple(vert(i, 1), vert(i, 2), vert(i, 3)));
  for (int layer = 1; layer <= 3; ++layer) {
    const int next = layer % 3 + 1;
    for (int i = 0; i < t; ++i)
      s.triples.push_back(
          sorted_triple(inf, vert(t + i, layer), vert(i, next)));
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j)
        s.triples.push_back(sorted_triple(vert(i, layer), vert(j, layer),
                                          vert(h((i + j) % q), next)));
  }
  return s;
}

}  // namespace

Weighting SteinerSystem::indicator() const {
  Weighting w(n, 3);
  for (const auto& t : triples) w[rank_kset(t, n)] = 1.0;
  return w;
}

SteinerSystem steiner_triple_system(int n) {
  if (n < 7)
    throw input_error("steiner systems here start at order 7");
  if (n % 6 != 1 && n % 6 != 3)
    throw input_error("steiner systems exist only for orders 1 or 3 mod 6; " +
                      std::to_string(n) + " is " + std::to_string(n % 6) +
                      " mod 6");
  SteinerSystem s = n % 6 == 3 ? bose(n) : skolem(n);
  std::sort(s.triples.begin(), s.triples.end());
  verify_steiner(s);
  return s;
}

Weighting sts(int n) { return steiner_triple_system(n).indicator(); }

Weighting crosscut(int n, std::span<const int> a) {
  detail::check_vertex_set(a, n, "crosscut set");
  if (a.empty())
    throw input_error("crosscut set must be nonempty");
  if (static_cast<int>(a.size()) >= n)
    throw input_error("crosscut set must leave some vertices outside");
  std::vector<bool> in_a(n, false);
  for (int v : a) in_a[v] = true;
  Weighting w(n, 3);
  for_each_kset(n, 3, [&](std::span<const int> f, std::int64_t r) {
    const int hits = in_a[f[0]] + in_a[f[1]] + in_a[f[2]];
    if (hits > 0 && hits < 3) w[r] = 1.0;
  });
  return w;
}

std::pair<Weighting, Weighting> zero_disc_pair(int n,
                                               std::span<const int> a) {
  Weighting g = crosscut(n, a);
  Weighting h = sts(n);
  const std::int64_t product =
      static_cast<std::int64_t>(a.size()) * (n - static_cast<int>(a.size()));
  if (product % 2 != 0)
    throw input_error(
        "the two sides must have an even product: every relabelled system "
        "meets the crosscut in |A||B|/2 triples, so |A||B| = " +
        std::to_string(product) + " cannot be odd");
  return {std::move(g), std::move(h)};
}

Weighting random_hypergraph(int n, int k, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw input_error("edge probability must lie in [0, 1]");
  Weighting w(n, k);
  auto rng = make_rng(seed, /*stream=*/4, 0);
  for (std::int64_t r = 0; r < w.edge_count(); ++r)
    if (next_unit(rng) < p) w[r] = 1.0;
  return w;
}

std::vector<Weighting> scaled_phi_family(int n, int k) {
  return orthoset(n, k);
}

std::optional<std::pair<SteinerSystem, SteinerSystem>> disjoint_sts_pair(
    int n) {
  const SteinerSystem base = steiner_triple_system(n);
  for (int shift = 1; shift < n; ++shift) {
    SteinerSystem moved;
    moved.n = n;
    for (const auto& t : base.triples)
      moved.triples.push_back(sorted_triple(
          (t[0] + shift) % n, (t[1] + shift) % n, (t[2] + shift) % n));
    std::sort(moved.triples.begin(), moved.triples.end());
    verify_steiner(moved);  // a relabelling is always a system; make sure
    bool shared = false;
    std::size_t i = 0, j = 0;
    while (i < base.triples.size() && j < moved.triples.size()) {
      if (base.triples[i] == moved.triples[j]) {
        shared = true;
        break;
      }
      if (base.triples[i] < moved.triples[j])
        ++i;
      else
        ++j;
    }
    if (!shared) return std::make_pair(base, moved);
  }
  return std::nullopt;
}

}  // namespace hyperdisc

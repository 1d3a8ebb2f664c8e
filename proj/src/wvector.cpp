#include "hyperdisc/wvector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyperdisc/rng.hpp"

namespace hyperdisc {

namespace {

// <w, phi(pairs)> where the level is pairs.size()/2 and `rest` lists the
// vertices outside the pairing in increasing order.  `pairs` holds
// (x_1, y_1, x_2, y_2, ...).
double phi_inner(const Weighting& w, std::span<const int> pairs,
                 std::span<const int> rest) {
  const int i = static_cast<int>(pairs.size()) / 2;
  const int k = w.k();
  ExactSum acc;
  std::vector<int> chosen(i), edge(k);
  for (unsigned mask = 0; mask < (1u << i); ++mask) {
    int parity = 0;
    for (int j = 0; j < i; ++j) {
      const bool take_y = (mask >> j) & 1u;
      chosen[j] = pairs[2 * j + (take_y ? 1 : 0)];
      parity ^= take_y ? 1 : 0;
    }
    std::sort(chosen.begin(), chosen.end());
    const double sign = parity ? -1.0 : 1.0;
    for_each_kset(static_cast<int>(rest.size()), k - i,
                  [&](std::span<const int> f, std::int64_t) {
                    int a = 0, b = 0;
                    std::int64_t r = 0;
                    for (int t = 0; t < k; ++t) {
                      const int fv =
                          b < k - i ? rest[f[b]] : kMaxVertices + 1;
                      if (a < i && chosen[a] < fv)
                        edge[t] = chosen[a++];
                      else
                        edge[t] = rest[f[b++]];
                      r += binom(edge[t], t + 1);
                    }
                    acc.add(sign * w[r]);
                  });
  }
  return acc.value();
}

// Double factorial (2i-1)!! = number of perfect matchings on 2i points.
std::int64_t matchings(int i) {
  std::int64_t m = 1;
  for (int t = 3; t <= 2 * i - 1; t += 2) m *= t;
  return m;
}

// Visits every perfect matching of `subset` as a flattened pair list
// with x_j < y_j (the orientation does not matter for |inner|).
template <typename F>
void for_each_pairing(std::span<const int> subset, F&& visit) {
  const int m = static_cast<int>(subset.size());
  std::vector<int> pairs(m);
  std::vector<bool> used(m, false);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == m) {
      visit(std::span<const int>(pairs));
      return;
    }
    int first = 0;
    while (used[first]) ++first;
    used[first] = true;
    pairs[depth] = subset[first];
    for (int second = first + 1; second < m; ++second) {
      if (used[second]) continue;
      used[second] = true;
      pairs[depth + 1] = subset[second];
      self(self, depth + 2);
      used[second] = false;
    }
    used[first] = false;
  };
  rec(rec, 0);
}

WVector recursive_impl(const Weighting& w) {
  const int n = w.n(), k = w.k();
  WVector out;
  out.n = n;
  out.k = k;
  out.values.assign(k + 1, 0.0);
  out.values[0] = std::abs(w.density());
  if (k == 0) return out;
  std::vector<ExactSum> acc(k);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const WVector sub = recursive_impl(diff_weighting(w, x, y));
      for (int i = 1; i <= k; ++i) acc[i - 1].add(sub.values[i - 1]);
    }
  }
  const double pairs = static_cast<double>(n) * (n - 1);
  for (int i = 1; i <= k; ++i) out.values[i] = acc[i - 1].value() / pairs;
  return out;
}

void check_shape_for_profile(const Weighting& w) {
  if (w.n() < 2 * w.k())
    throw input_error("level profile needs n >= 2k");
}

}  // namespace

WVector wvector_recursive(const Weighting& w) {
  check_shape_for_profile(w);
  const double estimate = std::pow(static_cast<double>(w.n()), 2 * w.k()) *
                          static_cast<double>(binom(w.n(), w.k()));
  if (estimate > 1e9)
    throw capacity_error(
        "wvector_recursive: work estimate n^(2k)*binom(n,k) = " +
        std::to_string(estimate) + " exceeds 1e9; use wvector_canonical");
  return recursive_impl(w);
}

WVector wvector_canonical(const Weighting& w) {
  check_shape_for_profile(w);
  const int n = w.n(), k = w.k();
  double cost = 0.0;
  for (int i = 1; i <= k; ++i)
    cost += static_cast<double>(binom(n, 2 * i)) *
            static_cast<double>(matchings(i)) *
            static_cast<double>((std::int64_t{1} << i) * binom(n - 2 * i, k - i));
  if (cost > 2e9)
    throw capacity_error("wvector_canonical: work estimate " +
                         std::to_string(cost) + " exceeds 2e9");

  WVector out;
  out.n = n;
  out.k = k;
  out.values.assign(k + 1, 0.0);
  out.values[0] = std::abs(w.density());
  std::vector<int> rest(n - 2);
  for (int i = 1; i <= k; ++i) {
    ExactSum acc;
    std::int64_t families = 0;
    rest.resize(n - 2 * i);
    for_each_kset(n, 2 * i, [&](std::span<const int> subset, std::int64_t) {
      {  // complement of the subset, increasing
        int t = 0, s = 0;
        for (int v = 0; v < n; ++v) {
          if (s < 2 * i && subset[s] == v)
            ++s;
          else
            rest[t++] = v;
        }
      }
      for_each_pairing(subset, [&](std::span<const int> pairs) {
        ++families;
        acc.add(std::abs(phi_inner(w, pairs, rest)));
      });
    });
    out.values[i] = acc.value() /
                    (static_cast<double>(families) *
                     static_cast<double>(binom(n - 2 * i, k - i)));
  }
  return out;
}

WVector wvector_mc(const Weighting& w, std::int64_t samples,
                   std::uint64_t seed) {
  check_shape_for_profile(w);
  if (samples < 1)
    throw input_error("wvector_mc: needs at least one sample");
  const int n = w.n(), k = w.k();
  WVector out;
  out.n = n;
  out.k = k;
  out.values.assign(k + 1, 0.0);
  out.std_errors.assign(k + 1, 0.0);
  out.values[0] = std::abs(w.density());
  if (k == 0) return out;

  std::vector<ExactSum> sum(k), sumsq(k);
  std::vector<int> rest;
  for (std::int64_t s = 0; s < samples; ++s) {
    auto rng = make_rng(seed, /*stream=*/1, static_cast<std::uint64_t>(s));
    const std::vector<int> tuple = random_distinct(n, 2 * k, rng);
    for (int i = 1; i <= k; ++i) {
      std::span<const int> pairs(tuple.data(), 2 * i);
      rest.clear();
      for (int v = 0; v < n; ++v) {
        if (std::find(pairs.begin(), pairs.end(), v) == pairs.end())
          rest.push_back(v);
      }
      const double value = std::abs(phi_inner(w, pairs, rest)) /
                           static_cast<double>(binom(n - 2 * i, k - i));
      sum[i - 1].add(value);
      sumsq[i - 1].add(value * value);
    }
  }
  const double ns = static_cast<double>(samples);
  for (int i = 1; i <= k; ++i) {
    const double mean = sum[i - 1].value() / ns;
    out.values[i] = mean;
    if (samples > 1) {
      const double var =
          std::max(0.0, (sumsq[i - 1].value() - ns * mean * mean) /
                            (ns - 1.0));
      out.std_errors[i] = std::sqrt(var / ns);
    }
  }
  return out;
}

WVectorBounds wvector_bounds(const Weighting& w) {
  WVectorBounds out;
  out.wvector = wvector_canonical(w);
  const double l1 = w.l1_norm();
  out.degenerate = (l1 == 0.0);
  const double per_edge = l1 / static_cast<double>(binom(w.n(), w.k()));
  ExactSum total, caps;
  for (int i = 0; i <= w.k(); ++i) {
    out.level_caps.push_back(std::ldexp(per_edge, i));  // 2^i * l1 / binom
    total.add(out.wvector.values[i]);
    caps.add(out.level_caps.back());
  }
  out.sum = total.value();
  out.cap_sum = caps.value();
  out.normalized_sum =
      out.degenerate
          ? 0.0
          : out.sum * std::pow(static_cast<double>(w.n()), w.k()) / l1;
  return out;
}

PairLowerBounds pair_lower_bounds(const Weighting& w, const Weighting& u) {
  if (!w.same_shape(u))
    throw input_error("pair_lower_bounds: weightings have different (n, k)");
  const WVector wv = wvector_canonical(w);
  const WVector uv = wvector_canonical(u);
  PairLowerBounds out;
  const double n = static_cast<double>(w.n());
  const int k = w.k();
  ExactSum disc_sum, exp_sum;
  for (int i = 0; i <= k; ++i) {
    const double prod = wv.values[i] * uv.values[i];
    out.level_products.push_back(prod);
    if (i >= 1) disc_sum.add(std::pow(n, -i) * prod * prod);
    exp_sum.add(std::pow(n, -0.5 * i) * prod);
  }
  out.disc_product_sum = std::pow(n, 2 * k + 1) * disc_sum.value();
  out.expected_abs_sum = std::pow(n, k) * exp_sum.value();
  return out;
}

std::vector<std::vector<std::size_t>> partition_by_wvector(
    std::span<const Weighting> family) {
  if (family.empty()) return {};
  const int n = family[0].n(), k = family[0].k();
  if (k < 1)
    throw input_error("partition_by_wvector: needs k >= 1");
  std::vector<std::vector<std::size_t>> classes(k);
  for (std::size_t idx = 0; idx < family.size(); ++idx) {
    const Weighting& w = family[idx];
    if (w.n() != n || w.k() != k)
      throw input_error("partition_by_wvector: mixed shapes in the family");
    if (std::abs(w.total()) > 1e-9 * std::max(1.0, w.l1_norm()))
      throw input_error(
          "partition_by_wvector: member " + std::to_string(idx) +
          " has nonzero total weight");
    const WVector wv = wvector_canonical(w);
    int best = 1;
    for (int i = 2; i <= k; ++i)
      if (wv.values[i] > wv.values[best]) best = i;
    classes[best - 1].push_back(idx);
  }
  return classes;
}

double mean_local_difference(const Weighting& w) {
  if (w.k() < 1)
    throw input_error("mean_local_difference: needs k >= 1");
  const int n = w.n();
  ExactSum acc;
  std::int64_t terms = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const auto idx = detail::build_pair_diff_index(n, w.k(), x, y);
      for (std::size_t f = 0; f < idx.with_x.size(); ++f) {
        acc.add(std::abs(w[idx.with_x[f]] - w[idx.with_y[f]]));
        ++terms;
      }
    }
  }
  return acc.value() / static_cast<double>(terms);
}

}  // namespace hyperdisc

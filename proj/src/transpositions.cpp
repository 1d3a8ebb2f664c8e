#include "hyperdisc/transpositions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyperdisc/rng.hpp"

namespace hyperdisc {

TranspositionFamily TranspositionFamily::whole_vertex_set(int n) {
  TranspositionFamily fam;
  for (int i = 0; 2 * i + 1 < n; ++i) fam.pairs.emplace_back(2 * i, 2 * i + 1);
  return fam;
}

void TranspositionFamily::validate(int n) const {
  if (size() > n / 2)
    throw input_error("transposition family: more than floor(n/2) pairs");
  std::vector<bool> seen(n, false);
  for (const auto& [x, y] : pairs) {
    for (int v : {x, y}) {
      if (v < 0 || v >= n)
        throw input_error("transposition family: vertex " +
                          std::to_string(v) + " outside [0, " +
                          std::to_string(n) + ")");
      if (seen[v])
        throw input_error("transposition family: vertex " +
                          std::to_string(v) + " used twice");
      seen[v] = true;
    }
  }
}

namespace {

// Validated sorted copy of a subset of family indices.
std::vector<int> checked_subset(const TranspositionFamily& family,
                                std::span<const int> subset) {
  std::vector<int> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= family.size())
      throw input_error("family subset: index " + std::to_string(s[i]) +
                        " outside the family");
    if (i > 0 && s[i] == s[i - 1])
      throw input_error("family subset: index " + std::to_string(s[i]) +
                        " repeated");
  }
  return s;
}

}  // namespace

Permutation TranspositionFamily::permutation(
    int n, std::span<const int> subset) const {
  validate(n);
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  for (int i : checked_subset(*this, subset))
    std::swap(images[pairs[i].first], images[pairs[i].second]);
  return Permutation(std::move(images));
}

std::vector<int> moved_indices(const TranspositionFamily& family,
                               std::span<const int> edge) {
  std::vector<int> out;
  for (int i = 0; i < family.size(); ++i) {
    const auto& [x, y] = family.pairs[i];
    int hits = 0;
    for (int v : edge) hits += (v == x) + (v == y);
    if (hits == 1) out.push_back(i);
  }
  return out;
}

double delta(const Weighting& w, const Weighting& u, int x, int y) {
  if (!w.same_shape(u)) throw input_error("delta: shapes differ");
  if (x == y) throw input_error("delta: the two vertices must differ");
  const int n = w.n();
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw input_error("delta: vertex outside [0, n)");
  std::swap(images[x], images[y]);
  return inner(w, u) - inner(permute(w, Permutation(std::move(images))), u);
}

Weighting apply_family(const Weighting& w, const TranspositionFamily& family,
                       std::span<const int> subset) {
  return permute(w, family.permutation(w.n(), subset));
}

DecompositionCheck decomposition_check(const Weighting& w, const Weighting& u,
                                       const TranspositionFamily& family,
                                       std::span<const int> subset) {
  if (!w.same_shape(u))
    throw input_error("decomposition_check: shapes differ");
  const Permutation tau = family.permutation(w.n(), subset);
  DecompositionCheck out;
  out.direct = inner(w, u) - inner(permute(w, tau), u);

  // half-sum side, evaluated edge by edge against the moved edge
  ExactSum acc;
  std::vector<int> moved(w.k());
  for_each_kset(w.n(), w.k(), [&](std::span<const int> f, std::int64_t r) {
    for (std::size_t t = 0; t < f.size(); ++t) moved[t] = tau(f[t]);
    std::sort(moved.begin(), moved.end());
    const std::int64_t rt = rank_kset(moved, w.n());
    acc.add((w[r] - w[rt]) * (u[r] - u[rt]));
  });
  out.half_sum = 0.5 * acc.value();
  out.residual = std::abs(out.direct - out.half_sum);
  return out;
}

double PolyCoeffs::eval(double p) const {
  double v = 0.0, pr = 1.0;
  for (double a : coefficients) {
    pr *= p;
    v += a * pr;
  }
  return v;
}

PolyCoeffs poly_coeffs(const Weighting& w, const Weighting& u,
                       const TranspositionFamily& family) {
  if (!w.same_shape(u)) throw input_error("poly_coeffs: shapes differ");
  family.validate(w.n());
  const int m = family.size();
  if (m > 16)
    throw capacity_error("poly_coeffs enumerates 2^|I| subsets; |I| <= 16");

  // S_j = sum over |J| = j of the displacement D(J)
  std::vector<ExactSum> by_size(m + 1);
  const double base = inner(w, u);
  std::vector<int> subset;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    subset.clear();
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) subset.push_back(i);
    by_size[subset.size()].add(base - inner(apply_family(w, family, subset), u));
  }

  // E(p) = sum_j S_j p^j (1-p)^(m-j); expanding (1-p)^(m-j) gives
  // A_r = sum_{j<=r} (-1)^(r-j) C(m-j, r-j) S_j
  std::vector<double> a(m + 1);
  for (int r = 0; r <= m; ++r) {
    ExactSum coeff;
    for (int j = 0; j <= r; ++j) {
      const double c = static_cast<double>(binom(m - j, r - j));
      coeff.add(((r - j) % 2 == 0 ? c : -c) * by_size[j].value());
    }
    a[r] = coeff.value();
  }

  PolyCoeffs out;
  out.constant_residual = std::abs(a[0]);
  const int k = w.k();
  out.coefficients.assign(k, 0.0);
  for (int r = 1; r <= std::min(m, k); ++r) out.coefficients[r - 1] = a[r];
  for (int r = k + 1; r <= m; ++r)
    out.high_order_residual = std::max(out.high_order_residual, std::abs(a[r]));
  return out;
}

namespace {

constexpr int kMaxGammaExact = 9;

void check_gamma_args(const Weighting& w, const Weighting& u) {
  if (!w.same_shape(u)) throw input_error("gamma: shapes differ");
  if (w.n() < 2)
    throw input_error("gamma needs at least two vertices to transpose");
}

}  // namespace

double gamma_exact(const Weighting& w, const Weighting& u) {
  check_gamma_args(w, u);
  if (w.n() > kMaxGammaExact)
    throw capacity_error("gamma_exact averages n! C(n,2) terms; n <= " +
                         std::to_string(kMaxGammaExact) +
                         " (use gamma_mc beyond)");
  const int n = w.n(), k = w.k();
  if (k == 0) return 0.0;  // transpositions cannot move the empty edge

  const std::int64_t m = w.edge_count();
  std::vector<int> verts(static_cast<std::size_t>(m) * k);
  for_each_kset(n, k, [&](std::span<const int> f, std::int64_t r) {
    std::copy(f.begin(), f.end(), verts.begin() + r * k);
  });
  std::vector<detail::PairDiffIndex> pair_idx;
  for_each_kset(n, 2, [&](std::span<const int> f, std::int64_t) {
    pair_idx.push_back(detail::build_pair_diff_index(n, k, f[0], f[1]));
  });

  std::vector<double> v(m);  // w relabelled by the current rho
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  int mapped[16];
  ExactSum grand;
  std::int64_t count = 0;
  do {
    for (std::int64_t r = 0; r < m; ++r) {
      const int* f = verts.data() + r * k;
      for (int t = 0; t < k; ++t) {
        const int x = images[f[t]];
        int p = t;
        while (p > 0 && mapped[p - 1] > x) {
          mapped[p] = mapped[p - 1];
          --p;
        }
        mapped[p] = x;
      }
      std::int64_t rr = 0;
      for (int t = 0; t < k; ++t) rr += binom(mapped[t], t + 1);
      v[rr] = w[r];
    }
    for (const auto& idx : pair_idx) {
      ExactSum term;
      for (std::size_t f = 0; f < idx.with_x.size(); ++f)
        term.add((v[idx.with_x[f]] - v[idx.with_y[f]]) *
                 (u[idx.with_x[f]] - u[idx.with_y[f]]));
      grand.add(std::abs(term.value()));
    }
    ++count;
  } while (std::next_permutation(images.begin(), images.end()));
  return grand.value() /
         (static_cast<double>(count) * static_cast<double>(pair_idx.size()));
}

McEstimate gamma_mc(const Weighting& w, const Weighting& u,
                    std::int64_t samples, std::uint64_t seed, int x, int y) {
  check_gamma_args(w, u);
  if (samples < 1) throw input_error("gamma_mc: needs at least one sample");
  const int n = w.n();
  if (x == y || x < 0 || x >= n || y < 0 || y >= n)
    throw input_error("gamma_mc: invalid transposition pair");
  std::vector<int> tau_images(n);
  std::iota(tau_images.begin(), tau_images.end(), 0);
  std::swap(tau_images[x], tau_images[y]);
  const Permutation tau(std::move(tau_images));

  ExactSum sum, sumsq;
  for (std::int64_t s = 0; s < samples; ++s) {
    auto rng = make_rng(seed, /*stream=*/3, static_cast<std::uint64_t>(s));
    const auto pi = random_permutation(n, rng);
    const auto sigma = random_permutation(n, rng);
    const auto us = permute(u, sigma);
    const double val = std::abs(inner(permute(w, pi), us) -
                                inner(permute(w, compose(tau, pi)), us));
    sum.add(val);
    sumsq.add(val * val);
  }
  McEstimate est;
  est.samples = samples;
  const double ns = static_cast<double>(samples);
  est.mean = sum.value() / ns;
  if (samples > 1) {
    const double var =
        std::max(0.0, (sumsq.value() - ns * est.mean * est.mean) / (ns - 1.0));
    est.std_error = std::sqrt(var / ns);
  }
  return est;
}

BoundRatios bound_ratios(const Weighting& w, const Weighting& u) {
  if (!w.same_shape(u)) throw input_error("bound_ratios: shapes differ");
  if (w.n() > kMaxGammaExact)
    throw capacity_error("bound_ratios uses the exact engines; n <= " +
                         std::to_string(kMaxGammaExact));
  const Weighting w1 = split_constant(w).second;
  const Weighting u1 = split_constant(u).second;

  BoundRatios out;
  out.gamma = gamma_exact(w1, u1);
  const auto scan = scan_permutations(w1, u1);
  const double baseline = expected_intersection(w1, u1);
  out.disc_plus = scan.max_value - baseline;
  out.disc_minus = baseline - scan.min_value;
  out.exp_abs = scan.mean_abs;
  const int n = w.n();
  if (out.gamma > 0.0) {
    out.product_ratio = out.disc_plus * out.disc_minus /
                        (out.gamma * out.gamma * static_cast<double>(n) * n);
    out.average_ratio = out.exp_abs / (out.gamma * std::sqrt(n));
  } else {
    out.degenerate = true;
  }
  return out;
}

}  // namespace hyperdisc

#include "hyperdisc/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyperdisc {

namespace {

void check_phi_args(int n, int k, int i) {
  if (i < 0 || i > k)
    throw input_error("level must satisfy 0 <= i <= k");
  if (n < 2 * k)
    throw input_error("canonical weightings need n >= 2k");
}

}  // namespace

CanonicalSequence CanonicalSequence::first(int i) {
  CanonicalSequence s;
  s.vertices.resize(2 * i);
  std::iota(s.vertices.begin(), s.vertices.end(), 0);
  return s;
}

void CanonicalSequence::validate(int n) const {
  if (vertices.size() % 2 != 0)
    throw input_error("pairing sequence needs an even number of vertices");
  std::vector<bool> seen(n, false);
  for (int v : vertices) {
    if (v < 0 || v >= n)
      throw input_error("pairing sequence vertex " + std::to_string(v) +
                        " outside [0, " + std::to_string(n) + ")");
    if (seen[v])
      throw input_error("pairing sequence vertices must be distinct");
    seen[v] = true;
  }
}

namespace {

// Writes the +/-1 pattern of phi into `out` (assumed zeroed):
// one entry per (selection from each pair) x (filler from the rest).
void fill_phi(Weighting& out, int i, const CanonicalSequence& seq,
              double magnitude) {
  const int n = out.n();
  const int k = out.k();
  std::vector<int> rest;
  {
    std::vector<bool> used(n, false);
    for (int v : seq.vertices) used[v] = true;
    for (int v = 0; v < n; ++v)
      if (!used[v]) rest.push_back(v);
  }
  std::vector<int> chosen(i), edge(k);
  for (unsigned mask = 0; mask < (1u << i); ++mask) {
    int parity = 0;
    for (int j = 0; j < i; ++j) {
      const bool take_y = (mask >> j) & 1u;
      chosen[j] = seq.vertices[2 * j + (take_y ? 1 : 0)];
      parity ^= take_y ? 1 : 0;
    }
    std::sort(chosen.begin(), chosen.begin() + i);
    const double value = parity ? -magnitude : magnitude;
    for_each_kset(static_cast<int>(rest.size()), k - i,
                  [&](std::span<const int> f, std::int64_t) {
                    // merge chosen and the mapped filler, then rank
                    int a = 0, b = 0;
                    for (int t = 0; t < k; ++t) {
                      const int fv =
                          b < k - i ? rest[f[b]] : kMaxVertices + 1;
                      if (a < i && chosen[a] < fv)
                        edge[t] = chosen[a++];
                      else
                        edge[t] = rest[f[b++]];
                    }
                    std::int64_t r = 0;
                    for (int t = 0; t < k; ++t) r += binom(edge[t], t + 1);
                    out[r] = value;
                  });
  }
}

}  // namespace

Weighting phi(int n, int k, int i, const CanonicalSequence& seq) {
  check_phi_args(n, k, i);
  seq.validate(n);
  if (seq.level() != i)
    throw input_error("pairing sequence length does not match the level");
  Weighting out(n, k);
  fill_phi(out, i, seq, 1.0);
  return out;
}

Weighting phi(int n, int k, int i) {
  check_phi_args(n, k, i);
  return phi(n, k, i, CanonicalSequence::first(i));
}

Weighting phi_star(int n, int k, int i, const CanonicalSequence& seq) {
  check_phi_args(n, k, i);
  seq.validate(n);
  if (seq.level() != i)
    throw input_error("pairing sequence length does not match the level");
  Weighting out(n, k);
  fill_phi(out, i, seq, 1.0 / static_cast<double>(binom(n - 2 * i, k - i)));
  return out;
}

Weighting phi_star(int n, int k, int i) {
  check_phi_args(n, k, i);
  return phi_star(n, k, i, CanonicalSequence::first(i));
}

namespace {

// Visits every ordered tuple of `len` distinct vertices from [0, n).
template <typename F>
void for_each_injection(int n, int len, F&& visit) {
  std::vector<int> tuple(len);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == len) {
      visit(std::span<const int>(tuple));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      tuple[depth] = v;
      self(self, depth + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
}

}  // namespace

SubspaceBasis subspace_basis(int n, int k, int i) {
  check_phi_args(n, k, i);
  SubspaceBasis out;
  out.n = n;
  out.k = k;
  out.level = i;

  const std::int64_t dim = binom(n, k);
  std::vector<std::vector<double>> basis;
  // Every spanning vector has the same norm: sqrt(support size).
  const double full_norm =
      std::sqrt(static_cast<double>((std::int64_t{1} << i) * binom(n - 2 * i, k - i)));
  const double tol = 1e-9 * full_norm;

  CanonicalSequence seq;
  seq.vertices.resize(2 * i);
  std::vector<double> v(static_cast<std::size_t>(dim));
  for_each_injection(n, 2 * i, [&](std::span<const int> tuple) {
    ++out.spanning_count;
    if (static_cast<std::int64_t>(basis.size()) == dim) return;  // span is full
    std::copy(tuple.begin(), tuple.end(), seq.vertices.begin());
    Weighting cand(n, k);
    fill_phi(cand, i, seq, 1.0);
    std::copy(cand.weights().begin(), cand.weights().end(), v.begin());
    // modified Gram-Schmidt, two passes for numerical safety
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        double dot = 0.0;
        for (std::size_t t = 0; t < v.size(); ++t) dot += v[t] * b[t];
        for (std::size_t t = 0; t < v.size(); ++t) v[t] -= dot * b[t];
      }
    }
    double norm2 = 0.0;
    for (double x : v) norm2 += x * x;
    const double norm = std::sqrt(norm2);
    if (norm > tol) {
      std::vector<double> unit(v.size());
      for (std::size_t t = 0; t < v.size(); ++t) unit[t] = v[t] / norm;
      basis.push_back(std::move(unit));
    }
  });

  out.vectors.reserve(basis.size());
  for (auto& b : basis)
    out.vectors.emplace_back(n, k, std::move(b));
  return out;
}

Weighting project(const Weighting& w, const SubspaceBasis& basis) {
  if (w.n() != basis.n || w.k() != basis.k)
    throw input_error("project: weighting shape does not match the basis");
  Weighting out(w.n(), w.k());
  for (const auto& b : basis.vectors) {
    const double coeff = inner(w, b);
    for (std::int64_t r = 0; r < out.edge_count(); ++r)
      out[r] += coeff * b[r];
  }
  return out;
}

Weighting project(const Weighting& w, int i) {
  return project(w, subspace_basis(w.n(), w.k(), i));
}

Decomposition full_decompose(const Weighting& w) {
  Decomposition d;
  Weighting recon(w.n(), w.k());
  for (int i = 0; i <= w.k(); ++i) {
    d.components.push_back(project(w, i));
    const auto& c = d.components.back();
    for (std::int64_t r = 0; r < recon.edge_count(); ++r) recon[r] += c[r];
  }
  ExactSum res;
  for (std::int64_t r = 0; r < recon.edge_count(); ++r)
    res.add(std::abs(w[r] - recon[r]));
  d.residual_l1 = res.value();
  return d;
}

std::vector<Weighting> orthoset(int n, int k) {
  if (k < 1)
    throw input_error("orthoset needs k >= 1");
  if (n < 2 * k)
    throw input_error("orthoset needs n >= 2k");
  std::vector<Weighting> out;
  out.reserve(k);
  for (int i = 1; i <= k; ++i) {
    const double scale =
        static_cast<double>(binom(n, k)) /
        static_cast<double>((std::int64_t{1} << i) * binom(n - 2 * i, k - i));
    Weighting w(n, k);
    fill_phi(w, i, CanonicalSequence::first(i), scale);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace hyperdisc

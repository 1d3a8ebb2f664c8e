#include "hyperdisc/discrepancy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <string>
#include <thread>

#include "hyperdisc/rng.hpp"

namespace hyperdisc {

namespace {

constexpr int kMaxExhaustive = 10;  // n! relabellings up to 3.6M
constexpr int kMaxSubsetScan = 22;  // 2^n subsets up to 4.2M

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int t = 2; t <= n; ++t) f *= t;
  return f;
}

// Permutation with the given lexicographic rank among image sequences.
std::vector<int> nth_permutation(int n, std::int64_t rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> images;
  images.reserve(n);
  for (int left = n; left > 0; --left) {
    const std::int64_t block = factorial(left - 1);
    const int pick = static_cast<int>(rank / block);
    rank %= block;
    images.push_back(pool[pick]);
    pool.erase(pool.begin() + pick);
  }
  return images;
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct ScanChunk {
  double max_value = 0.0;
  double min_value = 0.0;
  std::vector<int> argmax;
  std::vector<int> argmin;
  ExactSum sum;
  ExactSum sum_abs;
};

// Scans lexicographic permutation ranks [from, to).
ScanChunk scan_range(const Weighting& w, const Weighting& u,
                     std::int64_t from, std::int64_t to) {
  if (from >= to) return {};
  const int n = w.n(), k = w.k();
  const std::int64_t m = w.edge_count();
  // flat vertex lists and a local binomial table keep the loop tight
  std::vector<int> verts(static_cast<std::size_t>(m) * k);
  for_each_kset(n, k, [&](std::span<const int> f, std::int64_t r) {
    std::copy(f.begin(), f.end(), verts.begin() + r * k);
  });
  std::array<std::array<std::int64_t, 16>, 16> bt{};
  for (int v = 0; v < 16; ++v)
    for (int j = 0; j < 16; ++j) bt[v][j] = binom(v, j);

  ScanChunk out;
  std::vector<int> images = nth_permutation(n, from);
  int mapped[16];
  bool first = true;
  for (std::int64_t idx = from; idx < to; ++idx) {
    ExactSum dot;
    for (std::int64_t r = 0; r < m; ++r) {
      const int* f = verts.data() + r * k;
      for (int t = 0; t < k; ++t) {
        // insertion sort of the mapped vertices
        const int x = images[f[t]];
        int p = t;
        while (p > 0 && mapped[p - 1] > x) {
          mapped[p] = mapped[p - 1];
          --p;
        }
        mapped[p] = x;
      }
      std::int64_t rr = 0;
      for (int t = 0; t < k; ++t) rr += bt[mapped[t]][t + 1];
      dot.add(w[r] * u[rr]);
    }
    const double value = dot.value();
    if (first || value > out.max_value) {
      out.max_value = value;
      out.argmax = images;
    }
    if (first || value < out.min_value) {
      out.min_value = value;
      out.argmin = images;
    }
    first = false;
    out.sum.add(value);
    out.sum_abs.add(std::abs(value));
    std::next_permutation(images.begin(), images.end());
  }
  return out;
}

}  // namespace

double expected_intersection(const Weighting& w, const Weighting& u) {
  if (!w.same_shape(u))
    throw input_error("expected_intersection: shapes differ");
  return w.total() * u.total() / static_cast<double>(binom(w.n(), w.k()));
}

PermutationScan scan_permutations(const Weighting& w, const Weighting& u,
                                  int threads) {
  if (!w.same_shape(u))
    throw input_error("permutation scan: shapes differ");
  if (w.n() > kMaxExhaustive)
    throw capacity_error(
        "exhaustive relabelling scan is limited to n <= " +
        std::to_string(kMaxExhaustive) + " (n! permutations); "
        "use disc_heuristic for larger n");
  const std::int64_t count = factorial(w.n());
  int t = std::min<std::int64_t>(resolve_threads(threads), count);

  std::vector<ScanChunk> chunks;
  if (t <= 1) {
    chunks.push_back(scan_range(w, u, 0, count));
  } else {
    std::vector<std::future<ScanChunk>> futs;
    const std::int64_t step = (count + t - 1) / t;
    for (int c = 1; c < t; ++c) {
      const std::int64_t from = std::min<std::int64_t>(c * step, count);
      const std::int64_t to = std::min<std::int64_t>(from + step, count);
      futs.push_back(std::async(std::launch::async, [&, from, to] {
        return scan_range(w, u, from, to);
      }));
    }
    chunks.push_back(scan_range(w, u, 0, std::min(step, count)));
    for (auto& f : futs) chunks.push_back(f.get());
  }

  PermutationScan out;
  out.count = count;
  ExactSum sum, sum_abs;
  bool first = true;
  for (auto& c : chunks) {
    if (c.argmax.empty()) continue;  // empty range
    if (first || c.max_value > out.max_value) {
      out.max_value = c.max_value;
      out.argmax = Permutation(c.argmax);
    }
    if (first || c.min_value < out.min_value) {
      out.min_value = c.min_value;
      out.argmin = Permutation(c.argmin);
    }
    first = false;
    sum.add(c.sum.value());
    sum_abs.add(c.sum_abs.value());
  }
  out.mean = sum.value() / static_cast<double>(count);
  out.mean_abs = sum_abs.value() / static_cast<double>(count);
  return out;
}

DiscrepancyReport disc_exact(const Weighting& w, const Weighting& u,
                             int threads) {
  const PermutationScan scan = scan_permutations(w, u, threads);
  DiscrepancyReport rep;
  rep.baseline = expected_intersection(w, u);
  rep.disc_plus = scan.max_value - rep.baseline;
  rep.disc_minus = rep.baseline - scan.min_value;
  rep.disc = std::max(rep.disc_plus, rep.disc_minus);
  rep.argmax = scan.argmax;
  rep.argmin = scan.argmin;
  rep.method = "exact";
  return rep;
}

double exp_abs_exact(const Weighting& w, const Weighting& u, int threads) {
  return scan_permutations(w, u, threads).mean_abs;
}

McEstimate exp_abs_mc(const Weighting& w, const Weighting& u,
                      std::int64_t samples, std::uint64_t seed) {
  if (!w.same_shape(u))
    throw input_error("exp_abs_mc: shapes differ");
  if (samples < 1)
    throw input_error("exp_abs_mc: needs at least one sample");
  ExactSum sum, sumsq;
  for (std::int64_t s = 0; s < samples; ++s) {
    auto rng = make_rng(seed, /*stream=*/2, static_cast<std::uint64_t>(s));
    const auto pi = random_permutation(w.n(), rng);
    const double v = std::abs(inner(permute(w, pi), u));
    sum.add(v);
    sumsq.add(v * v);
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

namespace {

// State for one local-search trajectory: the current relabelled copy of
// w, its permutation, and the intersection value (recomputed exactly
// after every accepted move; moves are cheap and exactness matters more).
struct SearchState {
  Weighting v;
  std::vector<int> images;
  std::vector<int> pos;  // pos[value] = location, the inverse table
  double value = 0.0;

  SearchState(const Weighting& w, const Permutation& pi, const Weighting& u)
      : v(permute(w, pi)), images(pi.images), pos(pi.inverse().images) {
    value = inner(v, u);
  }

  void apply_swap(const detail::PairDiffIndex& idx, int a, int b,
                  const Weighting& u) {
    for (std::size_t f = 0; f < idx.with_x.size(); ++f)
      std::swap(v[idx.with_x[f]], v[idx.with_y[f]]);
    const int xa = pos[a], xb = pos[b];
    images[xa] = b;
    images[xb] = a;
    std::swap(pos[a], pos[b]);
    value = inner(v, u);
  }
};

// <v_ab, u_ab>: the change <v,u> - <v_tau,u> for the transposition
// tau = (a b), via the difference-weighting identity.
double swap_delta(const Weighting& v, const Weighting& u,
                  const detail::PairDiffIndex& idx) {
  ExactSum acc;
  for (std::size_t f = 0; f < idx.with_x.size(); ++f)
    acc.add((v[idx.with_x[f]] - v[idx.with_y[f]]) *
            (u[idx.with_x[f]] - u[idx.with_y[f]]));
  return acc.value();
}

}  // namespace

DiscrepancyReport disc_heuristic(const Weighting& w, const Weighting& u,
                                 const SearchParams& params) {
  if (!w.same_shape(u))
    throw input_error("disc_heuristic: shapes differ");
  if (params.restarts < 1)
    throw input_error("disc_heuristic: restarts must be positive");
  if (params.max_sweeps < 0 || params.plateau_budget < 0)
    throw input_error("disc_heuristic: sweep and plateau budgets must be >= 0");
  if (params.annealing) {
    const auto& a = *params.annealing;
    if (!(a.initial_temperature > 0.0) || !(a.cooling > 0.0) ||
        a.cooling >= 1.0 || a.steps < 0)
      throw input_error("disc_heuristic: malformed annealing schedule");
  }

  const int n = w.n(), k = w.k();
  DiscrepancyReport rep;
  rep.method = "heuristic";
  rep.baseline = expected_intersection(w, u);
  if (k == 0 || n < 2) {
    // a relabelling cannot move anything
    rep.argmax = Permutation::identity(n);
    rep.argmin = rep.argmax;
    return rep;
  }

  // one difference index per unordered vertex pair, shared by every
  // restart; pairs are scanned in colexicographic order
  std::vector<std::pair<int, int>> pairs;
  std::vector<detail::PairDiffIndex> indices;
  for_each_kset(n, 2, [&](std::span<const int> f, std::int64_t) {
    pairs.emplace_back(f[0], f[1]);
    indices.push_back(detail::build_pair_diff_index(n, k, f[0], f[1]));
  });

  double best[2] = {0.0, 0.0};
  Permutation best_pi[2];
  for (int dir = 0; dir < 2; ++dir) {
    const double sign = dir == 0 ? 1.0 : -1.0;  // maximize, then minimize
    bool have = false;
    auto consider = [&](const SearchState& st) {
      if (!have || sign * st.value > sign * best[dir]) {
        best[dir] = st.value;
        best_pi[dir] = Permutation(st.images);
        have = true;
      }
    };

    for (int r = 0; r < params.restarts; ++r) {
      auto rng = make_rng(params.seed, /*stream=*/5,
                          2 * static_cast<std::uint64_t>(r) + dir);
      SearchState st(w, random_permutation(n, rng), u);
      consider(st);

      if (params.annealing) {
        double temp = params.annealing->initial_temperature;
        for (int step = 0; step < params.annealing->steps; ++step) {
          const std::size_t p = static_cast<std::size_t>(
              next_below(rng, pairs.size()));
          const double gain = -sign * swap_delta(st.v, u, indices[p]);
          if (gain >= 0.0 || next_unit(rng) < std::exp(gain / temp)) {
            st.apply_swap(indices[p], pairs[p].first, pairs[p].second, u);
            consider(st);
          }
          temp *= params.annealing->cooling;
        }
      }

      int plateau_left = params.plateau_budget;
      for (int sweep = 0; sweep < params.max_sweeps; ++sweep) {
        double best_gain = 0.0;
        std::size_t best_pair = pairs.size();
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          const double gain = -sign * swap_delta(st.v, u, indices[p]);
          if (best_pair == pairs.size() ? gain >= 0.0 : gain > best_gain) {
            best_gain = gain;
            best_pair = p;
          }
        }
        if (best_pair == pairs.size()) break;  // strictly downhill everywhere
        if (best_gain == 0.0) {
          if (plateau_left == 0) break;
          --plateau_left;
        }
        st.apply_swap(indices[best_pair], pairs[best_pair].first,
                      pairs[best_pair].second, u);
        consider(st);
      }
    }
  }

  rep.disc_plus = best[0] - rep.baseline;
  rep.disc_minus = rep.baseline - best[1];
  rep.disc = std::max(rep.disc_plus, rep.disc_minus);
  rep.argmax = best_pi[0];
  rep.argmin = best_pi[1];
  return rep;
}

SubsetDiscrepancyReport single_disc(const Weighting& w) {
  const int n = w.n(), k = w.k();
  if (n > kMaxSubsetScan)
    throw capacity_error("single_disc scans 2^n subsets and is limited to n <= " +
                         std::to_string(kMaxSubsetScan));
  SubsetDiscrepancyReport rep;
  if (k == 0) return rep;  // every subset matches its expectation exactly

  const double total = w.total();
  const double edges = static_cast<double>(binom(n, k));
  std::vector<double> expected(n + 1);
  for (int s = 0; s <= n; ++s)
    expected[s] = total * static_cast<double>(binom(s, k)) / edges;

  std::vector<int> members;  // current subset, sorted
  members.reserve(n);
  ExactSum current;
  std::vector<int> edge(k);
  // S = {} opens the scan with value 0 on both sides
  for (std::uint64_t t = 1; t < (std::uint64_t{1} << n); ++t) {
    const int v = std::countr_zero(t);  // Gray code flips this bit
    const auto it = std::lower_bound(members.begin(), members.end(), v);
    const bool adding = (it == members.end() || *it != v);
    if (!adding) members.erase(it);
    // edges through v inside the rest of the subset
    ExactSum delta;
    for_each_kset(static_cast<int>(members.size()), k - 1,
                  [&](std::span<const int> f, std::int64_t) {
                    int a = 0;
                    bool placed = false;
                    std::int64_t r = 0;
                    for (int q = 0; q < k; ++q) {
                      int next;
                      if (!placed &&
                          (a >= k - 1 || v < members[f[a]])) {
                        next = v;
                        placed = true;
                      } else {
                        next = members[f[a++]];
                      }
                      r += binom(next, q + 1);
                    }
                    delta.add(w[r]);
                  });
    if (adding) {
      current.add(delta.value());
      members.insert(std::lower_bound(members.begin(), members.end(), v), v);
    } else {
      current.add(-delta.value());
    }
    const double gap =
        current.value() - expected[static_cast<int>(members.size())];
    if (gap > rep.disc_plus) {
      rep.disc_plus = gap;
      rep.argmax_set = members;
    }
    if (-gap > rep.disc_minus) {
      rep.disc_minus = -gap;
      rep.argmin_set = members;
    }
  }
  rep.disc = std::max(rep.disc_plus, rep.disc_minus);
  return rep;
}

}  // namespace hyperdisc

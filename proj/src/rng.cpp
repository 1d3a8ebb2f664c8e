#include "hyperdisc/rng.hpp"

#include <numeric>

namespace hyperdisc {

namespace {

// splitmix64: mixes the (seed, stream, index) triple into engine seed
// material with good avalanche behaviour.
std::uint64_t mix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t index) {
  std::uint64_t s = seed;
  std::uint64_t a = mix(s);
  s ^= stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
  std::uint64_t b = mix(s);
  s ^= index * 0xda942042e4dd58b5ULL + 0x9e3779b97f4a7c15ULL;
  std::uint64_t c = mix(s);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                    static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling on the top of the range keeps the draw exactly
  // uniform; the expected number of retries is below 2.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  Permutation p = Permutation::identity(n);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(next_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(p.images[i], p.images[j]);
  }
  return p;
}

std::vector<int> random_distinct(int n, int count, std::mt19937_64& rng) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < count; ++i) {
    int j = i + static_cast<int>(next_below(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace hyperdisc

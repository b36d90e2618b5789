#ifndef LONELY_TESTS_BRUTE_FORCE_HPP
#define LONELY_TESTS_BRUTE_FORCE_HPP

// Test-only reference procedures. They share no code path with the library's
// interval sweep: suitability is evaluated point by point on a fine grid.

#include <lonely/exact_arith.hpp>
#include <lonely/model.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace lonely::testing {

/// (k+1) lcm(n): every interval endpoint of the suitable set is a multiple of 1/D.
inline i64 critical_denominator(const SpeedVector& n) {
  i64 l = 1;
  for (i64 v : n) l = std::lcm(l, v);
  return (static_cast<i64>(n.k()) + 1) * l;
}

/// Direct evaluation of frac(n_i j / D) in [1/(k+1), k/(k+1)] in integers.
inline bool grid_point_suitable(const SpeedVector& n, i64 j, i64 D) {
  const i64 kp1 = static_cast<i64>(n.k()) + 1;
  for (i64 s : n) {
    const i64 r = (s * j) % D;
    if (r * kp1 < D || r * kp1 > (kp1 - 1) * D) return false;
  }
  return true;
}

inline bool scan_is_instance(const SpeedVector& n) {
  const i64 D = critical_denominator(n);
  for (i64 j = 1; j <= D; ++j)
    if (grid_point_suitable(n, j, D)) return true;
  return false;
}

inline std::optional<Rational> scan_earliest(const SpeedVector& n) {
  const i64 D = critical_denominator(n);
  for (i64 j = 1; j <= D; ++j)
    if (grid_point_suitable(n, j, D)) return Rational(j, D);
  return std::nullopt;
}

/// Rebuilds the suitable set from the grid of step 1/(2D): the status is
/// constant strictly between consecutive multiples of 1/D, so the half-steps
/// represent the open gaps.
inline std::vector<std::pair<Rational, Rational>> scan_suitable_set(const SpeedVector& n) {
  const i64 D2 = 2 * critical_denominator(n);
  std::vector<std::pair<Rational, Rational>> out;
  std::optional<i64> run_start;
  i64 run_end = 0;
  for (i64 j = 1; j <= D2; ++j) {
    if (grid_point_suitable(n, j, D2)) {
      if (!run_start) run_start = j;
      run_end = j;
    } else if (run_start) {
      out.emplace_back(Rational(*run_start, D2), Rational(run_end, D2));
      run_start.reset();
    }
  }
  if (run_start) out.emplace_back(Rational(*run_start, D2), Rational(run_end, D2));
  return out;
}

/// Every nonempty strictly decreasing vector with fastest speed <= max_speed.
template <typename F>
void for_each_vector(int max_speed, F&& f) {
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << max_speed); ++mask) {
    std::vector<i64> speeds;
    for (int b = max_speed - 1; b >= 0; --b)
      if (mask >> b & 1) speeds.push_back(b + 1);
    f(SpeedVector::from_values(speeds));
  }
}

/// Random strictly decreasing vector with k runners and speeds in [1, max_speed].
inline SpeedVector random_vector(std::mt19937_64& rng, std::size_t k, i64 max_speed) {
  std::vector<i64> pool(static_cast<std::size_t>(max_speed));
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(k);
  return SpeedVector::from_values(pool);
}

} // namespace lonely::testing

#endif // LONELY_TESTS_BRUTE_FORCE_HPP

#ifndef LONELY_DYADIC_HPP
#define LONELY_DYADIC_HPP

// Search of the time grid m / (2^e (k+1) n_1), e = ceil(log2 n_1) + 1.
//
// The exponent is taken from the bit length of n_1 - 1, the smallest e with
// 2^(e-1) >= n_1, so powers of two never go through floating point.

#include <lonely/exact_arith.hpp>
#include <lonely/model.hpp>

#include <bit>
#include <optional>

namespace lonely {

struct DyadicWitness {
  int exponent = 0;
  i64 denominator = 0;
  i64 m = 0;
  Rational time;
  friend bool operator==(const DyadicWitness&, const DyadicWitness&) = default;
};

enum class SearchRange {
  Full, ///< m = 1 .. D
  Half, ///< m = 1 .. ceil(D/2); complete because suitable times reflect through 1/2
};

inline int dyadic_exponent(i64 n1) {
  if (n1 < 1) throw InvalidInput("fastest speed must be positive");
  return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(n1 - 1))) + 1;
}

inline i64 dyadic_denominator(const SpeedVector& n) {
  const int e = dyadic_exponent(n.fastest());
  if (e >= 62) throw OverflowError("dyadic denominator exceeds 64 bits");
  const i64 k = static_cast<i64>(n.k());
  return checked::mul(checked::mul(i64{1} << e, k + 1), n.fastest());
}

/// Smallest m in range with m/denominator suitable. Integer-only test:
/// frac(n_i m / D) in [1/(k+1), k/(k+1)] iff D <= (k+1) (n_i m mod D) <= k D.
inline std::optional<i64> first_grid_time(const SpeedVector& n, i64 denominator, SearchRange range = SearchRange::Full) {
  if (denominator < 1) throw InvalidInput("grid denominator must be positive");
  const i128 kp1 = static_cast<i128>(n.k()) + 1;
  const i128 D = denominator;
  const i64 last = range == SearchRange::Full ? denominator : (denominator + 1) / 2;
  for (i64 m = 1; m <= last; ++m) {
    bool ok = true;
    for (i64 speed : n) {
      const i128 r = (i128(speed) * m) % D * kp1;
      if (r < D || r > (kp1 - 1) * D) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
  }
  return std::nullopt;
}

inline std::optional<DyadicWitness> find_dyadic_time(const SpeedVector& n, SearchRange range = SearchRange::Full) {
  const i64 D = dyadic_denominator(n);
  const auto m = first_grid_time(n, D, range);
  if (!m) return std::nullopt;
  return DyadicWitness{dyadic_exponent(n.fastest()), D, *m, Rational(*m, D)};
}

} // namespace lonely

#endif // LONELY_DYADIC_HPP

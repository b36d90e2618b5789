#ifndef LONELY_ORACLE_HPP
#define LONELY_ORACLE_HPP

// Exact decision procedure for lonely runner instances.
//
// A time t is suitable for n when every fractional position {n_i t} lies in
// the closed band [1/(k+1), k/(k+1)]. Motion is 1-periodic and t = 0 is never
// suitable, so the complete answer is a finite union of closed intervals in
// (0, 1]. Each runner contributes n_i intervals; the union for all runners is
// obtained by a two-pointer intersection of the sorted lists.

#include <lonely/exact_arith.hpp>
#include <lonely/model.hpp>

#include <optional>
#include <vector>

namespace lonely {

struct TimeInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& t) const { return lo <= t && t <= hi; }
  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;
};

/// Disjoint closed intervals, sorted by lo, all inside (0, 1].
struct SuitabilitySet {
  std::vector<TimeInterval> intervals;

  bool empty() const { return intervals.empty(); }
  bool contains(const Rational& t) const {
    for (const auto& iv : intervals)
      if (iv.contains(t)) return true;
    return false;
  }
  friend bool operator==(const SuitabilitySet&, const SuitabilitySet&) = default;
};

/// The times in [0,1] at which a runner of the given speed sits in the band
/// [1/(k+1), k/(k+1)]: [(m + 1/(k+1))/s, (m + k/(k+1))/s] for m = 0..s-1.
inline std::vector<TimeInterval> runner_intervals(i64 speed, i64 k) {
  if (speed < 1 || k < 1) throw InvalidInput("runner_intervals needs speed >= 1 and k >= 1");
  const i64 kp1 = checked::add(k, 1);
  const i64 den = checked::mul(kp1, speed);
  std::vector<TimeInterval> out;
  out.reserve(static_cast<std::size_t>(speed));
  for (i64 m = 0; m < speed; ++m) {
    const i64 base = m * kp1;
    out.push_back({Rational(base + 1, den), Rational(base + k, den)});
  }
  return out;
}

/// Two-pointer intersection of two sorted disjoint closed-interval lists.
inline std::vector<TimeInterval> intersect(const std::vector<TimeInterval>& a,
                                           const std::vector<TimeInterval>& b) {
  std::vector<TimeInterval> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const Rational& lo = std::max(a[i].lo, b[j].lo);
    const Rational& hi = std::min(a[i].hi, b[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi)
      ++i;
    else
      ++j;
  }
  return out;
}

inline SuitabilitySet suitable_set(const SpeedVector& n) {
  const i64 k = static_cast<i64>(n.k());
  // Start from the slowest runner: fewest intervals.
  std::vector<TimeInterval> acc = runner_intervals(n.slowest(), k);
  for (std::size_t i = n.k() - 1; i-- > 0 && !acc.empty();) acc = intersect(acc, runner_intervals(n[i], k));
  return {std::move(acc)};
}

inline bool is_instance(const SpeedVector& n) { return !suitable_set(n).empty(); }

inline std::optional<Rational> earliest_suitable_time(const SpeedVector& n) {
  auto s = suitable_set(n);
  if (s.empty()) return std::nullopt;
  return s.intervals.front().lo;
}

inline bool is_suitable(const SpeedVector& n, const Rational& t) {
  if (t.is_negative()) throw InvalidInput("time must be non-negative");
  const i64 kp1 = static_cast<i64>(n.k()) + 1;
  const i64 k = kp1 - 1;
  for (i64 speed : n) {
    // frac(speed * t) = r / t.den() with r = (speed * t.num()) mod t.den()
    const i128 r = (i128(speed) * t.num()) % t.den();
    const i128 scaled = r * kp1;
    if (scaled < t.den() || scaled > i128(k) * t.den()) return false;
  }
  return true;
}

inline Rational reflect_time(const Rational& t) {
  if (t.is_negative() || t > Rational(1)) throw InvalidInput("reflect_time expects t in [0, 1]");
  return Rational(1) - t;
}

/// A suitable time at most 1/2, whenever n is an instance.
inline std::optional<Rational> half_period_witness(const SpeedVector& n) {
  auto t = earliest_suitable_time(n);
  if (!t) return std::nullopt;
  if (*t > Rational(1, 2)) return reflect_time(*t);
  return t;
}

/// Round counts m_i = floor(n_i t) at a suitable time; the result is an
/// integer point of the lonely runner polyhedron.
inline std::vector<i64> lattice_witness_from_time(const SpeedVector& n, const Rational& t) {
  if (!is_suitable(n, t)) throw InvalidInput("time " + t.str() + " is not suitable for " + n.str());
  std::vector<i64> m;
  m.reserve(n.k());
  for (i64 speed : n) m.push_back((Rational(speed) * t).floor());
  return m;
}

} // namespace lonely

#endif // LONELY_ORACLE_HPP

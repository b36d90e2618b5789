#ifndef LONELY_CLASSIFY_HPP
#define LONELY_CLASSIFY_HPP

// Sufficient conditions for a speed vector to be a lonely runner instance.
// All rules are evaluated on the raw speeds with integer cross-multiplication.

#include <lonely/exact_arith.hpp>
#include <lonely/model.hpp>
#include <lonely/oracle.hpp>

#include <optional>
#include <vector>

namespace lonely {

/// k >= 4 and n_2 (k/n_3 - 1/n_k) >= k+1, i.e. n_2 (k n_k - n_3) >= (k+1) n_3 n_k.
inline bool rule_thm1(const SpeedVector& n) {
  const i64 k = static_cast<i64>(n.k());
  if (k < 4) return false;
  const i128 n2 = n[1], n3 = n[2], nk = n.slowest();
  return n2 * (k * nk - n3) >= (k + 1) * n3 * nk;
}

/// n_2 <= k n_k and n_1 mod ((k+1) n_k) lies in [n_k, k n_k]. False for k = 1.
inline bool rule_thm2(const SpeedVector& n) {
  const i64 k = static_cast<i64>(n.k());
  if (k < 2) return false;
  const i64 nk = n.slowest();
  const i64 knk = checked::mul(k, nk);
  if (n[1] > knk) return false;
  const i64 r = mod_int(n.fastest(), checked::mul(k + 1, nk));
  return nk <= r && r <= knk;
}

struct SlowFastVerdict {
  bool holds = false;
  std::optional<Rational> time; ///< k/((k+1) n_1) when holds
};

/// n_1 <= k n_k exactly when t = k/((k+1) n_1) is suitable.
inline SlowFastVerdict rule_slow_fast(const SpeedVector& n) {
  const i64 k = static_cast<i64>(n.k());
  if (n.fastest() > checked::mul(k, n.slowest())) return {};
  return {true, Rational(k, checked::mul(k + 1, n.fastest()))};
}

struct ClassificationReport {
  SpeedVector vector;
  bool thm1 = false;
  bool thm2 = false;
  bool slow_fast = false;
  bool any_rule = false;
  std::optional<Rational> witness_time{};
  std::optional<std::vector<i64>> witness_point{};
  std::optional<bool> oracle_verdict{};
};

inline ClassificationReport classify(const SpeedVector& n, bool with_oracle) {
  ClassificationReport r{.vector = n};
  r.thm1 = rule_thm1(n);
  r.thm2 = rule_thm2(n);
  const auto sf = rule_slow_fast(n);
  r.slow_fast = sf.holds;
  r.any_rule = r.thm1 || r.thm2 || r.slow_fast;
  if (sf.holds) r.witness_time = sf.time;
  if (with_oracle) {
    const auto earliest = earliest_suitable_time(n);
    r.oracle_verdict = earliest.has_value();
    if (!r.witness_time) r.witness_time = earliest;
  }
  if (r.witness_time) r.witness_point = lattice_witness_from_time(n, *r.witness_time);
  return r;
}

} // namespace lonely

#endif // LONELY_CLASSIFY_HPP

#ifndef LONELY_ENUMERATE_HPP
#define LONELY_ENUMERATE_HPP

// Exhaustive sweep over every nonempty speed set drawn from {1..N}.
//
// A set is a bitmask (bit i set <=> speed i+1 present), so the whole census
// is the mask range [1, 2^N). Shards are contiguous mask ranges processed
// independently; their summaries are merged in shard order with plain
// field-wise addition.

#include <lonely/classify.hpp>
#include <lonely/dyadic.hpp>
#include <lonely/exact_arith.hpp>
#include <lonely/model.hpp>
#include <lonely/oracle.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

namespace lonely {

using Mask = std::uint64_t;

inline constexpr int kMaxSweepSpeed = 32;
inline constexpr int kMaxMoebiusSpeed = 62;

/// 2^N - 1 nonempty subsets of {1..N}.
inline i64 total_vector_count(int max_speed) {
  if (max_speed < 1 || max_speed > kMaxMoebiusSpeed) throw InvalidInput("N must lie in [1, 62]");
  return static_cast<i64>((Mask{1} << max_speed) - 1);
}

/// Moebius function on 0..limit by a linear sieve (index 0 unused).
inline std::vector<int> moebius_sieve(int limit) {
  std::vector<int> mu(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<int> primes;
  std::vector<bool> composite(mu.size(), false);
  if (limit >= 1) mu[1] = 1;
  for (int i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (int p : primes) {
      const long long ip = static_cast<long long>(i) * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        mu[ip] = 0;
        break;
      }
      mu[ip] = -mu[i];
    }
  }
  return mu;
}

/// Number of nonempty subsets of {1..N} with gcd 1:
/// sum over d of mu(d) (2^floor(N/d) - 1), since the multiples of d number floor(N/d).
inline i64 coprime_count_moebius(int max_speed) {
  if (max_speed < 1 || max_speed > kMaxMoebiusSpeed) throw InvalidInput("N must lie in [1, 62]");
  const auto mu = moebius_sieve(max_speed);
  i64 total = 0;
  for (int d = 1; d <= max_speed; ++d)
    if (mu[d] != 0) total += mu[d] * static_cast<i64>((Mask{1} << (max_speed / d)) - 1);
  return total;
}

/// Speeds of a subset mask, fastest first.
inline SpeedVector decode_mask(Mask mask) {
  if (mask == 0) throw InvalidInput("empty subset mask");
  std::vector<i64> speeds;
  speeds.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    const int top = std::bit_width(mask) - 1;
    speeds.push_back(top + 1);
    mask &= ~(Mask{1} << top);
  }
  return SpeedVector::from_descending(std::move(speeds));
}

struct SweepOptions {
  bool require_coprime = false;
  std::optional<bool> with_oracle; ///< unset: on for N <= 16, off above
  bool with_dyadic = false;
  unsigned shard_count = 1;
};

struct EnumerationSummary {
  int max_speed = 0;
  i64 total_vectors = 0;
  i64 coprime_vectors = 0;
  i64 thm1_count = 0;
  i64 thm2_count = 0;
  i64 slow_fast_count = 0;
  i64 any_rule_count = 0;
  std::optional<i64> oracle_instance_count;
  std::optional<i64> dyadic_verified_count;
  std::chrono::milliseconds elapsed{0};

  /// Field-wise sum of counts; max_speed and elapsed are left to the caller.
  void merge(const EnumerationSummary& o) {
    total_vectors += o.total_vectors;
    coprime_vectors += o.coprime_vectors;
    thm1_count += o.thm1_count;
    thm2_count += o.thm2_count;
    slow_fast_count += o.slow_fast_count;
    any_rule_count += o.any_rule_count;
    auto add = [](std::optional<i64>& a, const std::optional<i64>& b) {
      if (b) a = a.value_or(0) + *b;
    };
    add(oracle_instance_count, o.oracle_instance_count);
    add(dyadic_verified_count, o.dyadic_verified_count);
  }

  /// Equality of every data field; elapsed is a diagnostic and ignored.
  bool same_counts(const EnumerationSummary& o) const {
    return max_speed == o.max_speed && total_vectors == o.total_vectors && coprime_vectors == o.coprime_vectors &&
           thm1_count == o.thm1_count && thm2_count == o.thm2_count && slow_fast_count == o.slow_fast_count &&
           any_rule_count == o.any_rule_count && oracle_instance_count == o.oracle_instance_count &&
           dyadic_verified_count == o.dyadic_verified_count;
  }
};

/// One classified vector, as streamed to the per-vector CSV.
struct VectorRecord {
  SpeedVector speeds;
  bool coprime = false;
  bool thm1 = false;
  bool thm2 = false;
  bool slow_fast = false;
  bool any_rule = false;
  std::optional<bool> is_instance{};
  std::optional<Rational> earliest_time{};
  std::optional<i64> dyadic_m{};

  friend bool operator==(const VectorRecord&, const VectorRecord&) = default;
};

using RecordSink = std::function<void(const VectorRecord&)>;

namespace detail {

struct ResolvedOptions {
  bool require_coprime;
  bool with_oracle;
  bool with_dyadic;
};

inline ResolvedOptions resolve(int max_speed, const SweepOptions& o) {
  if (max_speed < 1 || max_speed > kMaxSweepSpeed) throw InvalidInput("sweep N must lie in [1, 32]");
  if (o.shard_count < 1) throw InvalidInput("shard count must be at least 1");
  return {o.require_coprime, o.with_oracle.value_or(max_speed <= 16), o.with_dyadic};
}

inline EnumerationSummary sweep_range(Mask lo, Mask hi, const ResolvedOptions& opt, const RecordSink* sink) {
  EnumerationSummary s;
  if (opt.with_oracle) s.oracle_instance_count = 0;
  if (opt.with_dyadic) s.dyadic_verified_count = 0;
  for (Mask mask = lo; mask < hi; ++mask) {
    ++s.total_vectors;
    i64 g = 0;
    for (Mask rest = mask; rest != 0 && g != 1; rest &= rest - 1) g = std::gcd(g, std::countr_zero(rest) + 1);
    const bool coprime = g == 1;
    if (coprime) ++s.coprime_vectors;
    if (opt.require_coprime && !coprime) continue;

    const SpeedVector n = decode_mask(mask);
    VectorRecord rec{.speeds = n, .coprime = coprime};
    rec.thm1 = rule_thm1(n);
    rec.thm2 = rule_thm2(n);
    rec.slow_fast = rule_slow_fast(n).holds;
    rec.any_rule = rec.thm1 || rec.thm2 || rec.slow_fast;
    s.thm1_count += rec.thm1;
    s.thm2_count += rec.thm2;
    s.slow_fast_count += rec.slow_fast;
    s.any_rule_count += rec.any_rule;
    if (opt.with_oracle) {
      rec.earliest_time = earliest_suitable_time(n);
      rec.is_instance = rec.earliest_time.has_value();
      *s.oracle_instance_count += *rec.is_instance;
    }
    if (opt.with_dyadic) {
      if (auto w = find_dyadic_time(n)) {
        rec.dyadic_m = w->m;
        ++*s.dyadic_verified_count;
      }
    }
    if (sink) (*sink)(rec);
  }
  return s;
}

} // namespace detail

/// Contiguous shard boundaries over [1, 2^N); shard i is [bounds[i], bounds[i+1]).
inline std::vector<Mask> shard_bounds(int max_speed, unsigned shard_count) {
  const Mask end = Mask{1} << max_speed;
  const Mask span = end - 1;
  std::vector<Mask> b(shard_count + 1);
  for (unsigned i = 0; i <= shard_count; ++i)
    b[i] = 1 + static_cast<Mask>((static_cast<unsigned __int128>(span) * i) / shard_count);
  return b;
}

/**
 * Classifies every nonempty subset of {1..N}. Shards run on a small worker
 * pool; results are merged in shard order once all workers finish.
 */
inline EnumerationSummary sweep(int max_speed, const SweepOptions& options) {
  const auto opt = detail::resolve(max_speed, options);
  const auto start = std::chrono::steady_clock::now();
  const auto bounds = shard_bounds(max_speed, options.shard_count);

  std::vector<EnumerationSummary> parts(options.shard_count);
  std::vector<std::exception_ptr> errors(options.shard_count);
  std::atomic<unsigned> next{0};
  auto worker = [&] {
    for (unsigned i; (i = next.fetch_add(1)) < options.shard_count;) {
      try {
        parts[i] = detail::sweep_range(bounds[i], bounds[i + 1], opt, nullptr);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min(options.shard_count, hw);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  EnumerationSummary total;
  total.max_speed = max_speed;
  if (opt.with_oracle) total.oracle_instance_count = 0;
  if (opt.with_dyadic) total.dyadic_verified_count = 0;
  for (unsigned i = 0; i < options.shard_count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    total.merge(parts[i]);
  }
  total.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return total;
}

/// Streaming variant: records reach the sink in ascending mask order on the
/// calling thread; the summary is identical to sweep().
inline EnumerationSummary sweep(int max_speed, const SweepOptions& options, const RecordSink& sink) {
  const auto opt = detail::resolve(max_speed, options);
  const auto start = std::chrono::steady_clock::now();
  EnumerationSummary total = detail::sweep_range(1, Mask{1} << max_speed, opt, &sink);
  total.max_speed = max_speed;
  total.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return total;
}

} // namespace lonely

#endif // LONELY_ENUMERATE_HPP

// End-to-end acceptance checks. One PASS/FAIL line per criterion; exit status
// is nonzero if any criterion fails or exceeds its time budget.

#include <lonely/lonely.hpp>

#include "brute_force.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace {

using lonely::i64;
using lonely::Rational;
using lonely::SpeedVector;

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, std::chrono::seconds budget, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs > static_cast<double>(budget.count())) o = {false, "over time budget"};
  if (!o.ok) ++failures;
  std::printf("%s  %2d  %-40s %8.3fs  %s\n", o.ok ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
  std::fflush(stdout);
}

SpeedVector V(std::initializer_list<i64> v) { return SpeedVector::from_values(v); }

// Every speed set with fastest speed at most max_speed.
template <typename F>
void each(int max_speed, F&& f) {
  lonely::testing::for_each_vector(max_speed, f);
}

} // namespace

int main() {
  using namespace std::chrono_literals;

  criterion(1, "census closed form", 1s, [] {
    const i64 total = lonely::total_vector_count(32);
    const i64 coprime = lonely::coprime_count_moebius(32);
    return Outcome{total == 4294967295 && coprime == 4294900694,
                   "total=" + std::to_string(total) + " coprime=" + std::to_string(coprime)};
  });

  criterion(2, "moebius vs sweep, N<=20", 60s, [] {
    for (int N = 1; N <= 20; ++N) {
      const auto s = lonely::sweep(N, lonely::SweepOptions{true, false, false, 1});
      if (s.coprime_vectors != lonely::coprime_count_moebius(N)) return Outcome{false, "N=" + std::to_string(N)};
    }
    return Outcome{true, "N=1..20 agree"};
  });

  criterion(3, "showcase vectors", 1s, [] {
    const SpeedVector first[] = {V({17, 16, 7, 6, 5, 4, 2}), V({18, 16, 7, 6, 5, 4, 3, 2}),
                                 V({20, 18, 8, 7, 6, 5, 4, 3, 2})};
    const SpeedVector second[] = {V({20, 14, 8, 6, 5, 4, 2}), V({24, 14, 10, 9, 8, 6, 5, 2}),
                                  V({23, 18, 15, 10, 8, 7, 6, 4, 2})};
    for (const auto& n : first)
      if (!lonely::rule_thm1(n) || !lonely::is_instance(n)) return Outcome{false, n.str()};
    for (const auto& n : second)
      if (!lonely::rule_thm2(n) || !lonely::is_instance(n)) return Outcome{false, n.str()};
    return Outcome{true, "6/6"};
  });

  criterion(4, "rule soundness, coprime n1<=14", 120s, [] {
    i64 checked = 0, fired = 0, bad = 0;
    each(14, [&](const SpeedVector& n) {
      if (lonely::gcd_of(n) != 1) return;
      ++checked;
      const auto r = lonely::classify(n, false);
      if (!r.any_rule) return;
      ++fired;
      bad += !lonely::is_instance(n);
    });
    return Outcome{bad == 0, std::to_string(checked) + " sets, " + std::to_string(fired) + " covered, " +
                                 std::to_string(bad) + " violations"};
  });

  criterion(5, "slow/fast time biconditional, n1<=12", 120s, [] {
    i64 bad = 0, checked = 0;
    each(12, [&](const SpeedVector& n) {
      const i64 k = static_cast<i64>(n.k());
      ++checked;
      bad += lonely::is_suitable(n, Rational(k, (k + 1) * n.fastest())) != (n.fastest() <= k * n.slowest());
    });
    return Outcome{bad == 0, std::to_string(checked) + " sets, " + std::to_string(bad) + " mismatches"};
  });

  criterion(6, "half period and reflection, n1<=12", 120s, [] {
    i64 bad = 0, instances = 0;
    each(12, [&](const SpeedVector& n) {
      const auto set = lonely::suitable_set(n);
      if (set.empty()) return;
      ++instances;
      const auto h = lonely::half_period_witness(n);
      if (!h || *h > Rational(1, 2) || !lonely::is_suitable(n, *h)) ++bad;
      // The reflected interval list, reversed, must reproduce the set.
      lonely::SuitabilitySet mirrored;
      for (auto it = set.intervals.rbegin(); it != set.intervals.rend(); ++it)
        mirrored.intervals.push_back({lonely::reflect_time(it->hi), lonely::reflect_time(it->lo)});
      if (!(mirrored == set)) ++bad;
    });
    return Outcome{bad == 0, std::to_string(instances) + " instances, " + std::to_string(bad) + " failures"};
  });

  criterion(7, "dyadic witness, coprime n1<=12", 300s, [] {
    i64 bad = 0, instances = 0;
    each(12, [&](const SpeedVector& n) {
      if (lonely::gcd_of(n) != 1 || !lonely::is_instance(n)) return;
      ++instances;
      const auto w = lonely::find_dyadic_time(n);
      if (!w || !lonely::is_suitable(n, w->time)) ++bad;
    });
    return Outcome{bad == 0, std::to_string(instances) + " instances, " + std::to_string(bad) + " without witness"};
  });

  criterion(8, "geometry widths, n1<=12", 120s, [] {
    i64 gated = 0, bad = 0;
    each(12, [&](const SpeedVector& n) {
      const i64 k = static_cast<i64>(n.k());
      if (k < 3) return;
      const auto w = lonely::lemma_widths(n);
      const auto q = lonely::q_region(n, lonely::QRegion::Q);
      if (!lonely::polygon_vertices(q).empty()) {
        if (!w.wQ_e1 || *w.wQ_e1 != lonely::width(q, lonely::e1) || *w.wQ_e2 != lonely::width(q, lonely::e2)) ++bad;
        const auto q2 = lonely::q_region(n, lonely::QRegion::Q2);
        if (w.wQ2_e2 && *w.wQ2_e2 != lonely::width(q2, lonely::e2)) ++bad;
        const auto q5 = lonely::q_region(n, lonely::QRegion::Q5);
        if (w.wQ5_e2 && *w.wQ5_e2 != lonely::width(q5, lonely::e2)) ++bad;
      }
      const i64 n2 = n[1], n3 = n[2], nk = n.slowest();
      if (n2 * (k * nk - n3) < (k + 1) * n3 * nk) return;
      ++gated;
      if (!w.wQ_e1 || !w.wQ_e2 || !w.wQ2_e2) {
        ++bad;
        return;
      }
      if (*w.wQ_e1 < Rational(1) || *w.wQ_e2 < Rational(1) || *w.wQ2_e2 < Rational(k - 1, k + 1)) ++bad;
      if (k >= 4 && 2 * n.fastest() > (k - 1) * n2 && !(w.wQ5_e2 && *w.wQ5_e2 > Rational(1))) ++bad;
    });
    return Outcome{bad == 0, std::to_string(gated) + " gated sets, " + std::to_string(bad) + " failures"};
  });

  criterion(9, "lattice witness roundtrip, n1<=12", 120s, [] {
    i64 bad = 0, instances = 0, lifted = 0;
    each(12, [&](const SpeedVector& n) {
      const auto t = lonely::earliest_suitable_time(n);
      if (!t) return;
      ++instances;
      const auto m = lonely::lattice_witness_from_time(n, *t);
      if (!lonely::contains(n, std::span<const i64>(m))) ++bad;
      if (n.k() == 3 && n[2] <= 3 * n.slowest()) {
        ++lifted;
        const auto p = lonely::integer_point_in_Q(n);
        if (!p) {
          ++bad;
          return;
        }
        const auto x = lonely::lift_to_P(n, *p);
        if (!lonely::contains(n, std::span<const i64>(x))) ++bad;
      }
    });
    return Outcome{bad == 0, std::to_string(instances) + " instances, " + std::to_string(lifted) +
                                 " three-runner lifts, " + std::to_string(bad) + " failures"};
  });

  criterion(10, "shard determinism, N=16", 60s, [] {
    std::string reference;
    for (unsigned shards : {1u, 4u, 13u}) {
      const auto s = lonely::sweep(16, lonely::SweepOptions{false, std::nullopt, false, shards});
      const auto text = lonely::to_json(s).dump(2);
      if (reference.empty())
        reference = text;
      else if (text != reference)
        return Outcome{false, "shards=" + std::to_string(shards) + " differs"};
    }
    return Outcome{true, "shards 1, 4, 13 byte-identical"};
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}

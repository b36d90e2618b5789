#ifndef LONELY_CLI_HPP
#define LONELY_CLI_HPP

// Command-line front end. Exit codes: 0 success, 1 invalid input, 2 internal
// error (overflow, I/O).

#include <lonely/classify.hpp>
#include <lonely/dyadic.hpp>
#include <lonely/enumerate.hpp>
#include <lonely/oracle.hpp>
#include <lonely/polyhedron.hpp>
#include <lonely/serialize.hpp>

#include <CLI11.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace lonely::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInternal = 2;

namespace detail {

inline std::string opt_str(const std::optional<Rational>& q) { return q ? q->str() : "none"; }

inline std::string tuple_str(std::span<const i64> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

inline std::string opt_bool(const std::optional<bool>& b) { return b ? yes_no(*b) : "none"; }

struct Common {
  std::vector<i64> speeds;
  bool normalize = false;
};

inline SpeedVector vector_of(const Common& c) {
  return c.normalize ? lonely::normalize(c.speeds) : SpeedVector::from_values(c.speeds);
}

inline void check_cmd(const SpeedVector& n, bool as_json, std::ostream& out) {
  const auto set = suitable_set(n);
  const std::optional<Rational> earliest =
      set.empty() ? std::nullopt : std::optional<Rational>(set.intervals.front().lo);
  const auto half = half_period_witness(n);
  std::optional<std::vector<i64>> lattice;
  if (earliest) lattice = lattice_witness_from_time(n, *earliest);
  if (as_json) {
    json j = {{"speeds", to_json(n)},
              {"instance", !set.empty()},
              {"earliest", optional_json(earliest)},
              {"half_period_witness", optional_json(half)},
              {"lattice_witness", optional_json(lattice)},
              {"suitable_set", to_json(set)}};
    out << j.dump(2) << '\n';
    return;
  }
  out << "speeds: " << n.str() << '\n'
      << "instance: " << yes_no(!set.empty()) << '\n'
      << "earliest: " << opt_str(earliest) << '\n'
      << "half_period_witness: " << opt_str(half) << '\n'
      << "lattice_witness: " << (lattice ? tuple_str(*lattice) : "none") << '\n'
      << "suitable_set:";
  for (const auto& iv : set.intervals) out << " [" << iv.lo << ", " << iv.hi << "]";
  out << '\n';
}

inline void classify_cmd(const SpeedVector& n, bool with_oracle, bool as_json, std::ostream& out) {
  const auto r = classify(n, with_oracle);
  if (as_json) {
    out << to_json(r).dump(2) << '\n';
    return;
  }
  out << "vector: " << n.str() << '\n'
      << "thm1: " << yes_no(r.thm1) << '\n'
      << "thm2: " << yes_no(r.thm2) << '\n'
      << "slow_fast: " << yes_no(r.slow_fast) << '\n'
      << "any_rule: " << yes_no(r.any_rule) << '\n'
      << "witness_time: " << opt_str(r.witness_time) << '\n'
      << "witness_point: " << (r.witness_point ? tuple_str(*r.witness_point) : "none") << '\n'
      << "oracle_verdict: " << opt_bool(r.oracle_verdict) << '\n';
}

inline void polytope_cmd(const SpeedVector& n, bool as_json, std::ostream& out) {
  const auto g = q_geometry(n);
  const auto w = lemma_widths(n);
  const auto p = integer_point_in_Q(n);
  if (as_json) {
    json j = to_json(g);
    j["lemma_widths"] = to_json(w);
    j["integer_point"] = p ? json::array({p->x1, p->x2}) : json(nullptr);
    out << j.dump(2) << '\n';
    return;
  }
  static constexpr const char* names[] = {"x1 lower", "x1 upper", "x2 lower", "x2 upper", "slab lower", "slab upper"};
  out << "vector: " << n.str() << '\n' << "halfplanes (a1*x1 + a2*x2 <= b):\n";
  for (std::size_t i = 0; i < g.halfplanes.size(); ++i) {
    const auto& h = g.halfplanes[i];
    out << "  " << names[i] << ": " << h.a1 << " " << h.a2 << " " << h.b << '\n';
  }
  out << "vertices:";
  for (const auto& v : g.vertices) out << " (" << v.x1 << ", " << v.x2 << ")";
  out << '\n';
  const auto& l = g.landmarks;
  out << "landmarks: alpha=" << l.alpha << " beta=" << l.beta << " gamma=" << l.gamma << " delta=" << l.delta
      << " zeta=" << l.zeta << " kappa=" << l.kappa << '\n'
      << "wQ_e1: " << opt_str(w.wQ_e1) << '\n'
      << "wQ_e2: " << opt_str(w.wQ_e2) << '\n'
      << "wQ2_e2: " << opt_str(w.wQ2_e2) << '\n'
      << "wQ5_e2: " << opt_str(w.wQ5_e2) << '\n'
      << "integer_point: " << (p ? "(" + std::to_string(p->x1) + "," + std::to_string(p->x2) + ")" : "none") << '\n';
}

inline void dyadic_cmd(const SpeedVector& n, bool half_range, bool as_json, std::ostream& out) {
  const auto w = find_dyadic_time(n, half_range ? SearchRange::Half : SearchRange::Full);
  if (as_json) {
    out << (w ? to_json(*w) : json(nullptr)).dump(2) << '\n';
    return;
  }
  if (!w) {
    out << "no dyadic witness in (0,1] for " << n.str() << '\n';
    return;
  }
  out << "exponent: " << w->exponent << '\n'
      << "denominator: " << w->denominator << '\n'
      << "m: " << w->m << '\n'
      << "time: " << w->time << '\n';
}

inline json record_json(const VectorRecord& r) {
  return {{"speeds", to_json(r.speeds)},
          {"k", r.speeds.k()},
          {"coprime", r.coprime},
          {"thm1", r.thm1},
          {"thm2", r.thm2},
          {"slow_fast", r.slow_fast},
          {"any_rule", r.any_rule},
          {"is_instance", optional_json(r.is_instance)},
          {"earliest_time", optional_json(r.earliest_time)},
          {"dyadic_m", optional_json(r.dyadic_m)}};
}

struct EnumerateArgs {
  int max_speed = 0;
  SweepOptions options;
  std::string out_file;
  std::string format = "csv";
};

inline void enumerate_cmd(const EnumerateArgs& a, bool as_json, std::ostream& out, std::ostream& err) {
  EnumerationSummary s;
  if (a.out_file.empty()) {
    s = sweep(a.max_speed, a.options);
  } else {
    const auto format = parse_format(a.format);
    auto file = open_output(a.out_file);
    if (format == ExportFormat::Csv) {
      CsvRecordWriter writer(file);
      s = sweep(a.max_speed, a.options, [&](const VectorRecord& r) { writer(r); });
    } else {
      // JSON array written incrementally, one record object per line.
      bool first = true;
      file << "[\n";
      s = sweep(a.max_speed, a.options, [&](const VectorRecord& r) {
        file << (first ? "  " : ",\n  ") << record_json(r).dump();
        first = false;
      });
      file << (first ? "]\n" : "\n]\n");
    }
    file.close();
    if (!file) throw IoError("failed writing '" + a.out_file + "'");
  }
  if (as_json) {
    export_summary(s, ExportFormat::Json, out);
  } else {
    out << "max_speed: " << s.max_speed << '\n'
        << "total_vectors: " << s.total_vectors << '\n'
        << "coprime_vectors: " << s.coprime_vectors << '\n'
        << "thm1_count: " << s.thm1_count << '\n'
        << "thm2_count: " << s.thm2_count << '\n'
        << "slow_fast_count: " << s.slow_fast_count << '\n'
        << "any_rule_count: " << s.any_rule_count << '\n'
        << "oracle_instance_count: "
        << (s.oracle_instance_count ? std::to_string(*s.oracle_instance_count) : "none") << '\n'
        << "dyadic_verified_count: "
        << (s.dyadic_verified_count ? std::to_string(*s.dyadic_verified_count) : "none") << '\n';
  }
  err << "elapsed_ms: " << s.elapsed.count() << '\n';
}

inline void count_coprime_cmd(int max_speed, bool as_json, std::ostream& out) {
  const i64 coprime = coprime_count_moebius(max_speed);
  if (as_json) {
    json j = {{"max_speed", max_speed}, {"total_vectors", total_vector_count(max_speed)}, {"coprime_vectors", coprime}};
    out << j.dump(2) << '\n';
    return;
  }
  out << coprime << '\n';
}

} // namespace detail

/// Parses and runs one command; output goes to out, diagnostics to err.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lonely runner toolkit", "lonely"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a single JSON document");
  app.fallthrough();

  detail::Common common;
  auto add_speeds = [&](CLI::App* sub) {
    sub->add_option("speeds", common.speeds, "speeds, any order")->required();
    sub->add_flag("--normalize", common.normalize, "deduplicate and divide out the gcd");
  };

  auto* check = app.add_subcommand("check", "oracle verdict, earliest time and witnesses");
  add_speeds(check);

  bool with_oracle_classify = false;
  auto* classify_sub = app.add_subcommand("classify", "evaluate the sufficient conditions");
  add_speeds(classify_sub);
  classify_sub->add_flag("--with-oracle", with_oracle_classify, "also run the exact oracle");

  auto* polytope = app.add_subcommand("polytope", "half-planes, vertices, landmarks and widths of Q");
  add_speeds(polytope);

  bool half_range = false;
  auto* dyadic = app.add_subcommand("dyadic", "search the dyadic time grid");
  add_speeds(dyadic);
  dyadic->add_flag("--half-range", half_range, "only search m <= ceil(D/2)");

  detail::EnumerateArgs en;
  bool oracle_on = false, oracle_off = false;
  auto* enumerate = app.add_subcommand("enumerate", "sweep every speed set drawn from {1..N}");
  enumerate->add_option("N", en.max_speed, "largest speed")->required();
  enumerate->add_flag("--require-coprime", en.options.require_coprime, "classify coprime sets only");
  enumerate->add_flag("--with-oracle", oracle_on, "run the oracle on every set (default for N <= 16)");
  enumerate->add_flag("--no-oracle", oracle_off, "skip the oracle");
  enumerate->add_flag("--with-dyadic", en.options.with_dyadic, "search the dyadic grid for every set");
  enumerate->add_option("--shards", en.options.shard_count, "number of contiguous shards")
      ->check(CLI::Range(1u, 1u << 20));
  enumerate->add_option("--out", en.out_file, "stream per-vector records to FILE");
  enumerate->add_option("--format", en.format, "record format for --out")->check(CLI::IsMember({"csv", "json"}));

  int coprime_n = 0;
  auto* count = app.add_subcommand("count-coprime", "closed-form count of coprime speed sets");
  count->add_option("N", coprime_n, "largest speed")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (check->parsed()) {
      detail::check_cmd(detail::vector_of(common), as_json, out);
    } else if (classify_sub->parsed()) {
      detail::classify_cmd(detail::vector_of(common), with_oracle_classify, as_json, out);
    } else if (polytope->parsed()) {
      detail::polytope_cmd(detail::vector_of(common), as_json, out);
    } else if (dyadic->parsed()) {
      detail::dyadic_cmd(detail::vector_of(common), half_range, as_json, out);
    } else if (enumerate->parsed()) {
      if (oracle_on && oracle_off) throw InvalidInput("--with-oracle and --no-oracle are mutually exclusive");
      if (oracle_on) en.options.with_oracle = true;
      if (oracle_off) en.options.with_oracle = false;
      detail::enumerate_cmd(en, as_json, out, err);
    } else if (count->parsed()) {
      detail::count_coprime_cmd(coprime_n, as_json, out);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

} // namespace lonely::cli

#endif // LONELY_CLI_HPP

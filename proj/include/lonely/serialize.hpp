#ifndef LONELY_SERIALIZE_HPP
#define LONELY_SERIALIZE_HPP

// JSON and CSV forms of the library's result types.
//
// Rationals are always written as "num/den" strings. Summaries omit the
// elapsed time unless asked, so identical runs produce identical bytes.

#include <lonely/classify.hpp>
#include <lonely/dyadic.hpp>
#include <lonely/enumerate.hpp>
#include <lonely/oracle.hpp>
#include <lonely/polyhedron.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace lonely {

using json = nlohmann::ordered_json;

enum class ExportFormat { Csv, Json };

inline ExportFormat parse_format(std::string_view s) {
  if (s == "csv") return ExportFormat::Csv;
  if (s == "json") return ExportFormat::Json;
  throw InvalidInput("unknown format '" + std::string(s) + "', expected csv or json");
}

// --- JSON -------------------------------------------------------------------

template <typename T>
json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Rational>)
    return v->str();
  else
    return *v;
}

inline json to_json(const SpeedVector& n) { return json(std::vector<i64>(n.begin(), n.end())); }

inline json to_json(const SuitabilitySet& s) {
  json out = json::array();
  for (const auto& iv : s.intervals) out.push_back({iv.lo.str(), iv.hi.str()});
  return out;
}

inline json to_json(const Point2& p) { return json::array({p.x1.str(), p.x2.str()}); }

inline json to_json(const QGeometry& g) {
  json hs = json::array();
  for (const auto& h : g.halfplanes) hs.push_back({{"a1", h.a1.str()}, {"a2", h.a2.str()}, {"b", h.b.str()}});
  json vs = json::array();
  for (const auto& v : g.vertices) vs.push_back(to_json(v));
  const auto& l = g.landmarks;
  return {{"halfplanes", hs},
          {"vertices", vs},
          {"landmarks",
           {{"alpha", l.alpha.str()},
            {"beta", l.beta.str()},
            {"gamma", l.gamma.str()},
            {"delta", l.delta.str()},
            {"zeta", l.zeta.str()},
            {"kappa", l.kappa.str()}}}};
}

inline json to_json(const LemmaWidths& w) {
  return {{"wQ_e1", optional_json(w.wQ_e1)},
          {"wQ_e2", optional_json(w.wQ_e2)},
          {"wQ2_e2", optional_json(w.wQ2_e2)},
          {"wQ5_e2", optional_json(w.wQ5_e2)}};
}

inline json to_json(const ClassificationReport& r) {
  return {{"vector", to_json(r.vector)},
          {"thm1", r.thm1},
          {"thm2", r.thm2},
          {"slow_fast", r.slow_fast},
          {"any_rule", r.any_rule},
          {"witness_time", optional_json(r.witness_time)},
          {"witness_point", optional_json(r.witness_point)},
          {"oracle_verdict", optional_json(r.oracle_verdict)}};
}

inline json to_json(const DyadicWitness& w) {
  return {{"exponent", w.exponent}, {"denominator", w.denominator}, {"m", w.m}, {"time", w.time.str()}};
}

inline json to_json(const EnumerationSummary& s, bool include_elapsed = false) {
  json out = {{"max_speed", s.max_speed},
              {"total_vectors", s.total_vectors},
              {"coprime_vectors", s.coprime_vectors},
              {"thm1_count", s.thm1_count},
              {"thm2_count", s.thm2_count},
              {"slow_fast_count", s.slow_fast_count},
              {"any_rule_count", s.any_rule_count},
              {"oracle_instance_count", optional_json(s.oracle_instance_count)},
              {"dyadic_verified_count", optional_json(s.dyadic_verified_count)}};
  if (include_elapsed) out["elapsed"] = s.elapsed.count();
  return out;
}

inline EnumerationSummary summary_from_json(const json& j) {
  try {
    EnumerationSummary s;
    s.max_speed = j.at("max_speed").get<int>();
    s.total_vectors = j.at("total_vectors").get<i64>();
    s.coprime_vectors = j.at("coprime_vectors").get<i64>();
    s.thm1_count = j.at("thm1_count").get<i64>();
    s.thm2_count = j.at("thm2_count").get<i64>();
    s.slow_fast_count = j.at("slow_fast_count").get<i64>();
    s.any_rule_count = j.at("any_rule_count").get<i64>();
    if (!j.at("oracle_instance_count").is_null()) s.oracle_instance_count = j["oracle_instance_count"].get<i64>();
    if (!j.at("dyadic_verified_count").is_null()) s.dyadic_verified_count = j["dyadic_verified_count"].get<i64>();
    if (j.contains("elapsed")) s.elapsed = std::chrono::milliseconds(j["elapsed"].get<i64>());
    return s;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed summary JSON: ") + e.what());
  }
}

inline EnumerationSummary parse_summary_json(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidInput("summary is not valid JSON");
  return summary_from_json(j);
}

// --- CSV --------------------------------------------------------------------

inline constexpr std::string_view kRecordCsvHeader =
    "speeds,k,coprime,thm1,thm2,slow_fast,any_rule,is_instance,earliest_time,dyadic_m";

inline constexpr std::string_view kSummaryCsvHeader =
    "max_speed,total_vectors,coprime_vectors,thm1_count,thm2_count,slow_fast_count,any_rule_count,"
    "oracle_instance_count,dyadic_verified_count";

namespace detail {

inline std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  for (std::size_t pos = 0;;) {
    const auto next = line.find(sep, pos);
    out.push_back(line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) return out;
    pos = next + 1;
  }
}

inline i64 parse_i64(std::string_view s) {
  const auto q = Rational::parse(s);
  if (!q.is_integer()) throw InvalidInput("expected an integer, got '" + std::string(s) + "'");
  return q.num();
}

inline bool parse_flag(std::string_view s) {
  if (s == "1") return true;
  if (s == "0") return false;
  throw InvalidInput("expected 0 or 1, got '" + std::string(s) + "'");
}

inline std::string trim_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return std::string(s);
}

} // namespace detail

inline std::string to_csv_row(const VectorRecord& r) {
  std::string speeds;
  for (i64 v : r.speeds) {
    if (!speeds.empty()) speeds += ';';
    speeds += std::to_string(v);
  }
  std::ostringstream os;
  os << speeds << ',' << r.speeds.k() << ',' << r.coprime << ',' << r.thm1 << ',' << r.thm2 << ',' << r.slow_fast
     << ',' << r.any_rule << ',';
  if (r.is_instance) os << *r.is_instance;
  os << ',';
  if (r.earliest_time) os << r.earliest_time->str();
  os << ',';
  if (r.dyadic_m) os << *r.dyadic_m;
  return os.str();
}

inline VectorRecord parse_csv_record(std::string_view raw) {
  const std::string line = detail::trim_cr(raw);
  const auto f = detail::split(line, ',');
  if (f.size() != 10) throw InvalidInput("CSV record needs 10 fields, got " + std::to_string(f.size()));
  std::vector<i64> speeds;
  for (auto s : detail::split(f[0], ';')) speeds.push_back(detail::parse_i64(s));
  VectorRecord r{.speeds = SpeedVector::from_values(speeds)};
  if (detail::parse_i64(f[1]) != static_cast<i64>(r.speeds.k())) throw InvalidInput("CSV k does not match speeds");
  r.coprime = detail::parse_flag(f[2]);
  r.thm1 = detail::parse_flag(f[3]);
  r.thm2 = detail::parse_flag(f[4]);
  r.slow_fast = detail::parse_flag(f[5]);
  r.any_rule = detail::parse_flag(f[6]);
  if (!f[7].empty()) r.is_instance = detail::parse_flag(f[7]);
  if (!f[8].empty()) r.earliest_time = Rational::parse(f[8]);
  if (!f[9].empty()) r.dyadic_m = detail::parse_i64(f[9]);
  return r;
}

/// Writes the header on construction, then one row per record.
class CsvRecordWriter {
public:
  explicit CsvRecordWriter(std::ostream& os) : os_(os) { os_ << kRecordCsvHeader << '\n'; }
  void operator()(const VectorRecord& r) { os_ << to_csv_row(r) << '\n'; }

private:
  std::ostream& os_;
};

inline std::string to_csv(const EnumerationSummary& s) {
  auto opt = [](const std::optional<i64>& v) { return v ? std::to_string(*v) : std::string(); };
  std::ostringstream os;
  os << kSummaryCsvHeader << '\n'
     << s.max_speed << ',' << s.total_vectors << ',' << s.coprime_vectors << ',' << s.thm1_count << ','
     << s.thm2_count << ',' << s.slow_fast_count << ',' << s.any_rule_count << ',' << opt(s.oracle_instance_count)
     << ',' << opt(s.dyadic_verified_count) << '\n';
  return os.str();
}

inline EnumerationSummary parse_summary_csv(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string header, row;
  if (!std::getline(is, header) || detail::trim_cr(header) != kSummaryCsvHeader)
    throw InvalidInput("summary CSV header mismatch");
  if (!std::getline(is, row)) throw InvalidInput("summary CSV has no data row");
  const std::string line = detail::trim_cr(row);
  const auto f = detail::split(line, ',');
  if (f.size() != 9) throw InvalidInput("summary CSV row needs 9 fields");
  EnumerationSummary s;
  s.max_speed = static_cast<int>(detail::parse_i64(f[0]));
  s.total_vectors = detail::parse_i64(f[1]);
  s.coprime_vectors = detail::parse_i64(f[2]);
  s.thm1_count = detail::parse_i64(f[3]);
  s.thm2_count = detail::parse_i64(f[4]);
  s.slow_fast_count = detail::parse_i64(f[5]);
  s.any_rule_count = detail::parse_i64(f[6]);
  if (!f[7].empty()) s.oracle_instance_count = detail::parse_i64(f[7]);
  if (!f[8].empty()) s.dyadic_verified_count = detail::parse_i64(f[8]);
  return s;
}

inline void export_summary(const EnumerationSummary& s, ExportFormat format, std::ostream& os,
                           bool include_elapsed = false) {
  if (format == ExportFormat::Json)
    os << to_json(s, include_elapsed).dump(2) << '\n';
  else
    os << to_csv(s);
  if (!os) throw IoError("failed writing summary");
}

inline std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

inline void export_summary(const EnumerationSummary& s, ExportFormat format, const std::filesystem::path& path,
                           bool include_elapsed = false) {
  auto out = open_output(path);
  export_summary(s, format, out, include_elapsed);
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

} // namespace lonely

#endif // LONELY_SERIALIZE_HPP

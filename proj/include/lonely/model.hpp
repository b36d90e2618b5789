#ifndef LONELY_MODEL_HPP
#define LONELY_MODEL_HPP

#include <lonely/exact_arith.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace lonely {

/**
 * Strictly decreasing positive integer speeds n_1 > n_2 > ... > n_k.
 *
 * Duplicates are rejected by from_values(); use normalize() to fold them.
 * Indexing through operator[] is zero-based, the named accessors follow the
 * usual one-based runner numbering.
 */
class SpeedVector {
public:
  /// Validates and sorts descending. Throws InvalidInput on an empty list,
  /// a non-positive entry, or a repeated entry.
  static SpeedVector from_values(std::span<const i64> values) {
    if (values.empty()) throw InvalidInput("speed list is empty");
    for (i64 v : values)
      if (v < 1) throw InvalidInput("speed " + std::to_string(v) + " is not positive");
    std::vector<i64> s(values.begin(), values.end());
    std::sort(s.begin(), s.end(), std::greater<>());
    auto dup = std::adjacent_find(s.begin(), s.end());
    if (dup != s.end()) throw InvalidInput("speed " + std::to_string(*dup) + " appears more than once");
    return SpeedVector(std::move(s));
  }

  static SpeedVector from_values(std::initializer_list<i64> values) {
    return from_values(std::span<const i64>(values.begin(), values.size()));
  }

  /// Trusted path for callers that already hold a strictly decreasing list.
  static SpeedVector from_descending(std::vector<i64> speeds) { return SpeedVector(std::move(speeds)); }

  std::size_t k() const { return speeds_.size(); }
  i64 operator[](std::size_t i) const { return speeds_[i]; }
  i64 runner(std::size_t one_based) const { return speeds_.at(one_based - 1); }
  i64 fastest() const { return speeds_.front(); }
  i64 slowest() const { return speeds_.back(); }

  std::span<const i64> speeds() const { return speeds_; }
  auto begin() const { return speeds_.begin(); }
  auto end() const { return speeds_.end(); }

  /// Canonical text form, e.g. "(17,16,7,6,5,4,2)".
  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < speeds_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(speeds_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const SpeedVector&, const SpeedVector&) = default;

private:
  explicit SpeedVector(std::vector<i64> s) : speeds_(std::move(s)) {}

  std::vector<i64> speeds_;
};

inline SpeedVector new_speed_vector(std::span<const i64> values) { return SpeedVector::from_values(values); }

inline i64 gcd_of(const SpeedVector& n) {
  i64 g = 0;
  for (i64 v : n) g = std::gcd(g, v);
  return g;
}

/// Sorts descending, drops duplicates and non-positive entries, divides out the gcd.
inline SpeedVector normalize(std::span<const i64> values) {
  std::vector<i64> s;
  for (i64 v : values)
    if (v > 0) s.push_back(v);
  if (s.empty()) throw InvalidInput("normalize needs at least one positive speed");
  std::sort(s.begin(), s.end(), std::greater<>());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  i64 g = 0;
  for (i64 v : s) g = std::gcd(g, v);
  for (i64& v : s) v /= g;
  return SpeedVector::from_descending(std::move(s));
}

inline SpeedVector normalize(std::initializer_list<i64> values) {
  return normalize(std::span<const i64>(values.begin(), values.size()));
}

} // namespace lonely

#endif // LONELY_MODEL_HPP

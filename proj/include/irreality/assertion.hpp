#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "irreality/errors.hpp"

namespace irreality {

enum class AssertionKind { Equal, AtMost, AtLeast };

/// One checked claim. For Equal, slack = tolerance - |measured - expected|
/// and the claim passes when slack ≥ 0. For AtMost / AtLeast, `expected`
/// holds the bound, slack is the signed margin, and the claim passes when
/// slack ≥ -tolerance.
struct Assertion {
  std::string id;
  std::string anchor;
  double measured = 0.0;
  double expected = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  AssertionKind kind = AssertionKind::Equal;
  bool pass = false;
};

inline Assertion check_equal(std::string id, std::string anchor, double measured, double expected, double tolerance) {
  const double slack = tolerance - std::abs(measured - expected);
  return Assertion{std::move(id), std::move(anchor), measured, expected, slack, tolerance,
                   AssertionKind::Equal, slack >= 0.0};
}

/// Equality with tolerance relative to |expected|.
inline Assertion check_relative(std::string id, std::string anchor, double measured, double expected,
                                double rel_tolerance) {
  return check_equal(std::move(id), std::move(anchor), measured, expected, rel_tolerance * std::abs(expected));
}

inline Assertion check_at_most(std::string id, std::string anchor, double measured, double bound, double slack_tol) {
  const double slack = bound - measured;
  return Assertion{std::move(id), std::move(anchor), measured, bound, slack, slack_tol,
                   AssertionKind::AtMost, slack >= -slack_tol};
}

inline Assertion check_at_least(std::string id, std::string anchor, double measured, double bound, double slack_tol) {
  const double slack = measured - bound;
  return Assertion{std::move(id), std::move(anchor), measured, bound, slack, slack_tol,
                   AssertionKind::AtLeast, slack >= -slack_tol};
}

struct ScenarioResult {
  std::string name;
  std::vector<std::pair<std::string, double>> scalars;
  std::vector<Assertion> assertions;

  void scalar(std::string key, double value) { scalars.emplace_back(std::move(key), value); }
  void add(Assertion a) { assertions.push_back(std::move(a)); }

  double scalar(const std::string& key) const {
    for (const auto& [k, v] : scalars)
      if (k == key) return v;
    throw Error(ErrorCode::InvalidParameter, "scenario " + name + " has no scalar " + key);
  }

  bool all_pass() const {
    for (const auto& a : assertions)
      if (!a.pass) return false;
    return true;
  }
};

}  // namespace irreality

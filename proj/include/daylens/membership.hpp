#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "daylens/category.hpp"

namespace daylens {

// Trapezoid on a crisp axis: zero outside [a, d], one on [b, c], linear in
// between. Degenerate edges (a == b, c == d) are vertical; a == b == c == d
// is a crisp singleton.
struct TrapezoidMF {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  bool operator==(const TrapezoidMF&) const = default;
};

// Throws InputError unless a <= b <= c <= d and all four are finite.
void validate_mf(const TrapezoidMF& mf);

// Degree of x in [0, 1]. Shared points of degenerate edges evaluate to 1.
double mf_eval(const TrapezoidMF& mf, double x);

// Quantile by rank r = (n+1)*p with linear interpolation between adjacent
// order statistics, clamped to the extremes. This is the convention under
// which eleven samples put Q1/Q2/Q3 exactly on the 3rd/6th/9th values.
// Throws InputError on an empty sample list.
double quantile(std::span<const double> samples, double p);

// Trapezoid (min, Q1, Q3, max) over the sample distribution.
TrapezoidMF mf_from_samples(std::span<const double> samples);

// The fixed linguistic term set for one (category, kind) axis, in canonical
// display order.
std::span<const std::string_view> term_names(Category category, QuantityKind kind);

// Canonical spelling of a term; folds the `less_score` alias into
// `low_score`.
std::string canonical_term(std::string_view term);

// One fuzzified axis: every linguistic term of a (category, kind) pair with
// its membership function, kept in canonical term order.
struct LinguisticVariable {
  Category category = Category::social;
  QuantityKind kind = QuantityKind::time;
  std::vector<std::pair<std::string, TrapezoidMF>> terms;

  const TrapezoidMF* find(std::string_view term) const;
};

// Builds a variable from (term, mf) pairs, validating the term set is
// exactly the canonical one and every trapezoid is well-formed.
LinguisticVariable make_variable(
    Category category, QuantityKind kind,
    std::span<const std::pair<std::string, TrapezoidMF>> terms);

// Degrees of x for every term of the variable, canonical order. Degrees are
// independent; they need not sum to 1.
std::vector<std::pair<std::string, double>> variable_eval(
    const LinguisticVariable& var, double x);

// The complete fuzzification setup: one variable per (category, kind) pair,
// ten in all.
struct MembershipConfig {
  std::array<LinguisticVariable, kCategoryCount * 2> slots{};

  const LinguisticVariable& variable(Category category, QuantityKind kind) const;
};

// Validates completeness (all ten variables, no duplicates).
MembershipConfig make_config(std::vector<LinguisticVariable> variables);

// Calibration: per-term respondent samples in, quartile trapezoids out.
struct TermSamples {
  Category category = Category::social;
  QuantityKind kind = QuantityKind::time;
  std::string term;
  std::vector<double> values;
};

struct TermCalibration {
  Category category = Category::social;
  QuantityKind kind = QuantityKind::time;
  std::string term;
  TrapezoidMF mf{};
  double q2 = 0.0;  // median, diagnostic only; the trapezoid ignores it
};

struct CalibrationResult {
  MembershipConfig config;
  std::vector<TermCalibration> diagnostics;  // canonical variable/term order
};

// Throws InputError naming every missing or duplicated (category, kind,
// term) slot.
CalibrationResult calibrate(std::span<const TermSamples> samples);

}  // namespace daylens

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "daylens/catalog.hpp"
#include "daylens/category.hpp"

namespace daylens {

// One stop at a tagged place. Durations are hours throughout.
struct Visit {
  Tag tag;
  double hours = 0.0;
  std::optional<std::int64_t> start;  // epoch seconds, when known

  bool operator==(const Visit&) const = default;
};

// Time spent at the registered home, split into category allocations with
// home-specific intensity weights (working at home is usually less
// productive than at the workplace, so it gets its own weights).
struct HomeProfile {
  double total_hours = 0.0;            // tau
  PerCategory<double> allocations{};   // tau_i, sums to total_hours
  PerCategory<double> weights{};       // xi_i, in [-100, 100]

  bool operator==(const HomeProfile&) const = default;
};

// A full analysis day: tagged visits (never `home`) plus the home profile.
struct DayLog {
  std::vector<Visit> visits;
  HomeProfile home;
};

// The ten crisp inputs to fuzzification: per category, total hours K and
// weighted score M.
struct CategoryBreakdown {
  PerCategory<double> time_total{};   // K_i, hours
  PerCategory<double> score_total{};  // M_i, weight-hours

  bool operator==(const CategoryBreakdown&) const = default;
};

// Fills the leisure allocation with whatever home time the other categories
// leave over (leisure includes rest). Throws InputError if allocations
// exceed total_hours or any field is out of range.
HomeProfile normalize_home(HomeProfile profile);

// Throws InputError if the log breaks a DayLog invariant (home-tagged or
// negative-duration visits, over-allocated home profile).
void validate_daylog(const DayLog& log);

// K_cat: visit hours of every tag belonging to `cat`, plus the home
// allocation. A multi-category tag contributes its full duration to each of
// its categories.
double category_time(const DayLog& log, const TagCatalog& catalog, Category cat);

// M_cat: sum of hours * weight over the category's visits, plus the home
// allocation times its home weight.
double category_score(const DayLog& log, const TagCatalog& catalog, Category cat);

// All five (K_i, M_i) pairs in one pass.
CategoryBreakdown breakdown(const DayLog& log, const TagCatalog& catalog);

}  // namespace daylens

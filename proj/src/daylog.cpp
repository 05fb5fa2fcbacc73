#include "daylens/daylog.hpp"

#include <cmath>
#include <string>

#include "daylens/error.hpp"

namespace daylens {

namespace {

constexpr double kHomeSumSlack = 1e-9;

void check_weight_range(double w, const std::string& what) {
  if (!std::isfinite(w) || w < kWeightMin || w > kWeightMax) {
    throw InputError(what + " outside [-100, 100]");
  }
}

}  // namespace

HomeProfile normalize_home(HomeProfile profile) {
  if (!std::isfinite(profile.total_hours) || profile.total_hours < 0.0) {
    throw InputError("home total_hours must be non-negative");
  }
  double allocated = 0.0;
  for (Category cat : kAllCategories) {
    const double a = profile.allocations[cat];
    if (!std::isfinite(a) || a < 0.0) {
      throw InputError(std::string("home allocation for ") +
                       std::string(to_string(cat)) + " must be non-negative");
    }
    allocated += a;
    check_weight_range(profile.weights[cat],
                       std::string("home weight for ") + std::string(to_string(cat)));
  }
  if (allocated > profile.total_hours + kHomeSumSlack) {
    throw InputError("home allocations exceed total home time");
  }
  // Leftover home time is rest, which counts as leisure.
  const double remainder = profile.total_hours - allocated;
  if (remainder > 0.0) profile.allocations[Category::leisure] += remainder;
  return profile;
}

void validate_daylog(const DayLog& log) {
  for (const Visit& v : log.visits) {
    if (v.tag == kHomeTag) {
      throw InputError("day log visits must not carry the home tag");
    }
    if (v.tag.empty()) throw InputError("visit with empty tag");
    if (!std::isfinite(v.hours) || v.hours < 0.0) {
      throw InputError("visit duration for '" + v.tag + "' must be non-negative");
    }
  }
  double allocated = 0.0;
  for (Category cat : kAllCategories) allocated += log.home.allocations[cat];
  if (allocated > log.home.total_hours + kHomeSumSlack) {
    throw InputError("home allocations exceed total home time");
  }
}

double category_time(const DayLog& log, const TagCatalog& catalog, Category cat) {
  double total = log.home.allocations[cat];
  for (const Visit& v : log.visits) {
    if (categories_of(catalog, v.tag).contains(cat)) total += v.hours;
  }
  return total;
}

double category_score(const DayLog& log, const TagCatalog& catalog, Category cat) {
  double total = log.home.allocations[cat] * log.home.weights[cat];
  for (const Visit& v : log.visits) {
    if (categories_of(catalog, v.tag).contains(cat)) {
      total += v.hours * tag_weight(catalog, v.tag, cat);
    }
  }
  return total;
}

CategoryBreakdown breakdown(const DayLog& log, const TagCatalog& catalog) {
  CategoryBreakdown bd;
  for (Category cat : kAllCategories) {
    bd.time_total[cat] = category_time(log, catalog, cat);
    bd.score_total[cat] = category_score(log, catalog, cat);
  }
  return bd;
}

}  // namespace daylens

#include "daylens/ingest.hpp"

#include <cmath>
#include <string>

#include "daylens/error.hpp"

namespace daylens {

namespace {

constexpr std::int64_t kDaySeconds = 24 * 3600;

std::int64_t floor_mod(std::int64_t value, std::int64_t modulus) {
  std::int64_t m = value % modulus;
  return m < 0 ? m + modulus : m;
}

// Start of the analysis day containing the instant: the most recent
// boundary-hour tick at or before it.
std::int64_t day_start(std::int64_t instant, int boundary_hour) {
  const std::int64_t boundary_sec = static_cast<std::int64_t>(boundary_hour) * 3600;
  return instant - floor_mod(instant - boundary_sec, kDaySeconds);
}

struct TaggedSpan {
  Tag tag;
  double hours;
  std::int64_t start;
};

}  // namespace

DayLog trace_to_daylog(std::span<const GpsPoint> trace, const PoiDatabase& db,
                       const StayPointParams& params,
                       const HomeAllocation& allocation) {
  validate_params(params);
  if (!db.home || !db.work) {
    throw InputError("home and work locations must be registered before analysis");
  }
  if (trace.empty()) throw InputError("empty GPS trace");

  double fraction_sum = 0.0;
  for (Category cat : kAllCategories) {
    const double f = allocation.fractions[cat];
    if (!std::isfinite(f) || f < 0.0) {
      throw InputError(std::string("allocation fraction for ") +
                       std::string(to_string(cat)) + " must be non-negative");
    }
    fraction_sum += f;
  }
  if (fraction_sum > 1.0 + 1e-9) {
    throw InputError("home allocation fractions sum past 1");
  }

  std::vector<GpsPoint> points = filter_outliers(trace);

  // Trim to the analysis day anchored at the first kept point. The closing
  // boundary instant still belongs to this day, so a trace spanning exactly
  // one day keeps its final sample.
  const std::int64_t start = day_start(points.front().timestamp, params.day_boundary_hour);
  const std::int64_t end = start + kDaySeconds;
  std::erase_if(points, [&](const GpsPoint& p) { return p.timestamp > end; });

  const auto stays = detect_stay_points(points, params);

  std::vector<TaggedSpan> spans;
  const std::int64_t travel_gap_sec = static_cast<std::int64_t>(kTravelGapMin * 60.0);
  for (std::size_t i = 0; i < stays.size(); ++i) {
    if (i > 0) {
      const std::int64_t gap = stays[i].arrival - stays[i - 1].departure;
      if (gap > travel_gap_sec) {
        spans.push_back({Tag(kTravelTag), static_cast<double>(gap) / 3600.0,
                         stays[i - 1].departure});
      }
    }
    spans.push_back({resolve_poi(db, stays[i].centroid, params), stays[i].hours(),
                     stays[i].arrival});
  }

  // Merge adjacent same-tag spans (two short stays at one cafe separated by
  // a sub-travel gap read as one visit).
  std::vector<TaggedSpan> merged;
  for (const auto& span : spans) {
    if (!merged.empty() && merged.back().tag == span.tag) {
      merged.back().hours += span.hours;
    } else {
      merged.push_back(span);
    }
  }

  DayLog log;
  double home_hours = 0.0;
  for (const auto& span : merged) {
    if (span.tag == kHomeTag) {
      home_hours += span.hours;
    } else {
      log.visits.push_back({span.tag, span.hours, span.start});
    }
  }

  HomeProfile home;
  home.total_hours = home_hours;
  home.weights = allocation.weights;
  for (Category cat : kAllCategories) {
    home.allocations[cat] = home_hours * allocation.fractions[cat];
  }
  log.home = normalize_home(home);  // remainder of tau goes to leisure
  return log;
}

}  // namespace daylens

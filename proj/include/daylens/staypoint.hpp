#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "daylens/geo.hpp"

namespace daylens {

struct GpsPoint {
  std::int64_t timestamp = 0;  // epoch seconds
  double lat = 0.0;
  double lon = 0.0;
};

// A dwell: a contiguous trace segment that stays near one spot long enough.
struct StayPoint {
  LatLon centroid;
  std::int64_t arrival = 0;
  std::int64_t departure = 0;  // > arrival

  double hours() const { return static_cast<double>(departure - arrival) / 3600.0; }
};

struct StayPointParams {
  double distance_threshold_m = 200.0;  // run-extension radius around the anchor
  double min_dwell_min = 20.0;          // runs shorter than this are not dwells
  double poi_radius_m = 75.0;           // POI lookup radius
  double home_work_radius_m = 50.0;     // registered home/work match radius
  int day_boundary_hour = 4;            // analysis day runs boundary -> boundary
};

// Throws InputError unless every parameter is strictly positive and
// home_work_radius_m <= poi_radius_m.
void validate_params(const StayPointParams& params);

// Points implying travel faster than this between consecutive fixes are
// dropped as GPS noise before segmentation.
inline constexpr double kMaxSpeedMps = 70.0;

// Gaps between consecutive stay points longer than this are treated as
// travel.
inline constexpr double kTravelGapMin = 5.0;

// Drops every point whose implied speed from the previous kept point
// exceeds kMaxSpeedMps. Keeps the first point unconditionally.
std::vector<GpsPoint> filter_outliers(std::span<const GpsPoint> trace);

// Greedy dwell segmentation: each run starts at an anchor point and extends
// while points stay within distance_threshold_m of the anchor; runs
// spanning at least min_dwell_min become stay points (centroid = mean
// coordinates). Runs partition the trace, so min_dwell_min acts purely as a
// filter. Throws InputError on a non-increasing timestamp sequence.
std::vector<StayPoint> detect_stay_points(std::span<const GpsPoint> trace,
                                          const StayPointParams& params);

}  // namespace daylens

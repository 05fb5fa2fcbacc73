#include "daylens/staypoint.hpp"

#include "daylens/error.hpp"

namespace daylens {

void validate_params(const StayPointParams& params) {
  if (params.distance_threshold_m <= 0.0 || params.min_dwell_min <= 0.0 ||
      params.poi_radius_m <= 0.0 || params.home_work_radius_m <= 0.0 ||
      params.day_boundary_hour <= 0) {
    throw InputError("stay-point parameters must be strictly positive");
  }
  if (params.home_work_radius_m > params.poi_radius_m) {
    throw InputError("home/work radius must not exceed the POI radius");
  }
}

namespace {

void require_ordered(std::span<const GpsPoint> trace) {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (trace[i].timestamp <= trace[i - 1].timestamp) {
      throw InputError("trace timestamps must be strictly increasing");
    }
  }
}

}  // namespace

std::vector<GpsPoint> filter_outliers(std::span<const GpsPoint> trace) {
  require_ordered(trace);
  std::vector<GpsPoint> kept;
  kept.reserve(trace.size());
  for (const GpsPoint& p : trace) {
    if (!kept.empty()) {
      const GpsPoint& prev = kept.back();
      const double meters = haversine_m({prev.lat, prev.lon}, {p.lat, p.lon});
      const double seconds = static_cast<double>(p.timestamp - prev.timestamp);
      if (meters / seconds > kMaxSpeedMps) continue;
    }
    kept.push_back(p);
  }
  return kept;
}

std::vector<StayPoint> detect_stay_points(std::span<const GpsPoint> trace,
                                          const StayPointParams& params) {
  validate_params(params);
  require_ordered(trace);

  std::vector<StayPoint> stays;
  const double min_dwell_sec = params.min_dwell_min * 60.0;
  std::size_t i = 0;
  while (i < trace.size()) {
    const LatLon anchor{trace[i].lat, trace[i].lon};
    // Extend the run while points stay within the threshold of the anchor.
    std::size_t j = i;
    while (j + 1 < trace.size() &&
           haversine_m(anchor, {trace[j + 1].lat, trace[j + 1].lon}) <=
               params.distance_threshold_m) {
      ++j;
    }
    const auto span_sec = static_cast<double>(trace[j].timestamp - trace[i].timestamp);
    if (span_sec >= min_dwell_sec) {
      LatLon centroid{};
      for (std::size_t k = i; k <= j; ++k) {
        centroid.lat += trace[k].lat;
        centroid.lon += trace[k].lon;
      }
      const auto n = static_cast<double>(j - i + 1);
      centroid.lat /= n;
      centroid.lon /= n;
      stays.push_back({centroid, trace[i].timestamp, trace[j].timestamp});
    }
    i = j + 1;  // runs partition the trace; the dwell filter never reshapes them
  }
  return stays;
}

}  // namespace daylens

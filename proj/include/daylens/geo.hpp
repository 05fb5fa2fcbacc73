#pragma once

#include <cmath>
#include <numbers>

namespace daylens {

struct LatLon {
  double lat = 0.0;  // degrees, [-90, 90]
  double lon = 0.0;  // degrees, [-180, 180]

  bool operator==(const LatLon&) const = default;
};

inline constexpr double kEarthRadiusM = 6'371'000.0;

// Great-circle distance in meters (haversine, mean Earth radius).
inline double haversine_m(LatLon p, LatLon q) {
  constexpr double deg = std::numbers::pi / 180.0;
  const double dlat = (q.lat - p.lat) * deg;
  const double dlon = (q.lon - p.lon) * deg;
  const double sa = std::sin(dlat / 2.0);
  const double sb = std::sin(dlon / 2.0);
  double h = sa * sa + std::cos(p.lat * deg) * std::cos(q.lat * deg) * sb * sb;
  if (h > 1.0) h = 1.0;  // keep asin in range against rounding
  return 2.0 * kEarthRadiusM * std::asin(std::sqrt(h));
}

}  // namespace daylens

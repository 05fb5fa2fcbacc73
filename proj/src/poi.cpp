#include "daylens/poi.hpp"

#include "daylens/error.hpp"

namespace daylens {

std::vector<PoiEntry> OfflinePoiSearch::nearby(LatLon center, double radius_m) const {
  std::vector<PoiEntry> hits;
  for (const PoiEntry& poi : db_->pois) {
    if (haversine_m(center, poi.location) <= radius_m) hits.push_back(poi);
  }
  return hits;
}

Tag resolve_poi(const PoiDatabase& db, const NearbySearch& search, LatLon point,
                const StayPointParams& params) {
  if (!db.home || !db.work) {
    throw InputError("home and work locations must be registered before analysis");
  }
  if (haversine_m(point, *db.home) <= params.home_work_radius_m) {
    return Tag(kHomeTag);
  }
  if (haversine_m(point, *db.work) <= params.home_work_radius_m) {
    return Tag(kWorkTag);
  }
  const auto candidates = search.nearby(point, params.poi_radius_m);
  const PoiEntry* best = nullptr;
  double best_dist = 0.0;
  for (const PoiEntry& poi : candidates) {
    const double dist = haversine_m(point, poi.location);
    if (dist > params.poi_radius_m) continue;
    if (!best || dist < best_dist) {  // strict: ties keep the earlier entry
      best = &poi;
      best_dist = dist;
    }
  }
  return best ? best->tag : Tag(kUnknownTag);
}

Tag resolve_poi(const PoiDatabase& db, LatLon point, const StayPointParams& params) {
  return resolve_poi(db, OfflinePoiSearch(db), point, params);
}

}  // namespace daylens

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "daylens/catalog.hpp"
#include "daylens/geo.hpp"
#include "daylens/staypoint.hpp"

namespace daylens {

struct PoiEntry {
  std::string name;
  LatLon location;
  Tag tag;
};

// Offline point-of-interest database. Home and work must be registered
// before a trace can be analyzed; their locations are user-specific (two
// pizza shops: the one you work at is `work`, the other is a social visit).
struct PoiDatabase {
  std::optional<LatLon> home;
  std::optional<LatLon> work;
  std::vector<PoiEntry> pois;
};

// Pluggable nearby-place lookup, so a live places service can stand in for
// the offline database. Implementations return candidates in ranking order;
// ties on distance are broken by that order.
class NearbySearch {
 public:
  virtual ~NearbySearch() = default;
  virtual std::vector<PoiEntry> nearby(LatLon center, double radius_m) const = 0;
};

// Default resolver: scans the database entries in file order.
class OfflinePoiSearch final : public NearbySearch {
 public:
  explicit OfflinePoiSearch(const PoiDatabase& db) : db_(&db) {}
  std::vector<PoiEntry> nearby(LatLon center, double radius_m) const override;

 private:
  const PoiDatabase* db_;
};

// Adapter for the nearby-search HTTP protocol:
//   GET /nearby?lat=<deg>&lon=<deg>&radius=<m>
//   -> {"results": [{"name": ..., "tag": ..., "lat": ..., "lon": ...}]}
// One logical request at a time per instance.
class HttpNearbySearch final : public NearbySearch {
 public:
  HttpNearbySearch(std::string host, int port) : host_(std::move(host)), port_(port) {}
  std::vector<PoiEntry> nearby(LatLon center, double radius_m) const override;

 private:
  std::string host_;
  int port_;
};

// Tag for a location: `home`/`work` when within home_work_radius_m of the
// registered spots (home first), else the nearest POI within poi_radius_m,
// else `unknown`. Throws InputError when home or work is unregistered.
Tag resolve_poi(const PoiDatabase& db, const NearbySearch& search, LatLon point,
                const StayPointParams& params);

// Same, against the offline database.
Tag resolve_poi(const PoiDatabase& db, LatLon point, const StayPointParams& params);

}  // namespace daylens

#include <sstream>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "daylens/error.hpp"
#include "daylens/poi.hpp"

namespace daylens {

std::vector<PoiEntry> HttpNearbySearch::nearby(LatLon center, double radius_m) const {
  httplib::Client client(host_, port_);
  client.set_connection_timeout(5);
  client.set_read_timeout(5);

  std::ostringstream path;
  path.precision(17);
  path << "/nearby?lat=" << center.lat << "&lon=" << center.lon
       << "&radius=" << radius_m;
  const auto res = client.Get(path.str());
  if (!res) {
    throw InputError("nearby-search request to " + host_ + " failed: " +
                     httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw InputError("nearby-search returned HTTP " + std::to_string(res->status));
  }

  std::vector<PoiEntry> entries;
  try {
    const auto doc = nlohmann::json::parse(res->body);
    for (const auto& item : doc.at("results")) {
      entries.push_back({item.at("name").get<std::string>(),
                         {item.at("lat").get<double>(), item.at("lon").get<double>()},
                         item.at("tag").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed nearby-search response: ") + e.what());
  }
  return entries;
}

}  // namespace daylens

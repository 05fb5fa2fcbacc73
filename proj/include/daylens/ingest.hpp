#pragma once

#include <span>

#include "daylens/daylog.hpp"
#include "daylens/poi.hpp"
#include "daylens/staypoint.hpp"

namespace daylens {

// How home time splits into categories, with the home intensity weights.
// Fractions sum to at most 1; the unassigned remainder is leisure (leisure
// includes rest).
struct HomeAllocation {
  PerCategory<double> fractions{};
  PerCategory<double> weights{};
};

// Raw trace -> analysis-ready day log:
//   1. trim to the analysis day anchored at the first point (boundary hour
//      to boundary hour, closing instant inclusive), drop speed outliers;
//   2. segment into stay points and resolve each centroid to a tag;
//   3. gaps between stay points longer than kTravelGapMin become `travel`
//      visits; adjacent same-tag entries merge;
//   4. home dwell time becomes the profile's tau, split by the allocation
//      fractions.
// Throws InputError on missing home/work registration, fractions summing
// past 1, or an unordered trace.
DayLog trace_to_daylog(std::span<const GpsPoint> trace, const PoiDatabase& db,
                       const StayPointParams& params,
                       const HomeAllocation& allocation);

}  // namespace daylens

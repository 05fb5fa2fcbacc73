#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "daylens/catalog.hpp"
#include "daylens/daylog.hpp"
#include "daylens/inference.hpp"
#include "daylens/ingest.hpp"
#include "daylens/membership.hpp"
#include "daylens/poi.hpp"
#include "daylens/survey.hpp"

// File formats. Everything is JSON except GPS traces (CSV with a
// `timestamp,lat,lon` header). Loaders validate invariants and throw
// InputError with the offending file and reason; writers are deterministic
// (identical input -> identical bytes).

namespace daylens {

// Shortest round-trip decimal representation of a double.
std::string format_double(double value);

TagCatalog load_catalog(const std::filesystem::path& path);

DayLog load_daylog(const std::filesystem::path& path);
void save_daylog(const DayLog& log, const std::filesystem::path& path);

MembershipConfig load_membership(const std::filesystem::path& path);
void save_membership(const MembershipConfig& config, const std::filesystem::path& path);

RuleBase load_rules(const std::filesystem::path& path);

PoiDatabase load_poi_db(const std::filesystem::path& path);

HomeAllocation load_allocation(const std::filesystem::path& path);

std::vector<GpsPoint> load_trace_csv(const std::filesystem::path& path);

std::vector<TermSamples> load_calibration(const std::filesystem::path& path);

// One survey vote as stored on disk; polarity travels per record.
struct VoteRecord {
  Tag tag;
  double percent = 0.0;
  VotePolarity polarity = VotePolarity::positive;
};

struct VoteFile {
  std::vector<VoteRecord> votes;
  std::string category;  // empty when the file is a bare vote list
};

VoteFile load_votes(const std::filesystem::path& path);

enum class OutputFormat { json, table, csv };

// Report rendering; every renderer ends with a newline and contains no
// timestamps or environment-dependent content.
std::string render_report(const CategoryBreakdown& bd,
                          const RecommendationReport& report, OutputFormat format);

// Membership curve sampling for plots: `x,<term>,...` CSV rows over the
// union of the variable's supports. resolution >= 2; resolution == 2 emits
// exactly the support endpoints.
std::string render_mf_csv(const LinguisticVariable& var, int resolution);

}  // namespace daylens

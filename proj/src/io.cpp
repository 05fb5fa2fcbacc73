#include "daylens/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "daylens/error.hpp"

namespace daylens {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

json parse_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

[[noreturn]] void fail(const fs::path& path, const std::string& what) {
  throw InputError(path.string() + ": " + what);
}

double as_number(const json& j, const fs::path& path, const std::string& what) {
  if (!j.is_number()) fail(path, what + " must be a number");
  return j.get<double>();
}

Category as_category(const std::string& name, const fs::path& path) {
  const auto cat = parse_category(name);
  if (!cat) fail(path, "unknown category '" + name + "'");
  return *cat;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("failed writing " + path.string());
}

PerCategory<double> category_map(const json& j, const fs::path& path,
                                 const std::string& what) {
  PerCategory<double> values{};
  if (!j.is_object()) fail(path, what + " must be an object keyed by category");
  for (const auto& [key, value] : j.items()) {
    values[as_category(key, path)] = as_number(value, path, what + "." + key);
  }
  return values;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

TagCatalog load_catalog(const fs::path& path) {
  const json doc = parse_json_file(path);
  if (!doc.is_object() || !doc.contains("tags") || !doc["tags"].is_object()) {
    fail(path, "expected an object with a \"tags\" map");
  }
  TagCatalog catalog;
  if (doc.contains("default_other_weight")) {
    catalog.default_other_weight =
        as_number(doc["default_other_weight"], path, "default_other_weight");
  }
  for (const auto& [tag, weights] : doc["tags"].items()) {
    if (!weights.is_object()) fail(path, "tag '" + tag + "' must map categories to weights");
    std::map<Category, double> entry;
    for (const auto& [cat, w] : weights.items()) {
      entry[as_category(cat, path)] = as_number(w, path, tag + "." + cat);
    }
    catalog.entries[tag] = std::move(entry);
  }
  return catalog;
}

DayLog load_daylog(const fs::path& path) {
  const json doc = parse_json_file(path);
  if (!doc.is_object()) fail(path, "expected a day-log object");
  DayLog log;
  for (const auto& item : doc.value("visits", json::array())) {
    if (!item.is_object() || !item.contains("tag") || !item.contains("hours")) {
      fail(path, "each visit needs \"tag\" and \"hours\"");
    }
    Visit v{item["tag"].get<std::string>(),
            as_number(item["hours"], path, "visit hours"), std::nullopt};
    if (item.contains("start")) v.start = item["start"].get<std::int64_t>();
    log.visits.push_back(std::move(v));
  }
  if (doc.contains("home")) {
    const json& home = doc["home"];
    HomeProfile profile;
    profile.total_hours = as_number(home.at("total_hours"), path, "home.total_hours");
    if (home.contains("allocations")) {
      profile.allocations = category_map(home["allocations"], path, "home.allocations");
    }
    if (home.contains("weights")) {
      profile.weights = category_map(home["weights"], path, "home.weights");
    }
    log.home = normalize_home(std::move(profile));
  }
  try {
    validate_daylog(log);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  return log;
}

void save_daylog(const DayLog& log, const fs::path& path) {
  ordered_json doc;
  doc["visits"] = ordered_json::array();
  for (const Visit& v : log.visits) {
    ordered_json item{{"tag", v.tag}, {"hours", v.hours}};
    if (v.start) item["start"] = *v.start;
    doc["visits"].push_back(std::move(item));
  }
  ordered_json allocations, weights;
  for (Category cat : kAllCategories) {
    allocations[std::string(to_string(cat))] = log.home.allocations[cat];
    weights[std::string(to_string(cat))] = log.home.weights[cat];
  }
  doc["home"] = {{"total_hours", log.home.total_hours},
                 {"allocations", allocations},
                 {"weights", weights}};
  write_text(path, doc.dump(2) + "\n");
}

MembershipConfig load_membership(const fs::path& path) {
  const json doc = parse_json_file(path);
  if (!doc.is_object()) fail(path, "expected an object keyed by category");
  std::vector<LinguisticVariable> variables;
  for (const auto& [cat_name, kinds] : doc.items()) {
    const Category cat = as_category(cat_name, path);
    if (!kinds.is_object()) fail(path, cat_name + " must hold \"time\"/\"score\" objects");
    for (const auto& [kind_name, terms] : kinds.items()) {
      const auto kind = parse_quantity_kind(kind_name);
      if (!kind) fail(path, "unknown quantity kind '" + kind_name + "'");
      if (!terms.is_object()) fail(path, cat_name + "." + kind_name + " must map terms");
      std::vector<std::pair<std::string, TrapezoidMF>> mfs;
      for (const auto& [term, arr] : terms.items()) {
        if (!arr.is_array() || arr.size() != 4) {
          fail(path, term + " must be a [a, b, c, d] array");
        }
        mfs.emplace_back(term, TrapezoidMF{as_number(arr[0], path, term),
                                           as_number(arr[1], path, term),
                                           as_number(arr[2], path, term),
                                           as_number(arr[3], path, term)});
      }
      try {
        variables.push_back(make_variable(cat, *kind, mfs));
      } catch (const InputError& e) {
        fail(path, e.what());
      }
    }
  }
  try {
    return make_config(std::move(variables));
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

void save_membership(const MembershipConfig& config, const fs::path& path) {
  ordered_json doc;
  for (Category cat : kAllCategories) {
    ordered_json kinds;
    for (QuantityKind kind : {QuantityKind::time, QuantityKind::score}) {
      ordered_json terms;
      for (const auto& [term, mf] : config.variable(cat, kind).terms) {
        terms[term] = {mf.a, mf.b, mf.c, mf.d};
      }
      kinds[std::string(to_string(kind))] = std::move(terms);
    }
    doc[std::string(to_string(cat))] = std::move(kinds);
  }
  write_text(path, doc.dump(2) + "\n");
}

RuleBase load_rules(const fs::path& path) {
  const json doc = parse_json_file(path);
  if (!doc.is_object() || !doc.contains("rules") || !doc["rules"].is_array()) {
    fail(path, "expected an object with a \"rules\" array");
  }
  RuleBase rules;
  for (const auto& item : doc["rules"]) {
    Recommendation rule;
    rule.id = item.at("id").get<std::string>();
    rule.text = item.value("text", rule.id);
    for (const auto& attr : item.value("attributes", json::array())) {
      if (!attr.is_object() || !attr.contains("category") || !attr.contains("kind") ||
          !attr.contains("term")) {
        fail(path, "rule '" + rule.id + "': each attribute needs category, kind, term");
      }
      const auto kind = parse_quantity_kind(attr["kind"].get<std::string>());
      if (!kind) fail(path, "rule '" + rule.id + "': unknown kind");
      rule.attributes.push_back({as_category(attr["category"].get<std::string>(), path),
                                 *kind,
                                 canonical_term(attr["term"].get<std::string>())});
    }
    rules.rules.push_back(std::move(rule));
  }
  try {
    validate_rules(rules);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  return rules;
}

PoiDatabase load_poi_db(const fs::path& path) {
  const json doc = parse_json_file(path);
  if (!doc.is_object()) fail(path, "expected a POI database object");
  PoiDatabase db;
  auto read_latlon = [&](const json& j, const std::string& what) -> LatLon {
    if (!j.is_array() || j.size() != 2) fail(path, what + " must be [lat, lon]");
    LatLon p{as_number(j[0], path, what), as_number(j[1], path, what)};
    if (p.lat < -90.0 || p.lat > 90.0 || p.lon < -180.0 || p.lon > 180.0) {
      fail(path, what + " coordinates out of range");
    }
    return p;
  };
  if (doc.contains("home")) db.home = read_latlon(doc["home"], "home");
  if (doc.contains("work")) db.work = read_latlon(doc["work"], "work");
  for (const auto& item : doc.value("pois", json::array())) {
    db.pois.push_back({item.at("name").get<std::string>(),
                       read_latlon(json::array({item.at("lat"), item.at("lon")}),
                                   item.at("name").get<std::string>()),
                       item.at("tag").get<std::string>()});
  }
  return db;
}

HomeAllocation load_allocation(const fs::path& path) {
  const json doc = parse_json_file(path);
  if (!doc.is_object()) fail(path, "expected an allocation object");
  HomeAllocation allocation;
  if (doc.contains("fractions") || doc.contains("weights")) {
    if (doc.contains("fractions")) {
      allocation.fractions = category_map(doc["fractions"], path, "fractions");
    }
    if (doc.contains("weights")) {
      allocation.weights = category_map(doc["weights"], path, "weights");
    }
  } else {
    // Bare map: fractions only, home weights default to 0.
    allocation.fractions = category_map(doc, path, "fractions");
  }
  return allocation;
}

std::vector<GpsPoint> load_trace_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) fail(path, "empty trace file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "timestamp,lat,lon") {
    fail(path, "trace header must be \"timestamp,lat,lon\"");
  }
  std::vector<GpsPoint> trace;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string ts, lat, lon;
    if (!std::getline(row, ts, ',') || !std::getline(row, lat, ',') ||
        !std::getline(row, lon)) {
      fail(path, "line " + std::to_string(line_no) + ": expected timestamp,lat,lon");
    }
    try {
      GpsPoint p{std::stoll(ts), std::stod(lat), std::stod(lon)};
      if (p.lat < -90.0 || p.lat > 90.0 || p.lon < -180.0 || p.lon > 180.0) {
        fail(path, "line " + std::to_string(line_no) + ": coordinates out of range");
      }
      trace.push_back(p);
    } catch (const std::logic_error&) {
      fail(path, "line " + std::to_string(line_no) + ": malformed number");
    }
  }
  return trace;
}

std::vector<TermSamples> load_calibration(const fs::path& path) {
  const json doc = parse_json_file(path);
  if (!doc.is_object()) fail(path, "expected an object keyed by category");
  std::vector<TermSamples> out;
  for (const auto& [cat_name, kinds] : doc.items()) {
    const Category cat = as_category(cat_name, path);
    if (!kinds.is_object()) fail(path, cat_name + " must hold \"time\"/\"score\" objects");
    for (const auto& [kind_name, terms] : kinds.items()) {
      const auto kind = parse_quantity_kind(kind_name);
      if (!kind) fail(path, "unknown quantity kind '" + kind_name + "'");
      for (const auto& [term, samples] : terms.items()) {
        if (!samples.is_array()) fail(path, term + " samples must be an array");
        TermSamples ts{cat, *kind, canonical_term(term), {}};
        for (const auto& sample : samples) {
          if (sample.is_number()) {
            ts.values.push_back(sample.get<double>());
          } else if (sample.is_array()) {
            // One respondent given as (time, weight) rows; reduce to a score.
            std::vector<std::pair<double, double>> rows;
            for (const auto& row : sample) {
              if (!row.is_array() || row.size() != 2) {
                fail(path, term + ": rows must be [time, weight] pairs");
              }
              rows.emplace_back(as_number(row[0], path, term),
                                as_number(row[1], path, term));
            }
            ts.values.push_back(score_sample(rows));
          } else {
            fail(path, term + ": samples must be numbers or row lists");
          }
        }
        out.push_back(std::move(ts));
      }
    }
  }
  if (out.empty()) fail(path, "no samples");
  return out;
}

VoteFile load_votes(const fs::path& path) {
  const json doc = parse_json_file(path);
  VoteFile file;
  const json* votes = &doc;
  if (doc.is_object()) {
    if (!doc.contains("votes") || !doc["votes"].is_array()) {
      fail(path, "expected a vote list or {\"category\", \"votes\"} object");
    }
    if (doc.contains("category")) {
      file.category = doc["category"].get<std::string>();
      as_category(file.category, path);
    }
    votes = &doc["votes"];
  } else if (!doc.is_array()) {
    fail(path, "expected a vote list or {\"category\", \"votes\"} object");
  }
  for (const auto& item : *votes) {
    VoteRecord record;
    record.tag = item.at("tag").get<std::string>();
    record.percent = as_number(item.at("percent"), path, "percent");
    const auto polarity = item.at("polarity").get<std::string>();
    if (polarity == "positive") {
      record.polarity = VotePolarity::positive;
    } else if (polarity == "negative") {
      record.polarity = VotePolarity::negative;
    } else {
      fail(path, "polarity must be \"positive\" or \"negative\"");
    }
    file.votes.push_back(std::move(record));
  }
  return file;
}

namespace {

ordered_json report_json(const CategoryBreakdown& bd,
                         const RecommendationReport& report) {
  ordered_json doc;
  ordered_json breakdown;
  for (Category cat : kAllCategories) {
    breakdown[std::string(to_string(cat))] = {{"hours", bd.time_total[cat]},
                                              {"score", bd.score_total[cat]}};
  }
  doc["breakdown"] = std::move(breakdown);
  doc["rules"] = ordered_json::array();
  for (const RuleResult& rule : report.rules) {
    doc["rules"].push_back({{"id", rule.id},
                            {"text", rule.text},
                            {"degrees", rule.degrees},
                            {"score", rule.score},
                            {"chosen", rule.id == report.chosen_id}});
  }
  doc["chosen"] = {{"id", report.chosen_id}, {"text", report.chosen_text}};
  if (report.all_zero) doc["warning"] = "every rule scored 0";
  return doc;
}

std::string csv_quote(const std::string& text) {
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string report_csv(const CategoryBreakdown& bd,
                       const RecommendationReport& report) {
  std::string out = "category,hours,score\n";
  for (Category cat : kAllCategories) {
    out += std::string(to_string(cat)) + "," + format_double(bd.time_total[cat]) +
           "," + format_double(bd.score_total[cat]) + "\n";
  }
  out += "\nrule,score,chosen,degrees,text\n";
  for (const RuleResult& rule : report.rules) {
    std::string degrees;
    for (double mu : rule.degrees) {
      degrees += (degrees.empty() ? "" : ";") + format_double(mu);
    }
    out += rule.id + "," + format_double(rule.score) + "," +
           (rule.id == report.chosen_id ? "1" : "0") + "," + csv_quote(degrees) +
           "," + csv_quote(rule.text) + "\n";
  }
  return out;
}

std::string report_table(const CategoryBreakdown& bd,
                         const RecommendationReport& report) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << std::left << std::setw(10) << "category" << std::right << std::setw(10)
     << "hours" << std::setw(12) << "score" << "\n";
  for (Category cat : kAllCategories) {
    os << std::left << std::setw(10) << to_string(cat) << std::right
       << std::setw(10) << bd.time_total[cat] << std::setw(12)
       << bd.score_total[cat] << "\n";
  }
  os << "\n";
  os << std::left << std::setw(6) << "rule" << std::setw(8) << "score"
     << std::setw(8) << "chosen" << "text\n";
  for (const RuleResult& rule : report.rules) {
    os << std::left << std::setw(6) << rule.id << std::setw(8) << rule.score
       << std::setw(8) << (rule.id == report.chosen_id ? "*" : "") << rule.text
       << "\n";
    os << "      degrees:";
    for (double mu : rule.degrees) os << " " << mu;
    os << "\n";
  }
  os << "\nrecommendation: " << report.chosen_text << "\n";
  if (report.all_zero) os << "warning: every rule scored 0\n";
  return os.str();
}

}  // namespace

std::string render_report(const CategoryBreakdown& bd,
                          const RecommendationReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return report_json(bd, report).dump(2) + "\n";
    case OutputFormat::csv:
      return report_csv(bd, report);
    case OutputFormat::table:
      return report_table(bd, report);
  }
  return {};
}

std::string render_mf_csv(const LinguisticVariable& var, int resolution) {
  if (resolution < 2) throw InputError("resolution must be at least 2");
  double lo = var.terms.front().second.a;
  double hi = var.terms.front().second.d;
  for (const auto& [term, mf] : var.terms) {
    lo = std::min(lo, mf.a);
    hi = std::max(hi, mf.d);
  }
  std::string out = "x";
  for (const auto& [term, mf] : var.terms) out += "," + term;
  out += "\n";
  const double step = (hi - lo) / static_cast<double>(resolution - 1);
  for (int i = 0; i < resolution; ++i) {
    const double x = i == resolution - 1 ? hi : lo + step * static_cast<double>(i);
    out += format_double(x);
    for (const auto& [term, mf] : var.terms) {
      out += "," + format_double(mf_eval(mf, x));
    }
    out += "\n";
  }
  return out;
}

}  // namespace daylens

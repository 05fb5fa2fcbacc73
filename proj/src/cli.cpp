#include "daylens/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "daylens/error.hpp"
#include "daylens/io.hpp"

namespace daylens {

namespace {

namespace fs = std::filesystem;

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  throw InputError("unknown format '" + name + "' (expected json, table or csv)");
}

bool looks_like_trace(const fs::path& path) {
  if (path.extension() == ".csv") return true;
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  return first.rfind("timestamp,", 0) == 0;
}

std::string slot(Category cat, QuantityKind kind) {
  return std::string(to_string(cat)) + "/" + std::string(to_string(kind));
}

void run_calibrate(const fs::path& samples_path, const fs::path& out_path,
                   std::ostream& out) {
  const auto samples = load_calibration(samples_path);
  const auto result = calibrate(samples);
  save_membership(result.config, out_path);
  for (const auto& d : result.diagnostics) {
    out << slot(d.category, d.kind) << "/" << d.term << ": a=" << format_double(d.mf.a)
        << " b=" << format_double(d.mf.b) << " c=" << format_double(d.mf.c)
        << " d=" << format_double(d.mf.d) << " q2=" << format_double(d.q2) << "\n";
  }
}

void run_weights(const fs::path& votes_path, const fs::path& out_path,
                 std::ostream& out) {
  const auto file = load_votes(votes_path);
  std::vector<SurveyVote> positive, negative;
  for (const auto& record : file.votes) {
    (record.polarity == VotePolarity::positive ? positive : negative)
        .push_back({record.tag, record.percent});
  }
  auto weights = weights_from_votes(positive, VotePolarity::positive);
  for (const auto& [tag, w] : weights_from_votes(negative, VotePolarity::negative)) {
    if (!weights.emplace(tag, w).second) {
      throw InputError("tag '" + tag + "' voted under both polarities");
    }
  }

  nlohmann::ordered_json doc;
  if (!file.category.empty()) {
    nlohmann::ordered_json tags;
    for (const auto& [tag, w] : weights) tags[tag] = {{file.category, w}};
    doc["tags"] = std::move(tags);
  } else {
    doc = nlohmann::ordered_json::object();
    for (const auto& [tag, w] : weights) doc[tag] = w;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw InputError("cannot write " + out_path.string());
  os << doc.dump(2) << "\n";
  for (const auto& [tag, w] : weights) {
    out << tag << ": " << format_double(w) << "\n";
  }
}

struct AnalyzeOptions {
  fs::path input;
  fs::path catalog_path;
  fs::path membership_path;
  fs::path rules_path;
  fs::path poi_db_path;
  fs::path allocation_path;
  std::string format = "table";
  StayPointParams params{};
  bool allow_trace = true;
};

void run_analyze(const AnalyzeOptions& opt, std::ostream& out) {
  const auto format = parse_format(opt.format);
  const auto catalog = load_catalog(opt.catalog_path);
  const auto violations = validate_catalog(catalog);
  if (!violations.empty()) {
    std::string msg = "catalog invalid:";
    for (const auto& v : violations) msg += "\n  " + v.tag + ": " + v.rule;
    throw InputError(msg);
  }
  const auto config = load_membership(opt.membership_path);
  const auto rules = load_rules(opt.rules_path);

  DayLog log;
  if (looks_like_trace(opt.input)) {
    if (!opt.allow_trace) {
      throw InputError("recommend expects a day-log file; use analyze for GPS traces");
    }
    if (opt.poi_db_path.empty() || opt.allocation_path.empty()) {
      throw InputError("trace analysis needs --poi-db and --allocation");
    }
    const auto trace = load_trace_csv(opt.input);
    const auto db = load_poi_db(opt.poi_db_path);
    const auto allocation = load_allocation(opt.allocation_path);
    log = trace_to_daylog(trace, db, opt.params, allocation);
  } else {
    log = load_daylog(opt.input);
  }

  const auto bd = breakdown(log, catalog);
  const auto report = recommend(bd, config, rules);
  out << render_report(bd, report, format);
}

void run_plot_mf(const fs::path& membership_path, const std::string& category,
                 const std::string& kind, int resolution, std::ostream& out) {
  const auto config = load_membership(membership_path);
  const auto cat = parse_category(category);
  if (!cat) throw InputError("unknown category '" + category + "'");
  const auto k = parse_quantity_kind(kind);
  if (!k) throw InputError("unknown kind '" + kind + "' (expected time or score)");
  out << render_mf_csv(config.variable(*cat, *k), resolution);
}

struct ValidateOptions {
  fs::path catalog_path, membership_path, rules_path, poi_db_path;
  fs::path allocation_path, votes_path, daylog_path;
};

int run_validate(const ValidateOptions& opt, std::ostream& out) {
  int problems = 0;
  auto check = [&](const fs::path& path, const std::string& what, auto&& fn) {
    if (path.empty()) return;
    try {
      fn();
      out << what << ": ok\n";
    } catch (const InputError& e) {
      out << what << ": " << e.what() << "\n";
      ++problems;
    }
  };

  TagCatalog catalog;
  check(opt.catalog_path, "catalog", [&] {
    catalog = load_catalog(opt.catalog_path);
    const auto violations = validate_catalog(catalog);
    if (!violations.empty()) {
      std::string msg;
      for (const auto& v : violations) {
        msg += (msg.empty() ? "" : "; ") + v.tag + ": " + v.rule;
      }
      throw InputError(msg);
    }
  });

  MembershipConfig config;
  bool have_config = false;
  check(opt.membership_path, "membership", [&] {
    config = load_membership(opt.membership_path);
    have_config = true;
  });
  check(opt.rules_path, "rules", [&] {
    const auto rules = load_rules(opt.rules_path);
    if (have_config) {
      CategoryBreakdown zeros{};
      for (const auto& rule : rules.rules) {
        for (const auto& attr : rule.attributes) {
          attribute_membership(zeros, config, attr);  // throws on unknown term
        }
      }
    }
  });
  check(opt.poi_db_path, "poi-db", [&] {
    const auto db = load_poi_db(opt.poi_db_path);
    if (!db.home || !db.work) {
      throw InputError("home and work must be registered");
    }
  });
  check(opt.allocation_path, "allocation", [&] {
    const auto allocation = load_allocation(opt.allocation_path);
    double sum = 0.0;
    for (Category cat : kAllCategories) {
      if (allocation.fractions[cat] < 0.0) throw InputError("negative fraction");
      sum += allocation.fractions[cat];
      const double w = allocation.weights[cat];
      if (w < kWeightMin || w > kWeightMax) {
        throw InputError("home weight outside [-100, 100]");
      }
    }
    if (sum > 1.0 + 1e-9) throw InputError("fractions sum past 1");
  });
  check(opt.votes_path, "votes", [&] {
    const auto file = load_votes(opt.votes_path);
    double positive = 0.0, negative = 0.0;
    for (const auto& record : file.votes) {
      if (record.percent < 0.0 || record.percent > 100.0) {
        throw InputError("percent for '" + record.tag + "' outside [0, 100]");
      }
      (record.polarity == VotePolarity::positive ? positive : negative) +=
          record.percent;
    }
    // Multi-select surveys may legitimately exceed 100 in sum; flag, accept.
    if (positive > 100.0 + 1e-9 || negative > 100.0 + 1e-9) {
      out << "votes: warning: vote shares sum past 100 (multi-select survey?)\n";
    }
  });
  check(opt.daylog_path, "day-log", [&] { load_daylog(opt.daylog_path); });

  return problems == 0 ? 0 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy lifestyle analysis over a day of tagged location visits"};
  app.require_subcommand(1);

  // calibrate
  std::string calibrate_in, calibrate_out;
  auto* cmd_calibrate =
      app.add_subcommand("calibrate", "Fit membership functions from survey samples");
  cmd_calibrate->add_option("samples", calibrate_in, "calibration samples JSON")
      ->required();
  cmd_calibrate->add_option("-o,--out", calibrate_out, "membership config output path")
      ->required();

  // weights
  std::string weights_in, weights_out;
  auto* cmd_weights =
      app.add_subcommand("weights", "Derive tag weights from survey votes");
  cmd_weights->add_option("votes", weights_in, "survey votes JSON")->required();
  cmd_weights->add_option("-o,--out", weights_out, "catalog fragment output path")
      ->required();

  // validate
  ValidateOptions validate_opt;
  auto* cmd_validate = app.add_subcommand("validate", "Check input files");
  cmd_validate->add_option("--catalog", validate_opt.catalog_path, "tag catalog");
  cmd_validate->add_option("--membership", validate_opt.membership_path,
                           "membership config");
  cmd_validate->add_option("--rules", validate_opt.rules_path, "rule base");
  cmd_validate->add_option("--poi-db", validate_opt.poi_db_path, "POI database");
  cmd_validate->add_option("--allocation", validate_opt.allocation_path,
                           "home allocation");
  cmd_validate->add_option("--votes", validate_opt.votes_path, "survey votes");
  cmd_validate->add_option("--day-log", validate_opt.daylog_path, "day log");

  // analyze / recommend share options
  AnalyzeOptions analyze_opt, recommend_opt;
  recommend_opt.allow_trace = false;
  auto add_analysis_options = [](CLI::App* cmd, AnalyzeOptions& opt, bool trace) {
    cmd->add_option("input", opt.input,
                    trace ? "day-log JSON or GPS trace CSV" : "day-log JSON")
        ->required();
    cmd->add_option("--catalog", opt.catalog_path, "tag catalog")->required();
    cmd->add_option("--membership", opt.membership_path, "membership config")
        ->required();
    cmd->add_option("--rules", opt.rules_path, "rule base")->required();
    cmd->add_option("--format", opt.format, "json, table or csv");
    if (trace) {
      cmd->add_option("--poi-db", opt.poi_db_path, "POI database (trace mode)");
      cmd->add_option("--allocation", opt.allocation_path,
                      "home allocation (trace mode)");
      cmd->add_option("--day-boundary", opt.params.day_boundary_hour,
                      "analysis day boundary hour");
      cmd->add_option("--dwell-min", opt.params.min_dwell_min,
                      "minimum dwell minutes for a stay point");
      cmd->add_option("--dist-m", opt.params.distance_threshold_m,
                      "stay-point distance threshold (m)");
      cmd->add_option("--poi-radius-m", opt.params.poi_radius_m,
                      "POI lookup radius (m)");
    }
  };
  auto* cmd_analyze =
      app.add_subcommand("analyze", "Aggregate a day and score recommendations");
  add_analysis_options(cmd_analyze, analyze_opt, true);
  auto* cmd_recommend =
      app.add_subcommand("recommend", "Score recommendations for a day log");
  add_analysis_options(cmd_recommend, recommend_opt, false);

  // plot-mf
  std::string plot_membership, plot_category, plot_kind;
  int plot_resolution = 101;
  auto* cmd_plot = app.add_subcommand("plot-mf", "Emit membership curves as CSV");
  cmd_plot->add_option("--membership", plot_membership, "membership config")
      ->required();
  cmd_plot->add_option("--category", plot_category, "category")->required();
  cmd_plot->add_option("--kind", plot_kind, "time or score")->required();
  cmd_plot->add_option("--resolution", plot_resolution, "sample count (>= 2)");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;  // bad usage is an input error
    }
    if (app.got_subcommand(cmd_calibrate)) {
      run_calibrate(calibrate_in, calibrate_out, out);
    } else if (app.got_subcommand(cmd_weights)) {
      run_weights(weights_in, weights_out, out);
    } else if (app.got_subcommand(cmd_validate)) {
      return run_validate(validate_opt, out);
    } else if (app.got_subcommand(cmd_analyze)) {
      run_analyze(analyze_opt, out);
    } else if (app.got_subcommand(cmd_recommend)) {
      run_analyze(recommend_opt, out);
    } else if (app.got_subcommand(cmd_plot)) {
      run_plot_mf(plot_membership, plot_category, plot_kind, plot_resolution, out);
    }
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace daylens

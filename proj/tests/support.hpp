#pragma once

// Shared test fixtures and helpers.

#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "daylens/catalog.hpp"
#include "daylens/daylog.hpp"
#include "daylens/membership.hpp"

namespace daylens::test {

// Catalog matching data/sample-day/catalog.json's worked-example tags.
inline TagCatalog sample_catalog() {
  TagCatalog catalog;
  catalog.entries = {
      {"university", {{Category::work, 50}}},
      {"library", {{Category::work, 20}}},
      {"cafe", {{Category::social, 20}}},
      {"supermarket", {{Category::other, 9}}},
      {"grocery", {{Category::other, 10}}},
      {"travel", {{Category::other, 15}}},
      {"gym", {{Category::health, 50}}},
      {"hospital", {{Category::health, -20}}},
      {"amusement_park", {{Category::social, 30}, {Category::leisure, 40}}},
  };
  catalog.default_other_weight = 10.0;
  return catalog;
}

// The worked-example day: six tagged visits plus the home split.
inline DayLog sample_daylog() {
  DayLog log;
  log.visits = {{"university", 6.0, {}}, {"library", 4.0, {}}, {"cafe", 1.0, {}},
                {"supermarket", 1.0, {}}, {"grocery", 0.5, {}}, {"travel", 1.0, {}}};
  log.home.total_hours = 10.5;
  log.home.allocations[Category::work] = 2.0;
  log.home.allocations[Category::social] = 0.5;
  log.home.allocations[Category::health] = 0.5;
  log.home.allocations[Category::leisure] = 6.5;
  log.home.allocations[Category::other] = 1.0;
  log.home.weights[Category::work] = 30.0;
  log.home.weights[Category::social] = 30.0;
  log.home.weights[Category::health] = 20.0;
  log.home.weights[Category::leisure] = 30.0;
  log.home.weights[Category::other] = 10.0;
  return log;
}

// Membership config matching data/sample-day/membership.json.
inline MembershipConfig sample_config() {
  using P = std::pair<std::string, TrapezoidMF>;
  auto var = [](Category cat, QuantityKind kind, std::vector<P> terms) {
    return make_variable(cat, kind, terms);
  };
  std::vector<LinguisticVariable> vars;
  vars.push_back(var(Category::social, QuantityKind::time,
                     {P{"reserved", {0, 0, 2, 3}}, P{"sociable", {2, 3, 5, 6}},
                      P{"over_social", {5, 6, 12, 24}}}));
  vars.push_back(var(Category::leisure, QuantityKind::time,
                     {P{"hectic", {0, 0, 7, 9}}, P{"ideal", {7, 9, 10, 12}},
                      P{"lazy", {10, 12, 24, 24}}}));
  vars.push_back(var(Category::health, QuantityKind::time,
                     {P{"unfit", {0, 0, 1, 2}}, P{"fit", {0.45, 2, 3, 4.25}},
                      P{"proactive", {3, 4.25, 12, 24}}}));
  vars.push_back(var(Category::work, QuantityKind::time,
                     {P{"lethargic", {0, 0, 2, 4}}, P{"hard_working", {3, 5, 8, 10}},
                      P{"industrious", {9, 11, 16, 24}}}));
  vars.push_back(var(Category::other, QuantityKind::time,
                     {P{"non_productive", {0, 0, 2, 4}}, P{"productive", {2, 4, 12, 24}}}));
  vars.push_back(var(Category::social, QuantityKind::score,
                     {P{"low_score", {-100, -50, 5, 105}},
                      P{"ideal_score", {80, 120, 200, 260}},
                      P{"high_score", {200, 260, 500, 700}}}));
  vars.push_back(var(Category::leisure, QuantityKind::score,
                     {P{"low_score", {-100, -20, 175, 275}},
                      P{"ideal_score", {150, 250, 350, 450}},
                      P{"high_score", {250, 350, 600, 800}}}));
  vars.push_back(var(Category::health, QuantityKind::score,
                     {P{"low_score", {-50, -20, 3, 38}},
                      P{"ideal_score", {11.25, 29.75, 42, 50}},
                      P{"high_score", {42, 50, 100, 150}}}));
  vars.push_back(var(Category::work, QuantityKind::score,
                     {P{"low_score", {-100, -50, 50, 150}},
                      P{"ideal_score", {100, 200, 300, 400}},
                      P{"high_score", {300, 400, 1000, 1200}}}));
  vars.push_back(var(Category::other, QuantityKind::score,
                     {P{"low_score", {-100, -50, 10, 30}},
                      P{"ideal_score", {20, 40, 60, 80}},
                      P{"high_score", {60, 80, 200, 300}}}));
  return make_config(std::move(vars));
}

// Random inputs for property suites.
inline double urand(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline TagCatalog random_catalog(std::mt19937& rng) {
  TagCatalog catalog;
  catalog.default_other_weight = urand(rng, -100, 100);
  const int tags = std::uniform_int_distribution<int>(1, 8)(rng);
  for (int t = 0; t < tags; ++t) {
    std::map<Category, double> entry;
    const int cats = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int c = 0; c < cats; ++c) {
      const auto cat = kAllCategories[std::uniform_int_distribution<std::size_t>(
          0, kCategoryCount - 1)(rng)];
      entry[cat] = urand(rng, -100, 100);
    }
    if (entry.size() >= 2) entry.begin()->second = urand(rng, 1, 100);
    catalog.entries["t" + std::to_string(t)] = std::move(entry);
  }
  return catalog;
}

inline DayLog random_daylog(std::mt19937& rng, const TagCatalog& catalog) {
  DayLog log;
  std::vector<Tag> tags;
  for (const auto& [tag, entry] : catalog.entries) tags.push_back(tag);
  tags.push_back("never_seen");  // exercises the complement category
  const int visits = std::uniform_int_distribution<int>(0, 8)(rng);
  for (int v = 0; v < visits; ++v) {
    const auto& tag =
        tags[std::uniform_int_distribution<std::size_t>(0, tags.size() - 1)(rng)];
    log.visits.push_back({tag, urand(rng, 0, 6), {}});
  }
  log.home.total_hours = urand(rng, 0, 12);
  double left = log.home.total_hours;
  for (Category cat : kAllCategories) {
    const double a = urand(rng, 0, left);
    log.home.allocations[cat] = a;
    left -= a;
    log.home.weights[cat] = urand(rng, -100, 100);
  }
  return log;
}

// Runs a shell command, capturing combined stdout+stderr and the exit code.
struct ProcResult {
  int code = -1;
  std::string output;
};

inline ProcResult run_process(const std::string& command) {
  ProcResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace daylens::test

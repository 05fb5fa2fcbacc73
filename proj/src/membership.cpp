#include "daylens/membership.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "daylens/error.hpp"

namespace daylens {

void validate_mf(const TrapezoidMF& mf) {
  if (!std::isfinite(mf.a) || !std::isfinite(mf.b) || !std::isfinite(mf.c) ||
      !std::isfinite(mf.d) || !(mf.a <= mf.b && mf.b <= mf.c && mf.c <= mf.d)) {
    std::ostringstream os;
    os << "trapezoid (" << mf.a << ", " << mf.b << ", " << mf.c << ", " << mf.d
       << ") violates a <= b <= c <= d";
    throw InputError(os.str());
  }
}

double mf_eval(const TrapezoidMF& mf, double x) {
  if (x < mf.a || x > mf.d) return 0.0;
  if (x >= mf.b && x <= mf.c) return 1.0;  // plateau; covers degenerate edges
  if (x < mf.b) return (x - mf.a) / (mf.b - mf.a);
  return (mf.d - x) / (mf.d - mf.c);
}

double quantile(std::span<const double> samples, double p) {
  if (samples.empty()) throw InputError("quantile of empty sample list");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = sorted.size();
  p = std::clamp(p, 0.0, 1.0);
  const double rank = static_cast<double>(n + 1) * p;
  if (rank <= 1.0) return sorted.front();
  if (rank >= static_cast<double>(n)) return sorted.back();
  const auto lower = static_cast<std::size_t>(rank);  // 1-based order statistic
  const double frac = rank - static_cast<double>(lower);
  return sorted[lower - 1] + frac * (sorted[lower] - sorted[lower - 1]);
}

TrapezoidMF mf_from_samples(std::span<const double> samples) {
  if (samples.empty()) throw InputError("cannot fit a membership function to no samples");
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  TrapezoidMF mf{*lo, quantile(samples, 0.25), quantile(samples, 0.75), *hi};
  validate_mf(mf);
  return mf;
}

namespace {

using TermList = std::array<std::string_view, 3>;

constexpr TermList kHealthTime = {"unfit", "fit", "proactive"};
constexpr TermList kLeisureTime = {"hectic", "ideal", "lazy"};
constexpr TermList kSocialTime = {"reserved", "sociable", "over_social"};
constexpr TermList kWorkTime = {"lethargic", "hard_working", "industrious"};
constexpr std::array<std::string_view, 2> kOtherTime = {"non_productive", "productive"};
constexpr TermList kScoreTerms = {"low_score", "ideal_score", "high_score"};

std::string slot_name(Category category, QuantityKind kind) {
  return std::string(to_string(category)) + "/" + std::string(to_string(kind));
}

}  // namespace

std::span<const std::string_view> term_names(Category category, QuantityKind kind) {
  if (kind == QuantityKind::score) return kScoreTerms;
  switch (category) {
    case Category::health:  return kHealthTime;
    case Category::leisure: return kLeisureTime;
    case Category::social:  return kSocialTime;
    case Category::work:    return kWorkTime;
    case Category::other:   return kOtherTime;
  }
  return kScoreTerms;
}

std::string canonical_term(std::string_view term) {
  if (term == "less_score") return "low_score";
  return std::string(term);
}

const TrapezoidMF* LinguisticVariable::find(std::string_view term) const {
  for (const auto& [name, mf] : terms) {
    if (name == term) return &mf;
  }
  return nullptr;
}

LinguisticVariable make_variable(
    Category category, QuantityKind kind,
    std::span<const std::pair<std::string, TrapezoidMF>> terms) {
  const auto expected = term_names(category, kind);
  LinguisticVariable var{category, kind, {}};
  var.terms.reserve(expected.size());
  for (std::string_view name : expected) {
    const std::pair<std::string, TrapezoidMF>* found = nullptr;
    for (const auto& t : terms) {
      if (canonical_term(t.first) == name) {
        if (found) {
          throw InputError(slot_name(category, kind) + ": duplicate term '" +
                           std::string(name) + "'");
        }
        found = &t;
      }
    }
    if (!found) {
      throw InputError(slot_name(category, kind) + ": missing term '" +
                       std::string(name) + "'");
    }
    validate_mf(found->second);
    var.terms.emplace_back(std::string(name), found->second);
  }
  if (terms.size() != expected.size()) {
    for (const auto& t : terms) {
      const std::string name = canonical_term(t.first);
      if (std::find(expected.begin(), expected.end(), name) == expected.end()) {
        throw InputError(slot_name(category, kind) + ": unknown term '" + t.first + "'");
      }
    }
  }
  return var;
}

std::vector<std::pair<std::string, double>> variable_eval(
    const LinguisticVariable& var, double x) {
  std::vector<std::pair<std::string, double>> degrees;
  degrees.reserve(var.terms.size());
  for (const auto& [name, mf] : var.terms) {
    degrees.emplace_back(name, mf_eval(mf, x));
  }
  return degrees;
}

namespace {

std::size_t slot_index(Category category, QuantityKind kind) {
  return static_cast<std::size_t>(category) * 2 +
         (kind == QuantityKind::score ? 1 : 0);
}

}  // namespace

const LinguisticVariable& MembershipConfig::variable(Category category,
                                                     QuantityKind kind) const {
  return slots[slot_index(category, kind)];
}

MembershipConfig make_config(std::vector<LinguisticVariable> variables) {
  MembershipConfig config;
  std::array<bool, kCategoryCount * 2> filled{};
  for (auto& var : variables) {
    const auto idx = slot_index(var.category, var.kind);
    if (filled[idx]) {
      throw InputError("duplicate variable for " + slot_name(var.category, var.kind));
    }
    filled[idx] = true;
    config.slots[idx] = std::move(var);
  }
  for (Category cat : kAllCategories) {
    for (QuantityKind kind : {QuantityKind::time, QuantityKind::score}) {
      if (!filled[slot_index(cat, kind)]) {
        throw InputError("missing variable for " + slot_name(cat, kind));
      }
    }
  }
  return config;
}

CalibrationResult calibrate(std::span<const TermSamples> samples) {
  // Index the sample sets; reject duplicates up front.
  std::map<std::pair<std::size_t, std::string>, const TermSamples*> by_slot;
  for (const auto& s : samples) {
    const auto key = std::make_pair(slot_index(s.category, s.kind),
                                    canonical_term(s.term));
    if (!by_slot.emplace(key, &s).second) {
      throw InputError("duplicate sample set for " + slot_name(s.category, s.kind) +
                       "/" + key.second);
    }
  }

  std::string gaps;
  CalibrationResult result;
  std::vector<LinguisticVariable> variables;
  for (Category cat : kAllCategories) {
    for (QuantityKind kind : {QuantityKind::time, QuantityKind::score}) {
      std::vector<std::pair<std::string, TrapezoidMF>> terms;
      for (std::string_view term : term_names(cat, kind)) {
        auto it = by_slot.find({slot_index(cat, kind), std::string(term)});
        if (it == by_slot.end() || it->second->values.empty()) {
          gaps += (gaps.empty() ? "" : ", ") + slot_name(cat, kind) + "/" +
                  std::string(term);
          continue;
        }
        const auto mf = mf_from_samples(it->second->values);
        terms.emplace_back(std::string(term), mf);
        result.diagnostics.push_back({cat, kind, std::string(term), mf,
                                      quantile(it->second->values, 0.5)});
      }
      if (gaps.empty()) variables.push_back(make_variable(cat, kind, terms));
    }
  }
  if (!gaps.empty()) {
    throw InputError("calibration samples missing for: " + gaps);
  }
  for (const auto& [key, s] : by_slot) {
    const auto expected = term_names(s->category, s->kind);
    if (std::find(expected.begin(), expected.end(), key.second) == expected.end()) {
      throw InputError("calibration sample set for unknown term " +
                       slot_name(s->category, s->kind) + "/" + s->term);
    }
  }
  result.config = make_config(std::move(variables));
  return result;
}

}  // namespace daylens

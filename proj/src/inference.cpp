#include "daylens/inference.hpp"

#include <algorithm>
#include <set>

#include "daylens/error.hpp"

namespace daylens {

void validate_rules(const RuleBase& rules) {
  if (rules.rules.empty()) throw InputError("rule base is empty");
  std::set<std::string> ids;
  for (const auto& rule : rules.rules) {
    if (rule.id.empty()) throw InputError("rule with empty id");
    if (!ids.insert(rule.id).second) {
      throw InputError("duplicate rule id '" + rule.id + "'");
    }
    if (rule.attributes.empty()) {
      throw InputError("rule '" + rule.id + "' has no attributes");
    }
  }
}

double attribute_membership(const CategoryBreakdown& bd,
                            const MembershipConfig& cfg, const Attribute& attr) {
  const auto& var = cfg.variable(attr.category, attr.kind);
  const TrapezoidMF* mf = var.find(canonical_term(attr.term));
  if (!mf) {
    throw InputError("no term '" + attr.term + "' in " +
                     std::string(to_string(attr.category)) + "/" +
                     std::string(to_string(attr.kind)));
  }
  const double crisp = attr.kind == QuantityKind::time
                           ? bd.time_total[attr.category]
                           : bd.score_total[attr.category];
  return mf_eval(*mf, crisp);
}

double rule_score(std::span<const double> degrees) {
  if (degrees.empty()) throw InputError("rule score of an attribute-less rule");
  double sum = 0.0;
  for (double mu : degrees) sum += mu;
  return sum / static_cast<double>(degrees.size());
}

RecommendationReport recommend(const CategoryBreakdown& bd,
                               const MembershipConfig& cfg, const RuleBase& rules) {
  validate_rules(rules);

  RecommendationReport report;
  report.rules.reserve(rules.rules.size());
  for (const auto& rule : rules.rules) {
    RuleResult row{rule.id, rule.text, {}, 0.0};
    row.degrees.reserve(rule.attributes.size());
    for (const auto& attr : rule.attributes) {
      row.degrees.push_back(attribute_membership(bd, cfg, attr));
    }
    row.score = rule_score(row.degrees);
    report.rules.push_back(std::move(row));
  }
  // Argmax with first-listed tie-break, determined before reordering.
  std::size_t best = 0;
  for (std::size_t i = 1; i < report.rules.size(); ++i) {
    if (report.rules[i].score > report.rules[best].score) best = i;
  }
  report.chosen_id = report.rules[best].id;
  report.chosen_text = report.rules[best].text;
  report.all_zero = report.rules[best].score == 0.0;
  std::stable_sort(report.rules.begin(), report.rules.end(),
                   [](const RuleResult& x, const RuleResult& y) {
                     return x.score > y.score;
                   });
  return report;
}

}  // namespace daylens

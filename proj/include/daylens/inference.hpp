#pragma once

#include <span>
#include <string>
#include <vector>

#include "daylens/daylog.hpp"
#include "daylens/membership.hpp"

namespace daylens {

// One condition of a recommendation: a linguistic term over a (category,
// kind) axis.
struct Attribute {
  Category category = Category::social;
  QuantityKind kind = QuantityKind::time;
  std::string term;

  bool operator==(const Attribute&) const = default;
};

struct Recommendation {
  std::string id;
  std::string text;
  std::vector<Attribute> attributes;  // non-empty
};

struct RuleBase {
  std::vector<Recommendation> rules;  // non-empty, ids unique
};

// Throws InputError on empty rule base, duplicate ids or attribute-less
// rules.
void validate_rules(const RuleBase& rules);

struct RuleResult {
  std::string id;
  std::string text;
  std::vector<double> degrees;  // mu_j, attribute order
  double score = 0.0;           // rho
};

// Every rule with its degree vector, sorted by score descending (ties keep
// rule-base order); `chosen` is the argmax, first listed on ties.
struct RecommendationReport {
  std::vector<RuleResult> rules;
  std::string chosen_id;
  std::string chosen_text;
  bool all_zero = false;  // winning score is 0; callers should warn
};

// Looks up the attribute's crisp value in the breakdown (K for time, M for
// score) and evaluates the named term's membership function. Throws
// InputError naming the (category, kind, term) when the term is unknown.
double attribute_membership(const CategoryBreakdown& bd,
                            const MembershipConfig& cfg, const Attribute& attr);

// Equal-weight rule score: the arithmetic mean of the attribute degrees.
// Throws InputError on an empty degree list.
double rule_score(std::span<const double> degrees);

// Scores every rule and selects the most probable recommendation.
RecommendationReport recommend(const CategoryBreakdown& bd,
                               const MembershipConfig& cfg,
                               const RuleBase& rules);

}  // namespace daylens

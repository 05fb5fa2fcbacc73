#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "daylens/catalog.hpp"

namespace daylens {

// A survey option's vote share: the fraction of respondents who ranked the
// place as their strongest (non-)fulfilment of the category's purpose.
struct SurveyVote {
  Tag option;
  double percent = 0.0;  // [0, 100]

  bool operator==(const SurveyVote&) const = default;
};

enum class VotePolarity : bool { positive, negative };

// percent -> weight: identity for positive votes, negated for negative
// ones. Throws InputError on percents outside [0, 100].
std::map<Tag, double> weights_from_votes(std::span<const SurveyVote> votes,
                                         VotePolarity polarity);

// One respondent's score: sum of hours * weight over their rows.
double score_sample(std::span<const std::pair<double, double>> rows);

}  // namespace daylens

#include "daylens/survey.hpp"

#include <cmath>

#include "daylens/error.hpp"

namespace daylens {

std::map<Tag, double> weights_from_votes(std::span<const SurveyVote> votes,
                                         VotePolarity polarity) {
  std::map<Tag, double> weights;
  for (const auto& vote : votes) {
    if (!std::isfinite(vote.percent) || vote.percent < 0.0 || vote.percent > 100.0) {
      throw InputError("vote percent for '" + vote.option + "' outside [0, 100]");
    }
    const double w = polarity == VotePolarity::positive ? vote.percent : -vote.percent;
    if (!weights.emplace(vote.option, w).second) {
      throw InputError("duplicate vote entry for '" + vote.option + "'");
    }
  }
  return weights;
}

double score_sample(std::span<const std::pair<double, double>> rows) {
  double score = 0.0;
  for (const auto& [hours, weight] : rows) {
    if (!std::isfinite(hours) || hours < 0.0) {
      throw InputError("score sample with negative time");
    }
    score += hours * weight;
  }
  return score;
}

}  // namespace daylens

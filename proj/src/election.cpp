#include "editvote/election.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace editvote {

std::vector<std::vector<CandidateId>> ranking_groups(
    const std::vector<ScoreReport>& reports) {
  std::vector<CandidateId> ids(reports.size());
  for (size_t i = 0; i < reports.size(); ++i) ids[i] = static_cast<int>(i) + 1;
  std::stable_sort(ids.begin(), ids.end(), [&](CandidateId a, CandidateId b) {
    const auto& sa = reports[a - 1].score;
    const auto& sb = reports[b - 1].score;
    if (sa.has_value() != sb.has_value()) return sa.has_value();
    if (sa.has_value() && *sa != *sb) return *sa < *sb;
    return a < b;
  });
  std::vector<std::vector<CandidateId>> groups;
  for (const CandidateId id : ids) {
    const auto& score = reports[id - 1].score;
    const bool fresh =
        groups.empty() || reports[groups.back().front() - 1].score != score;
    if (fresh) groups.emplace_back();
    groups.back().push_back(id);
  }
  return groups;
}

ElectionResult score_all(const Profile& profile, Rule rule, Mode mode,
                         TieConvention tc, Engine engine,
                         const OracleBudget& budget) {
  ElectionResult result;
  result.rule = rule;
  result.mode = mode;
  result.convention = tc;
  for (CandidateId c = 1; c <= profile.num_candidates(); ++c) {
    if (mode == Mode::greedy) {
      result.reports.push_back(greedy_score(profile, c, rule, tc, engine));
    } else {
      const ExactScore exact = rule == Rule::dodgson
                                   ? exact_dodgson(profile, c, tc, budget)
                                   : exact_young(profile, c, tc, budget);
      ScoreReport report;
      report.candidate = c;
      report.score = exact.score;
      report.witness = exact.witness;
      report.rule = rule;
      report.convention = tc;
      report.engine = engine;
      result.reports.push_back(std::move(report));
    }
  }
  result.ranking = ranking_groups(result.reports);
  result.winner_set = result.ranking.empty() ? std::vector<CandidateId>{}
                                             : result.ranking.front();
  return result;
}

ComparisonRecord compare_results(const ElectionResult& approx,
                                 const ElectionResult& exact) {
  if (approx.reports.size() != exact.reports.size()) {
    throw std::invalid_argument("results cover different candidate counts");
  }
  ComparisonRecord record;
  record.winner_sets_equal = approx.winner_set == exact.winner_set;
  record.rankings_equal = approx.ranking == exact.ranking;
  record.max_ratio = 0.0;
  for (size_t i = 0; i < approx.reports.size(); ++i) {
    const auto& ga = approx.reports[i].score;
    const auto& ea = exact.reports[i].score;
    double ratio;
    if (!ga.has_value() && !ea.has_value()) {
      ratio = 1.0;
    } else if (!ga.has_value() || !ea.has_value()) {
      ratio = std::numeric_limits<double>::infinity();
    } else if (*ea == 0) {
      ratio = *ga == 0 ? 1.0 : std::numeric_limits<double>::infinity();
    } else {
      ratio = static_cast<double>(*ga) / static_cast<double>(*ea);
    }
    record.ratios.push_back(ratio);
    record.max_ratio = std::max(record.max_ratio, ratio);
  }
  if (record.ratios.empty()) record.max_ratio = 1.0;
  return record;
}

}  // namespace editvote

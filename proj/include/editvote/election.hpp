#pragma once

#include <vector>

#include "editvote/exact.hpp"
#include "editvote/greedy.hpp"
#include "editvote/profile.hpp"
#include "editvote/types.hpp"

namespace editvote {

// Scores for every candidate under one rule/mode, with the final ranking.
// Candidates are ranked by ascending score; equal scores form one group and
// unscorable candidates form the last group. The winner set is the first
// group.
struct ElectionResult {
  Rule rule = Rule::dodgson;
  Mode mode = Mode::greedy;
  TieConvention convention = TieConvention::strict;
  std::vector<ScoreReport> reports;               // index = candidate - 1
  std::vector<std::vector<CandidateId>> ranking;  // ascending score groups
  std::vector<CandidateId> winner_set;
};

// Groups candidate ids 1..scores.size() by ascending score, unscorable last.
std::vector<std::vector<CandidateId>> ranking_groups(
    const std::vector<ScoreReport>& reports);

ElectionResult score_all(const Profile& profile, Rule rule, Mode mode,
                         TieConvention tc, Engine engine = Engine::queue,
                         const OracleBudget& budget = {});

// Greedy-versus-exact agreement record. Ratios are per candidate in id
// order; a pair of unscorable candidates counts as equal (ratio 1) and a
// scorability mismatch is reported as infinity.
struct ComparisonRecord {
  bool winner_sets_equal = false;
  bool rankings_equal = false;
  std::vector<double> ratios;
  double max_ratio = 1.0;
};

ComparisonRecord compare_results(const ElectionResult& approx,
                                 const ElectionResult& exact);

}  // namespace editvote

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "editvote/edits.hpp"
#include "editvote/profile.hpp"
#include "editvote/types.hpp"

namespace editvote {

enum class MoveKind { raise, deletion };

// One candidate move for the greedy loop. A raise move lifts the scored
// candidate past the target_count candidates immediately above it in one
// voter's current ranking (cost = target_count swaps); a deletion move
// removes one voter (cost 1). `reductions` counts the opponents affected by
// the move that currently hold a positive deficit.
struct Move {
  VoterId voter = 0;
  MoveKind kind = MoveKind::raise;
  int target_count = 0;  // raises only, k >= 1
  int cost = 0;
  int reductions = 0;

  bool operator==(const Move& other) const = default;
};

// Edits per deficit reduction, compared exactly by cross multiplication.
// Infinite when the move yields no reductions.
struct MarginalCost {
  int numerator = 0;    // edits
  int denominator = 0;  // deficit reductions

  bool infinite() const { return denominator == 0; }

  friend bool operator==(const MarginalCost& a, const MarginalCost& b) {
    if (a.infinite() || b.infinite()) return a.infinite() == b.infinite();
    return static_cast<long long>(a.numerator) * b.denominator ==
           static_cast<long long>(b.numerator) * a.denominator;
  }
  friend bool operator<(const MarginalCost& a, const MarginalCost& b) {
    if (a.infinite()) return false;
    if (b.infinite()) return true;
    return static_cast<long long>(a.numerator) * b.denominator <
           static_cast<long long>(b.numerator) * a.denominator;
  }
};

MarginalCost marginal_cost(const Move& move);

struct MoveLogEntry {
  Move move;
  MarginalCost cost;
  int total_deficit_after = 0;

  bool operator==(const MoveLogEntry& other) const = default;
};

// Result of one scoring run. An absent score means UNSCORABLE: no move of the
// allowed kind could close the remaining deficit (possible only for Young
// under the strict convention). For finite scores the witness is a Condorcet
// sequence of exactly `score` edits.
struct ScoreReport {
  CandidateId candidate = 0;
  std::optional<int> score;
  EditSequence witness;
  std::vector<MoveLogEntry> move_log;
  Rule rule = Rule::dodgson;
  TieConvention convention = TieConvention::strict;
  Engine engine = Engine::queue;

  bool scorable() const { return score.has_value(); }
};

// Canonical text record: score, witness lines, and the move log. The engine
// tag is deliberately excluded so reports from both engines compare equal.
std::string score_report_text(const ScoreReport& report);

// All single-voter raise moves: for each live voter and each k up to the
// number of candidates above c in that voter's current ranking, one move of
// cost k. Ordered by (voter, k).
std::vector<Move> enumerate_dodgson_moves(const Profile& profile, CandidateId c,
                                          TieConvention tc);

// One deletion move per live voter, ordered by voter.
std::vector<Move> enumerate_young_moves(const Profile& profile, CandidateId c,
                                        TieConvention tc);

// Runs the marginal-cost greedy loop for one candidate. Both engines produce
// identical reports; `naive` rescans every move each round while `queue`
// maintains an indexed priority queue incrementally.
ScoreReport greedy_score(const Profile& profile, CandidateId c, Rule rule,
                         TieConvention tc, Engine engine = Engine::queue);

}  // namespace editvote

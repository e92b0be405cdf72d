#pragma once

#include <optional>
#include <vector>

#include "editvote/types.hpp"

namespace editvote {

// A strict total order over candidates 1..m, most preferred first.
class Ranking {
 public:
  // Validates that `order` is a permutation of 1..order.size().
  explicit Ranking(std::vector<CandidateId> order);

  int num_candidates() const { return static_cast<int>(order_.size()); }
  const std::vector<CandidateId>& order() const { return order_; }

  // Position 0 is the most preferred candidate.
  CandidateId at_position(int pos) const { return order_[pos]; }
  int position(CandidateId c) const;

  // Number of candidates ranked below c.
  int below_count(CandidateId c) const {
    return num_candidates() - 1 - position(c);
  }

  bool ranks_above(CandidateId d, CandidateId c) const {
    return position(d) < position(c);
  }

  // Candidates ranked above c, nearest first.
  std::vector<CandidateId> candidates_above(CandidateId c) const;

  // Exchanges the adjacent pair whose below counts are j and j-1, raising the
  // lower one. Requires 0 < j < m.
  void swap_boundary(int j);

  bool operator==(const Ranking& other) const { return order_ == other.order_; }

 private:
  std::vector<CandidateId> order_;
  std::vector<int> position_;  // candidate id -> position; slot 0 unused
};

// Pairwise preference counts over the live voters: count(d, c) is the number
// of live voters ranking d above c.
class TallyMatrix {
 public:
  TallyMatrix() = default;
  explicit TallyMatrix(int num_candidates);

  int num_candidates() const { return m_; }
  int count(CandidateId above, CandidateId below) const {
    return counts_[above * (m_ + 1) + below];
  }
  int margin(CandidateId d, CandidateId c) const {
    return count(d, c) - count(c, d);
  }
  void add(CandidateId above, CandidateId below, int delta) {
    counts_[above * (m_ + 1) + below] += delta;
  }

  bool operator==(const TallyMatrix& other) const = default;

 private:
  int m_ = 0;
  std::vector<int> counts_;  // (m+1)^2 grid, row/col 0 unused
};

// A preference profile: one ranking per voter, a live/deleted flag per voter,
// and a pairwise tally kept in step with every mutation. Deleted voters keep
// their ids so edit sequences stay replayable.
class Profile {
 public:
  int num_candidates() const { return m_; }
  int num_voters_original() const { return static_cast<int>(rankings_.size()); }
  int num_voters_live() const { return n_live_; }

  bool is_live(VoterId v) const;
  const Ranking& ranking(VoterId v) const;  // throws for deleted voters
  std::vector<VoterId> live_voters() const;

  const TallyMatrix& tally() const { return tally_; }

  // Swap with the boundary semantics of Ranking::swap_boundary; updates two
  // tally cells. Throws if the voter is deleted or j is out of range.
  void apply_swap(VoterId v, int boundary_j);

  // Removes the voter's ballot from the tally and marks it deleted.
  void apply_deletion(VoterId v);

  // Profiles compare equal when they have the same candidate count, the same
  // original voter count, and identical live ballots.
  bool operator==(const Profile& other) const;

 private:
  friend Profile build_profile(const std::vector<std::vector<CandidateId>>& rows,
                               int m);

  int m_ = 0;
  int n_live_ = 0;
  std::vector<Ranking> rankings_;  // index = voter id - 1, retained after deletion
  std::vector<char> live_;
  TallyMatrix tally_;
};

// Validates every row as a permutation of 1..m and assigns voter ids 1..n in
// input order. Throws std::invalid_argument naming the offending ranking.
Profile build_profile(const std::vector<std::vector<CandidateId>>& rows, int m);

// Recomputes the pairwise tally from scratch over the live voters. The
// incremental tally carried by Profile must always agree with this.
TallyMatrix pairwise_tally(const Profile& profile);

// c's vote deficit against d: how far c trails d in their pairwise race,
// clamped at zero. Strict adds one so a tied race still counts against c.
int deficit(const TallyMatrix& tally, CandidateId c, CandidateId d,
            TieConvention tc);

// Sum of c's deficits against all rivals (the Tideman score). Zero exactly
// when c is a Condorcet winner under the chosen convention.
int total_deficit(const TallyMatrix& tally, CandidateId c, TieConvention tc);

struct CondorcetOutcome {
  std::optional<CandidateId> winner;       // set only when unique
  std::vector<CandidateId> zero_deficit;   // all candidates with total deficit 0
  bool tied() const { return zero_deficit.size() > 1; }
};

CondorcetOutcome condorcet_outcome(const Profile& profile, TieConvention tc);
std::optional<CandidateId> condorcet_winner(const Profile& profile,
                                            TieConvention tc);

}  // namespace editvote

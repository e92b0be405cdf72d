#include "editvote/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace editvote {

namespace {

void check_candidate(const Profile& profile, CandidateId c) {
  if (c < 1 || c > profile.num_candidates()) {
    throw std::invalid_argument("candidate " + std::to_string(c) +
                                " out of range 1.." +
                                std::to_string(profile.num_candidates()));
  }
}

// Passes of an opponent needed to satisfy the convention: each pass moves the
// pairwise margin by two against the opponent.
int passes_needed(int margin, TieConvention tc) {
  const int bump = tc == TieConvention::strict ? 1 : 0;
  return std::max(0, (margin + bump + 1) / 2);
}

// Branch-and-bound over how far c is raised in each voter's ranking. rem[d]
// holds the outstanding passes of opponent d; suffix availability prunes
// branches that can no longer deliver them, and the pass total is an
// admissible cost bound.
class DodgsonSearch {
 public:
  DodgsonSearch(const Profile& profile, CandidateId c, TieConvention tc,
                const OracleBudget& budget)
      : m_(profile.num_candidates()), c_(c), budget_(budget) {
    rem_.assign(m_ + 1, 0);
    for (CandidateId d = 1; d <= m_; ++d) {
      if (d != c) rem_[d] = passes_needed(profile.tally().margin(d, c), tc);
    }
    need_total_ = std::accumulate(rem_.begin(), rem_.end(), 0);

    for (const VoterId v : profile.live_voters()) {
      voters_.push_back(v);
      above_.push_back(profile.ranking(v).candidates_above(c));
      start_boundary_.push_back(profile.ranking(v).below_count(c) + 1);
    }
    const int levels = static_cast<int>(voters_.size());
    avail_.assign(levels + 1, std::vector<int>(m_ + 1, 0));
    for (int i = levels - 1; i >= 0; --i) {
      avail_[i] = avail_[i + 1];
      for (const CandidateId d : above_[i]) ++avail_[i][d];
    }
  }

  // Returns false when no raise vector can close the deficits (possible only
  // on an empty profile under the strict convention).
  bool solve() {
    if (need_total_ == 0) {
      best_cost_ = 0;
      best_raises_.assign(voters_.size(), 0);
      return true;
    }
    for (CandidateId d = 1; d <= m_; ++d) {
      if (rem_[d] > avail_[0][d]) return false;
    }
    // Raising c to the top of every ballot is always feasible, so it seeds
    // the incumbent; descend() keeps the first (lexicographically smallest)
    // raise vector among strict improvements.
    best_cost_ = 0;
    best_raises_.clear();
    for (const auto& lst : above_) {
      best_raises_.push_back(static_cast<int>(lst.size()));
      best_cost_ += static_cast<int>(lst.size());
    }
    choice_.assign(voters_.size(), 0);
    descend(0, 0);
    return true;
  }

  int best_cost() const { return best_cost_; }

  EditSequence witness() const {
    EditSequence seq;
    for (size_t i = 0; i < voters_.size(); ++i) {
      for (int step = 0; step < best_raises_[i]; ++step) {
        seq.push_back(Edit::swap(voters_[i], start_boundary_[i] + step));
      }
    }
    return seq;
  }

 private:
  void descend(int level, int cost) {
    if (++nodes_ > budget_.max_nodes) {
      throw OracleInfeasible(c_, "node budget of " +
                                     std::to_string(budget_.max_nodes) +
                                     " exceeded");
    }
    // Every outstanding pass costs at least one swap.
    if (cost + need_total_ > best_cost_) return;
    if (level == static_cast<int>(voters_.size())) {
      if (need_total_ == 0 && cost < best_cost_) {
        best_cost_ = cost;
        best_raises_ = choice_;
      }
      return;
    }
    for (CandidateId d = 1; d <= m_; ++d) {
      // Demand that the remaining voters can no longer deliver.
      if (rem_[d] > avail_[level][d]) return;
    }
    const auto& lst = above_[level];
    choice_[level] = 0;
    descend(level + 1, cost);
    for (int k = 1; k <= static_cast<int>(lst.size()); ++k) {
      pass(lst[k - 1]);
      choice_[level] = k;
      descend(level + 1, cost + k);
    }
    for (const CandidateId d : lst) unpass(d);
    choice_[level] = 0;
  }

  // Opponents are distinct within a voter's above list, so each is passed at
  // most once per level; negative rem_ records overshoot for the undo.
  void pass(CandidateId d) {
    if (rem_[d] > 0) --need_total_;
    --rem_[d];
  }
  void unpass(CandidateId d) {
    ++rem_[d];
    if (rem_[d] > 0) ++need_total_;
  }

  int m_;
  CandidateId c_;
  OracleBudget budget_;
  std::vector<int> rem_;
  int need_total_ = 0;
  std::vector<VoterId> voters_;
  std::vector<std::vector<CandidateId>> above_;
  std::vector<int> start_boundary_;
  std::vector<std::vector<int>> avail_;
  std::vector<int> choice_;
  std::vector<int> best_raises_;
  int best_cost_ = 0;
  std::int64_t nodes_ = 0;
};

}  // namespace

ExactScore exact_dodgson(const Profile& profile, CandidateId c,
                         TieConvention tc, const OracleBudget& budget) {
  check_candidate(profile, c);
  if (total_deficit(profile.tally(), c, tc) == 0) return {0, {}};
  if (profile.num_voters_live() == 0) {
    throw std::invalid_argument(
        "no swap sequence can score a candidate on an empty profile");
  }
  DodgsonSearch search(profile, c, tc, budget);
  if (!search.solve()) {
    throw std::invalid_argument(
        "no swap sequence closes the deficits of candidate " +
        std::to_string(c));
  }
  return {search.best_cost(), search.witness()};
}

ExactScore exact_young(const Profile& profile, CandidateId c, TieConvention tc,
                       const OracleBudget& budget) {
  check_candidate(profile, c);
  if (total_deficit(profile.tally(), c, tc) == 0) return {0, {}};
  const int n = profile.num_voters_live();
  if (n > budget.max_young_voters) {
    throw OracleInfeasible(
        c, std::to_string(n) + " live voters exceed the enumeration cap of " +
               std::to_string(budget.max_young_voters));
  }

  const int m = profile.num_candidates();
  const std::vector<VoterId> voters = profile.live_voters();
  std::vector<int> margins(m + 1, 0);
  for (CandidateId d = 1; d <= m; ++d) {
    if (d != c) margins[d] = profile.tally().margin(d, c);
  }
  // sign[i][d] = +1 when voter i ranks d above c (deleting i helps c by one).
  std::vector<std::vector<int>> sign(n, std::vector<int>(m + 1, 0));
  for (int i = 0; i < n; ++i) {
    const Ranking& r = profile.ranking(voters[i]);
    for (CandidateId d = 1; d <= m; ++d) {
      if (d != c) sign[i][d] = r.ranks_above(d, c) ? 1 : -1;
    }
  }
  const int bump = tc == TieConvention::strict ? 1 : 0;

  const auto satisfied = [&]() {
    for (CandidateId d = 1; d <= m; ++d) {
      if (d != c && margins[d] + bump > 0) return false;
    }
    return true;
  };
  // A single deletion lowers any one margin by at most one.
  const auto min_deletions_left = [&]() {
    int worst = 0;
    for (CandidateId d = 1; d <= m; ++d) {
      if (d != c) worst = std::max(worst, margins[d] + bump);
    }
    return worst;
  };

  std::vector<int> chosen;
  // Lexicographic combinations of the given size; first feasible subset wins.
  const auto search = [&](auto&& self, int from, int left) -> bool {
    if (left == 0) return satisfied();
    if (n - from < left) return false;
    if (min_deletions_left() > left) return false;
    for (int i = from; i <= n - left; ++i) {
      for (CandidateId d = 1; d <= m; ++d) {
        if (d != c) margins[d] -= sign[i][d];
      }
      chosen.push_back(i);
      if (self(self, i + 1, left - 1)) return true;
      chosen.pop_back();
      for (CandidateId d = 1; d <= m; ++d) {
        if (d != c) margins[d] += sign[i][d];
      }
    }
    return false;
  };

  for (int size = 1; size <= n; ++size) {
    if (search(search, 0, size)) {
      EditSequence seq;
      for (const int i : chosen) seq.push_back(Edit::deletion(voters[i]));
      return {size, seq};
    }
  }
  return {std::nullopt, {}};
}

}  // namespace editvote

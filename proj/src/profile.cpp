#include "editvote/profile.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace editvote {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

}  // namespace

Ranking::Ranking(std::vector<CandidateId> order) : order_(std::move(order)) {
  const int m = static_cast<int>(order_.size());
  if (m < 1) fail("ranking must contain at least one candidate");
  position_.assign(m + 1, -1);
  for (int pos = 0; pos < m; ++pos) {
    const CandidateId c = order_[pos];
    if (c < 1 || c > m) {
      fail("candidate " + std::to_string(c) + " out of range 1.." +
           std::to_string(m));
    }
    if (position_[c] != -1) {
      fail("duplicate candidate " + std::to_string(c));
    }
    position_[c] = pos;
  }
}

int Ranking::position(CandidateId c) const {
  if (c < 1 || c > num_candidates()) {
    fail("candidate " + std::to_string(c) + " out of range 1.." +
         std::to_string(num_candidates()));
  }
  return position_[c];
}

std::vector<CandidateId> Ranking::candidates_above(CandidateId c) const {
  const int pos = position(c);
  std::vector<CandidateId> above;
  above.reserve(pos);
  for (int p = pos - 1; p >= 0; --p) above.push_back(order_[p]);
  return above;
}

void Ranking::swap_boundary(int j) {
  const int m = num_candidates();
  if (j <= 0 || j >= m) {
    fail("swap boundary " + std::to_string(j) + " out of range 1.." +
         std::to_string(m - 1));
  }
  const int upper_pos = m - 1 - j;  // below count j
  const int lower_pos = upper_pos + 1;
  std::swap(order_[upper_pos], order_[lower_pos]);
  position_[order_[upper_pos]] = upper_pos;
  position_[order_[lower_pos]] = lower_pos;
}

TallyMatrix::TallyMatrix(int num_candidates) : m_(num_candidates) {
  counts_.assign(static_cast<size_t>(m_ + 1) * (m_ + 1), 0);
}

bool Profile::is_live(VoterId v) const {
  return v >= 1 && v <= num_voters_original() && live_[v - 1];
}

const Ranking& Profile::ranking(VoterId v) const {
  if (v < 1 || v > num_voters_original()) {
    fail("voter " + std::to_string(v) + " out of range 1.." +
         std::to_string(num_voters_original()));
  }
  if (!live_[v - 1]) {
    fail("voter " + std::to_string(v) + " has been deleted");
  }
  return rankings_[v - 1];
}

std::vector<VoterId> Profile::live_voters() const {
  std::vector<VoterId> ids;
  ids.reserve(n_live_);
  for (VoterId v = 1; v <= num_voters_original(); ++v) {
    if (live_[v - 1]) ids.push_back(v);
  }
  return ids;
}

void Profile::apply_swap(VoterId v, int boundary_j) {
  ranking(v);  // liveness and range checks
  Ranking& r = rankings_[v - 1];
  if (boundary_j <= 0 || boundary_j >= m_) {
    fail("swap boundary " + std::to_string(boundary_j) + " out of range 1.." +
         std::to_string(m_ - 1));
  }
  const int upper_pos = m_ - 1 - boundary_j;
  const CandidateId lowered = r.at_position(upper_pos);
  const CandidateId raised = r.at_position(upper_pos + 1);
  r.swap_boundary(boundary_j);
  tally_.add(lowered, raised, -1);
  tally_.add(raised, lowered, +1);
}

void Profile::apply_deletion(VoterId v) {
  const Ranking& r = ranking(v);
  for (int i = 0; i < m_; ++i) {
    for (int j = i + 1; j < m_; ++j) {
      tally_.add(r.at_position(i), r.at_position(j), -1);
    }
  }
  live_[v - 1] = false;
  --n_live_;
}

bool Profile::operator==(const Profile& other) const {
  if (m_ != other.m_ || live_ != other.live_ ||
      num_voters_original() != other.num_voters_original()) {
    return false;
  }
  for (VoterId v = 1; v <= num_voters_original(); ++v) {
    if (live_[v - 1] && !(rankings_[v - 1] == other.rankings_[v - 1])) {
      return false;
    }
  }
  return true;
}

Profile build_profile(const std::vector<std::vector<CandidateId>>& rows, int m) {
  if (m < 1) fail("candidate count must be at least 1");
  if (rows.empty()) fail("profile must contain at least one voter");

  Profile profile;
  profile.m_ = m;
  profile.rankings_.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const std::string who = "ranking " + std::to_string(i + 1) + ": ";
    if (static_cast<int>(row.size()) != m) {
      fail(who + "expected " + std::to_string(m) + " entries, got " +
           std::to_string(row.size()));
    }
    try {
      profile.rankings_.emplace_back(row);
    } catch (const std::invalid_argument& e) {
      fail(who + e.what());
    }
  }
  profile.live_.assign(rows.size(), 1);
  profile.n_live_ = static_cast<int>(rows.size());
  profile.tally_ = pairwise_tally(profile);
  return profile;
}

TallyMatrix pairwise_tally(const Profile& profile) {
  const int m = profile.num_candidates();
  TallyMatrix tally(m);
  for (VoterId v = 1; v <= profile.num_voters_original(); ++v) {
    if (!profile.is_live(v)) continue;
    const Ranking& r = profile.ranking(v);
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        tally.add(r.at_position(i), r.at_position(j), +1);
      }
    }
  }
  return tally;
}

int deficit(const TallyMatrix& tally, CandidateId c, CandidateId d,
            TieConvention tc) {
  const int m = tally.num_candidates();
  if (c < 1 || c > m || d < 1 || d > m) {
    fail("candidate out of range 1.." + std::to_string(m));
  }
  if (c == d) fail("deficit requires two distinct candidates");
  const int margin = tally.margin(d, c);
  const int bump = tc == TieConvention::strict ? 1 : 0;
  return std::max(0, margin + bump);
}

int total_deficit(const TallyMatrix& tally, CandidateId c, TieConvention tc) {
  int sum = 0;
  for (CandidateId d = 1; d <= tally.num_candidates(); ++d) {
    if (d != c) sum += deficit(tally, c, d, tc);
  }
  return sum;
}

CondorcetOutcome condorcet_outcome(const Profile& profile, TieConvention tc) {
  CondorcetOutcome outcome;
  for (CandidateId c = 1; c <= profile.num_candidates(); ++c) {
    if (total_deficit(profile.tally(), c, tc) == 0) {
      outcome.zero_deficit.push_back(c);
    }
  }
  if (outcome.zero_deficit.size() == 1) outcome.winner = outcome.zero_deficit[0];
  return outcome;
}

std::optional<CandidateId> condorcet_winner(const Profile& profile,
                                            TieConvention tc) {
  return condorcet_outcome(profile, tc).winner;
}

}  // namespace editvote

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "editvote/edits.hpp"
#include "editvote/profile.hpp"
#include "editvote/types.hpp"

namespace editvote {

// Enumeration limits for the exact oracles. Exceeding a limit raises
// OracleInfeasible; the oracles never fall back to approximation.
struct OracleBudget {
  std::int64_t max_nodes = 10'000'000;  // swap-rule search nodes
  int max_young_voters = 20;            // deletion-rule subset enumeration cap
};

class OracleInfeasible : public std::runtime_error {
 public:
  OracleInfeasible(CandidateId candidate, const std::string& reason)
      : std::runtime_error("exact oracle infeasible for candidate " +
                           std::to_string(candidate) + ": " + reason),
        candidate(candidate) {}

  CandidateId candidate;
};

// Exact score and a minimal witness. An absent score means no edit sequence
// of the allowed kind exists (deletion rule under the strict convention).
struct ExactScore {
  std::optional<int> score;
  EditSequence witness;
};

// Minimum number of adjacent swaps making c a Condorcet winner, by
// branch-and-bound over per-voter raise amounts. Only sequences that raise c
// itself need be searched; the unrestricted breadth-first check lives in the
// test suite. The witness uses consecutive swaps per voter, voters ascending,
// and is the lexicographically smallest raise vector among the minima.
ExactScore exact_dodgson(const Profile& profile, CandidateId c,
                         TieConvention tc, const OracleBudget& budget = {});

// Minimum number of voter deletions making c a Condorcet winner, by subset
// enumeration in increasing cardinality (first hit is optimal and
// lexicographically smallest). Absent score when no subset works.
ExactScore exact_young(const Profile& profile, CandidateId c, TieConvention tc,
                       const OracleBudget& budget = {});

}  // namespace editvote

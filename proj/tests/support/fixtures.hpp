#pragma once

#include <vector>

#include "editvote/profile.hpp"

namespace editvote::testing {

// Five voters over candidates 1..5 (a..e). No Condorcet winner; candidate 3
// trails candidate 1 by a raw margin of three and beats everyone else 3-2.
inline Profile ex5() {
  return build_profile(
      {
          {1, 2, 3, 4, 5},
          {1, 2, 3, 4, 5},
          {4, 1, 5, 3, 2},
          {4, 1, 5, 3, 2},
          {3, 5, 2, 4, 1},
      },
      5);
}

inline constexpr CandidateId kA = 1;
inline constexpr CandidateId kB = 2;
inline constexpr CandidateId kC = 3;
inline constexpr CandidateId kD = 4;
inline constexpr CandidateId kE = 5;

}  // namespace editvote::testing

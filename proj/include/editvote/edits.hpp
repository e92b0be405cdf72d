#pragma once

#include <string>
#include <vector>

#include "editvote/profile.hpp"
#include "editvote/types.hpp"

namespace editvote {

enum class EditKind { swap, deletion };

// A single profile edit. A swap (v, j) exchanges the adjacent pair in voter
// v's ranking whose below counts are j and j-1, raising the lower candidate.
// A deletion removes voter v's ballot.
struct Edit {
  EditKind kind = EditKind::swap;
  VoterId voter = 0;
  int boundary = 0;  // swaps only, 0 < j < m

  static Edit swap(VoterId v, int j) { return {EditKind::swap, v, j}; }
  static Edit deletion(VoterId v) { return {EditKind::deletion, v, 0}; }

  bool operator==(const Edit& other) const = default;
};

using EditSequence = std::vector<Edit>;

// One deficit-reduction event: applying the step_index-th edit (1-based)
// strictly lowered the scored candidate's deficit against `opponent`.
struct DeficitReduction {
  int step_index = 0;
  CandidateId candidate = 0;
  CandidateId opponent = 0;
  int deficit_before = 0;
  int deficit_after = 0;

  bool operator==(const DeficitReduction& other) const = default;
};

// Applies one edit, returning the edited profile. Inapplicable edits (deleted
// voter, out-of-range boundary) throw std::invalid_argument; edits are never
// silently skipped.
Profile apply_edit(Profile profile, const Edit& e);
void apply_edit_in_place(Profile& profile, const Edit& e);

// Left-to-right composition. The first inapplicable edit is reported with its
// 1-based index in the thrown message.
Profile apply_sequence(Profile profile, const EditSequence& seq);

// Replays `seq`, emitting one event per (edit, opponent) pair whose deficit
// strictly drops, in application order. A single deletion may emit several
// events, one per opponent; events within one edit are ordered by opponent id.
std::vector<DeficitReduction> deficit_reduction_trace(const Profile& profile,
                                                      CandidateId c,
                                                      const EditSequence& seq,
                                                      TieConvention tc);

// True when applying `seq` drives c's total deficit to zero.
bool is_condorcet_sequence(const Profile& profile, CandidateId c,
                           const EditSequence& seq, TieConvention tc);

// Line-oriented witness form: `swap v j` / `delete v`, one edit per line.
std::string witness_to_text(const EditSequence& seq);
EditSequence witness_from_text(const std::string& text);

}  // namespace editvote

#include "editvote/edits.hpp"

#include <sstream>
#include <stdexcept>

namespace editvote {

void apply_edit_in_place(Profile& profile, const Edit& e) {
  if (e.kind == EditKind::swap) {
    profile.apply_swap(e.voter, e.boundary);
  } else {
    profile.apply_deletion(e.voter);
  }
}

Profile apply_edit(Profile profile, const Edit& e) {
  apply_edit_in_place(profile, e);
  return profile;
}

Profile apply_sequence(Profile profile, const EditSequence& seq) {
  for (size_t i = 0; i < seq.size(); ++i) {
    try {
      apply_edit_in_place(profile, seq[i]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("edit " + std::to_string(i + 1) + ": " +
                                  e.what());
    }
  }
  return profile;
}

std::vector<DeficitReduction> deficit_reduction_trace(const Profile& profile,
                                                      CandidateId c,
                                                      const EditSequence& seq,
                                                      TieConvention tc) {
  const int m = profile.num_candidates();
  if (c < 1 || c > m) {
    throw std::invalid_argument("candidate " + std::to_string(c) +
                                " out of range 1.." + std::to_string(m));
  }
  Profile work = profile;
  std::vector<DeficitReduction> trace;
  for (size_t i = 0; i < seq.size(); ++i) {
    const Edit& e = seq[i];
    // A swap can change c's standing against at most one opponent; a deletion
    // can change it against all of them.
    std::vector<CandidateId> affected;
    if (e.kind == EditKind::swap) {
      const Ranking& r = work.ranking(e.voter);
      const int upper_pos = m - 1 - e.boundary;
      const CandidateId upper = r.at_position(upper_pos);
      const CandidateId lower = r.at_position(upper_pos + 1);
      if (lower == c) affected.push_back(upper);
      if (upper == c) affected.push_back(lower);
    } else {
      for (CandidateId d = 1; d <= m; ++d) {
        if (d != c) affected.push_back(d);
      }
    }
    std::vector<int> before(affected.size());
    for (size_t k = 0; k < affected.size(); ++k) {
      before[k] = deficit(work.tally(), c, affected[k], tc);
    }
    try {
      apply_edit_in_place(work, e);
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument("edit " + std::to_string(i + 1) + ": " +
                                  err.what());
    }
    for (size_t k = 0; k < affected.size(); ++k) {
      const int after = deficit(work.tally(), c, affected[k], tc);
      if (after < before[k]) {
        trace.push_back({static_cast<int>(i + 1), c, affected[k], before[k],
                         after});
      }
    }
  }
  return trace;
}

bool is_condorcet_sequence(const Profile& profile, CandidateId c,
                           const EditSequence& seq, TieConvention tc) {
  const Profile edited = apply_sequence(profile, seq);
  return total_deficit(edited.tally(), c, tc) == 0;
}

std::string witness_to_text(const EditSequence& seq) {
  std::ostringstream out;
  for (const Edit& e : seq) {
    if (e.kind == EditKind::swap) {
      out << "swap " << e.voter << ' ' << e.boundary << '\n';
    } else {
      out << "delete " << e.voter << '\n';
    }
  }
  return out.str();
}

EditSequence witness_from_text(const std::string& text) {
  EditSequence seq;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string op;
    fields >> op;
    if (op == "swap") {
      VoterId v = 0;
      int j = 0;
      if (!(fields >> v >> j)) {
        throw std::invalid_argument("witness line " + std::to_string(line_no) +
                                    ": malformed swap");
      }
      seq.push_back(Edit::swap(v, j));
    } else if (op == "delete") {
      VoterId v = 0;
      if (!(fields >> v)) {
        throw std::invalid_argument("witness line " + std::to_string(line_no) +
                                    ": malformed delete");
      }
      seq.push_back(Edit::deletion(v));
    } else {
      throw std::invalid_argument("witness line " + std::to_string(line_no) +
                                  ": unknown edit '" + op + "'");
    }
  }
  return seq;
}

}  // namespace editvote

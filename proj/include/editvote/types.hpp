#pragma once

#include <string>

namespace editvote {

// Candidates are numbered 1..m, voters 1..n. Voter ids are assigned in input
// order and stay stable across deletions; they are never renumbered.
using CandidateId = int;
using VoterId = int;

// Pairwise race convention. Under `strict` a tied race still counts one
// against the trailing candidate, so a winner must beat every rival outright.
// Under `weak` ties are neutral. Strict is the default everywhere.
enum class TieConvention { strict, weak };

enum class Rule { dodgson, young };
enum class Mode { greedy, exact };
enum class Engine { queue, naive };

std::string to_string(TieConvention tc);
std::string to_string(Rule rule);
std::string to_string(Mode mode);
std::string to_string(Engine engine);

// All parsers throw std::invalid_argument on unknown names.
TieConvention tie_convention_from_string(const std::string& s);
Rule rule_from_string(const std::string& s);
Mode mode_from_string(const std::string& s);
Engine engine_from_string(const std::string& s);

}  // namespace editvote

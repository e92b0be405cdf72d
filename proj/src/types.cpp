#include "editvote/types.hpp"

#include <stdexcept>

namespace editvote {

std::string to_string(TieConvention tc) {
  return tc == TieConvention::strict ? "strict" : "weak";
}

std::string to_string(Rule rule) {
  return rule == Rule::dodgson ? "dodgson" : "young";
}

std::string to_string(Mode mode) {
  return mode == Mode::greedy ? "greedy" : "exact";
}

std::string to_string(Engine engine) {
  return engine == Engine::queue ? "queue" : "naive";
}

TieConvention tie_convention_from_string(const std::string& s) {
  if (s == "strict") return TieConvention::strict;
  if (s == "weak") return TieConvention::weak;
  throw std::invalid_argument("unknown tie convention: " + s);
}

Rule rule_from_string(const std::string& s) {
  if (s == "dodgson") return Rule::dodgson;
  if (s == "young") return Rule::young;
  throw std::invalid_argument("unknown rule: " + s);
}

Mode mode_from_string(const std::string& s) {
  if (s == "greedy") return Mode::greedy;
  if (s == "exact") return Mode::exact;
  throw std::invalid_argument("unknown mode: " + s);
}

Engine engine_from_string(const std::string& s) {
  if (s == "queue") return Engine::queue;
  if (s == "naive") return Engine::naive;
  throw std::invalid_argument("unknown engine: " + s);
}

}  // namespace editvote

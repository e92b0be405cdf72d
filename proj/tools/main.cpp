#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "editvote/ballot_io.hpp"
#include "editvote/benchmark.hpp"
#include "editvote/election.hpp"
#include "editvote/exact.hpp"
#include "editvote/greedy.hpp"
#include "editvote/profile.hpp"

namespace {

using nlohmann::json;
using namespace editvote;

// Exit codes: 0 success, 1 invalid input or I/O failure, 3 the requested
// score is UNSCORABLE, 4 the exact oracle refused within its budget.
// (CLI11 reports usage errors with its own nonzero codes.)
constexpr int kExitError = 1;
constexpr int kExitUnscorable = 3;
constexpr int kExitInfeasible = 4;

struct CommonOptions {
  std::string file;
  std::string rule = "dodgson";
  std::string mode = "greedy";
  std::string convention = "strict";
  std::string engine = "queue";
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_mode = true) {
  cmd->add_option("file", opts.file, "ballot file (native or soc)")
      ->required();
  cmd->add_option("--rule", opts.rule, "dodgson|young")
      ->check(CLI::IsMember({"dodgson", "young"}));
  if (with_mode) {
    cmd->add_option("--mode", opts.mode, "greedy|exact")
        ->check(CLI::IsMember({"greedy", "exact"}));
  }
  cmd->add_option("--convention", opts.convention, "strict|weak")
      ->check(CLI::IsMember({"strict", "weak"}));
  cmd->add_option("--engine", opts.engine, "greedy engine: queue|naive")
      ->check(CLI::IsMember({"queue", "naive"}));
  cmd->add_option("--format", opts.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
}

json report_json(const ScoreReport& report, Mode mode) {
  json j;
  j["candidate"] = report.candidate;
  j["rule"] = to_string(report.rule);
  j["mode"] = to_string(mode);
  j["convention"] = to_string(report.convention);
  if (report.score.has_value()) {
    j["score"] = *report.score;
  } else {
    j["score"] = "UNSCORABLE";
  }
  json witness = json::array();
  for (const Edit& e : report.witness) {
    witness.push_back(e.kind == EditKind::swap
                          ? "swap " + std::to_string(e.voter) + " " +
                                std::to_string(e.boundary)
                          : "delete " + std::to_string(e.voter));
  }
  j["witness"] = witness;
  return j;
}

ScoreReport score_one(const Profile& profile, CandidateId candidate,
                      const CommonOptions& opts) {
  const Rule rule = rule_from_string(opts.rule);
  const TieConvention tc = tie_convention_from_string(opts.convention);
  if (mode_from_string(opts.mode) == Mode::greedy) {
    return greedy_score(profile, candidate, rule, tc,
                        engine_from_string(opts.engine));
  }
  const ExactScore exact = rule == Rule::dodgson
                               ? exact_dodgson(profile, candidate, tc)
                               : exact_young(profile, candidate, tc);
  ScoreReport report;
  report.candidate = candidate;
  report.score = exact.score;
  report.witness = exact.witness;
  report.rule = rule;
  report.convention = tc;
  return report;
}

int cmd_score(const CommonOptions& opts, CandidateId candidate, bool witness) {
  const Profile profile = parse_profile(opts.file);
  const ScoreReport report = score_one(profile, candidate, opts);
  if (opts.format == "json") {
    std::cout << report_json(report, mode_from_string(opts.mode)).dump(2)
              << '\n';
  } else {
    if (report.score.has_value()) {
      std::cout << *report.score << '\n';
    } else {
      std::cout << "UNSCORABLE\n";
    }
    if (witness) std::cout << witness_to_text(report.witness);
  }
  return report.score.has_value() ? 0 : kExitUnscorable;
}

ElectionResult run_election(const CommonOptions& opts) {
  const Profile profile = parse_profile(opts.file);
  return score_all(profile, rule_from_string(opts.rule),
                   mode_from_string(opts.mode),
                   tie_convention_from_string(opts.convention),
                   engine_from_string(opts.engine));
}

json election_json(const ElectionResult& result) {
  json j;
  j["rule"] = to_string(result.rule);
  j["mode"] = to_string(result.mode);
  j["convention"] = to_string(result.convention);
  json scores = json::object();
  for (const ScoreReport& report : result.reports) {
    const std::string key = std::to_string(report.candidate);
    if (report.score.has_value()) {
      scores[key] = *report.score;
    } else {
      scores[key] = "UNSCORABLE";
    }
  }
  j["scores"] = scores;
  j["ranking"] = result.ranking;
  j["winners"] = result.winner_set;
  return j;
}

int cmd_rank(const CommonOptions& opts) {
  const ElectionResult result = run_election(opts);
  if (opts.format == "json") {
    std::cout << election_json(result).dump(2) << '\n';
    return 0;
  }
  for (const auto& group : result.ranking) {
    const auto& score = result.reports[group.front() - 1].score;
    if (score.has_value()) {
      std::cout << *score << ':';
    } else {
      std::cout << "UNSCORABLE:";
    }
    for (const CandidateId c : group) std::cout << ' ' << c;
    std::cout << '\n';
  }
  return 0;
}

int cmd_winner(const CommonOptions& opts, bool lexicographic) {
  const ElectionResult result = run_election(opts);
  std::vector<CandidateId> winners = result.winner_set;
  if (lexicographic && !winners.empty()) winners.resize(1);
  if (opts.format == "json") {
    json j = election_json(result);
    j["winners"] = winners;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  for (size_t i = 0; i < winners.size(); ++i) {
    if (i > 0) std::cout << ' ';
    std::cout << winners[i];
  }
  std::cout << '\n';
  return 0;
}

int cmd_tideman(const std::string& file, CandidateId candidate,
                const std::string& convention, const std::string& format) {
  const Profile profile = parse_profile(file);
  const int value = total_deficit(profile.tally(), candidate,
                                  tie_convention_from_string(convention));
  if (format == "json") {
    json j;
    j["candidate"] = candidate;
    j["convention"] = convention;
    j["total_deficit"] = value;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << value << '\n';
  }
  return 0;
}

int cmd_compare(const CommonOptions& opts) {
  const Profile profile = parse_profile(opts.file);
  const Rule rule = rule_from_string(opts.rule);
  const TieConvention tc = tie_convention_from_string(opts.convention);
  const Engine engine = engine_from_string(opts.engine);
  const ElectionResult greedy =
      score_all(profile, rule, Mode::greedy, tc, engine);
  const ElectionResult exact = score_all(profile, rule, Mode::exact, tc);
  const ComparisonRecord record = compare_results(greedy, exact);

  json j;
  j["rule"] = to_string(rule);
  j["convention"] = to_string(tc);
  j["winner_sets_equal"] = record.winner_sets_equal;
  j["rankings_equal"] = record.rankings_equal;
  json ratios = json::object();
  for (size_t i = 0; i < record.ratios.size(); ++i) {
    ratios[std::to_string(i + 1)] = record.ratios[i];
  }
  j["ratios"] = ratios;
  j["max_ratio"] = record.max_ratio;
  j["greedy"] = election_json(greedy);
  j["exact"] = election_json(exact);
  if (opts.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "winner sets equal: " << (record.winner_sets_equal ? "yes" : "no")
              << '\n'
              << "rankings equal: " << (record.rankings_equal ? "yes" : "no")
              << '\n';
    for (size_t i = 0; i < record.ratios.size(); ++i) {
      const auto& ga = greedy.reports[i].score;
      const auto& ea = exact.reports[i].score;
      std::cout << "candidate " << (i + 1) << ": greedy "
                << (ga ? std::to_string(*ga) : "UNSCORABLE") << " exact "
                << (ea ? std::to_string(*ea) : "UNSCORABLE") << " ratio "
                << record.ratios[i] << '\n';
    }
    std::cout << "max ratio: " << record.max_ratio << '\n';
  }
  return 0;
}

int cmd_gen(int m, int n, std::uint64_t seed, const std::string& out) {
  const Profile profile = generate_impartial_culture(m, n, seed);
  if (out.empty() || out == "-") {
    std::cout << to_native_text(profile);
  } else {
    write_native(profile, out);
  }
  return 0;
}

int cmd_bench(const std::string& config_path) {
  const BenchConfig config = BenchConfig::from_json_file(config_path);
  const BenchReport report = run_benchmark(config);
  std::cout << report.summary.to_json_text();
  return 0;
}

void print_error(const std::string& type, const std::string& message) {
  json j;
  j["error"] = message;
  j["type"] = type;
  std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "editvote: Dodgson and Young election scoring via greedy "
      "marginal-cost edits, with exact oracles and benchmarks"};
  app.require_subcommand(1);

  CommonOptions score_opts;
  CandidateId score_candidate = 0;
  bool score_witness = false;
  CLI::App* score = app.add_subcommand("score", "score one candidate");
  add_common(score, score_opts);
  score->add_option("--candidate", score_candidate, "candidate id (1-based)")
      ->required();
  score->add_flag("--witness", score_witness, "print the witness edits");

  CommonOptions rank_opts;
  CLI::App* rank = app.add_subcommand("rank", "score and rank all candidates");
  add_common(rank, rank_opts);

  CommonOptions winner_opts;
  bool winner_lex = false;
  CLI::App* winner = app.add_subcommand("winner", "print the winner set");
  add_common(winner, winner_opts);
  winner->add_flag("--lexicographic", winner_lex,
                   "break score ties by lowest candidate id");

  std::string tideman_file;
  CandidateId tideman_candidate = 0;
  std::string tideman_convention = "strict";
  std::string tideman_format = "text";
  CLI::App* tideman =
      app.add_subcommand("tideman", "total deficit of one candidate");
  tideman->add_option("file", tideman_file, "ballot file")->required();
  tideman->add_option("--candidate", tideman_candidate, "candidate id")
      ->required();
  tideman->add_option("--convention", tideman_convention, "strict|weak")
      ->check(CLI::IsMember({"strict", "weak"}));
  tideman->add_option("--format", tideman_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CommonOptions compare_opts;
  CLI::App* compare =
      app.add_subcommand("compare", "greedy versus exact on one profile");
  add_common(compare, compare_opts, /*with_mode=*/false);

  int gen_m = 0;
  int gen_n = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  CLI::App* gen =
      app.add_subcommand("gen", "generate an impartial-culture profile");
  gen->add_option("--m", gen_m, "candidate count")->required();
  gen->add_option("--n", gen_n, "voter count")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  std::string bench_config;
  CLI::App* bench = app.add_subcommand("bench", "run a benchmark config");
  bench->add_option("--config", bench_config, "JSON config path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (score->parsed()) {
      return cmd_score(score_opts, score_candidate, score_witness);
    }
    if (rank->parsed()) return cmd_rank(rank_opts);
    if (winner->parsed()) return cmd_winner(winner_opts, winner_lex);
    if (tideman->parsed()) {
      return cmd_tideman(tideman_file, tideman_candidate, tideman_convention,
                         tideman_format);
    }
    if (compare->parsed()) return cmd_compare(compare_opts);
    if (gen->parsed()) return cmd_gen(gen_m, gen_n, gen_seed, gen_out);
    if (bench->parsed()) return cmd_bench(bench_config);
  } catch (const OracleInfeasible& e) {
    print_error("oracle_infeasible", e.what());
    return kExitInfeasible;
  } catch (const ParseError& e) {
    print_error("parse", e.what());
    return kExitError;
  } catch (const std::exception& e) {
    print_error("error", e.what());
    return kExitError;
  }
  return 0;
}

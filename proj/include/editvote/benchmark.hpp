#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "editvote/exact.hpp"
#include "editvote/types.hpp"

namespace editvote {

// Benchmark configuration: greedy-versus-exact comparison over either a grid
// of impartial-culture cells (m_min..m_max x n_min..n_max, `trials` profiles
// per cell) or a fixed list of ballot files. The first engine produces the
// reported scores; any further engines are run and checked for identical
// reports.
struct BenchConfig {
  Rule rule = Rule::dodgson;
  TieConvention convention = TieConvention::strict;
  int m_min = 2;
  int m_max = 4;
  int n_min = 2;
  int n_max = 5;
  int trials = 10;
  std::uint64_t seed = 1;
  std::vector<Engine> engines = {Engine::queue};
  std::vector<std::string> files;  // fixture trials; overrides the grid
  std::string out_csv;
  std::string out_summary;
  OracleBudget budget;

  static BenchConfig from_json_text(const std::string& text);
  static BenchConfig from_json_file(const std::string& path);
};

// One CSV row: one candidate within one trial.
struct BenchRow {
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;
  CandidateId candidate = 0;
  std::optional<int> exact_score;
  std::optional<int> greedy_score;
  double ratio = 1.0;  // +inf on scorability mismatch
  double greedy_seconds = 0.0;
  double oracle_seconds = 0.0;
  bool winner_agreement = false;
};

struct BenchSummary {
  double mean_ratio = 1.0;
  double max_ratio = 1.0;
  long long bound_violations = 0;  // rows with ratio above 1 + ln m
  double winner_agreement = 1.0;
  double ranking_agreement = 1.0;
  long long skipped_cells = 0;

  std::string to_json_text() const;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  BenchSummary summary;

  // Column order: m, n, seed, candidate, exact_score, greedy_score, ratio,
  // greedy_seconds, oracle_seconds, winner_agreement.
  std::string csv_text() const;
};

// Runs every trial, writes out_csv / out_summary when set, and returns the
// full report. Oracle-infeasible trials are recorded as skipped.
BenchReport run_benchmark(const BenchConfig& config);

}  // namespace editvote

// Acceptance suite: one check per release criterion, one PASS/FAIL line each.
// Run with no arguments for the full suite or with criterion numbers to run a
// subset. Exit status is the number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "editvote/ballot_io.hpp"
#include "editvote/benchmark.hpp"
#include "editvote/election.hpp"
#include "editvote/exact.hpp"
#include "editvote/greedy.hpp"
#include "support/bfs_oracle.hpp"
#include "support/fixtures.hpp"

namespace {

using namespace editvote;
using editvote::testing::bfs_dodgson_score;
using editvote::testing::ex5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  int id;
  std::string name;
  std::function<void(std::ostringstream&)> run;  // throws on failure
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

constexpr TieConvention kConventions[] = {TieConvention::strict,
                                          TieConvention::weak};

// ---------------------------------------------------------------------------
// 1. Golden example: the five-voter fixture scores.

void criterion_golden(std::ostringstream& detail) {
  const Profile p = ex5();

  auto start = Clock::now();
  const ExactScore exact_d = exact_dodgson(p, 3, TieConvention::strict);
  const double t1 = seconds_since(start);
  require(exact_d.score == 4, "exact Dodgson score of candidate 3 must be 4");

  start = Clock::now();
  const ScoreReport greedy_d =
      greedy_score(p, 3, Rule::dodgson, TieConvention::strict);
  const double t2 = seconds_since(start);
  require(greedy_d.score == 4, "greedy Dodgson score of candidate 3 must be 4");
  require(greedy_d.witness.size() == 4, "greedy witness must have 4 swaps");
  require(is_condorcet_sequence(p, 3, greedy_d.witness, TieConvention::strict),
          "greedy witness must make candidate 3 the Condorcet winner");
  require(is_condorcet_sequence(p, 3, exact_d.witness, TieConvention::strict),
          "exact witness must make candidate 3 the Condorcet winner");

  start = Clock::now();
  const ExactScore exact_y = exact_young(p, 4, TieConvention::strict);
  const double t3 = seconds_since(start);
  require(exact_y.score == 2, "exact Young score of candidate 4 must be 2");

  start = Clock::now();
  const ScoreReport greedy_y =
      greedy_score(p, 4, Rule::young, TieConvention::strict);
  const double t4 = seconds_since(start);
  require(greedy_y.score == 2, "greedy Young score of candidate 4 must be 2");
  const EditSequence deletions{Edit::deletion(1), Edit::deletion(2)};
  require(greedy_y.witness == deletions,
          "greedy Young witness must delete voters 1 and 2");
  require(exact_y.witness == deletions,
          "exact Young witness must delete voters 1 and 2");

  const double slowest = std::max({t1, t2, t3, t4});
  require(slowest < 1e-3, "each scoring call must finish within 1 ms");
  detail << "scores 4/4/2/2, slowest call "
         << static_cast<int>(slowest * 1e6) << " us";
}

// ---------------------------------------------------------------------------
// 2. Condorcet criterion across rules and modes.

void criterion_condorcet(std::ostringstream& detail) {
  int with_winner = 0;
  for (int i = 0; i < 500; ++i) {
    const int m = 2 + i % 5;
    const int n = 1 + i % 9;
    const Profile p =
        generate_impartial_culture(m, n, mix_seed(20260810, m, n, i));
    const auto winner = condorcet_winner(p, TieConvention::strict);
    if (!winner.has_value()) continue;
    ++with_winner;
    for (const Rule rule : {Rule::dodgson, Rule::young}) {
      for (const Mode mode : {Mode::greedy, Mode::exact}) {
        const ElectionResult result =
            score_all(p, rule, mode, TieConvention::strict);
        require(result.winner_set == std::vector<CandidateId>{*winner},
                "profile " + std::to_string(i) + ": " + to_string(rule) + "/" +
                    to_string(mode) + " must elect the Condorcet winner");
        require(result.reports[*winner - 1].score == 0,
                "profile " + std::to_string(i) +
                    ": the Condorcet winner must score 0");
      }
    }
  }
  detail << with_winner << "/500 profiles had a strict Condorcet winner; "
         << "all rule/mode combinations elected it";
}

// ---------------------------------------------------------------------------
// 3. Dodgson approximation bound at both conventions.

void criterion_dodgson_bound(std::ostringstream& detail) {
  const auto start = Clock::now();
  long long candidates_checked = 0;
  double worst_ratio = 1.0;
  for (int i = 0; i < 1000; ++i) {
    const int m = 2 + i % 5;
    const int n = 1 + i % 7;
    const Profile p =
        generate_impartial_culture(m, n, mix_seed(909090, m, n, i));
    const double bound = 1.0 + std::log(static_cast<double>(m));
    for (const TieConvention tc : kConventions) {
      for (CandidateId c = 1; c <= m; ++c) {
        const ExactScore exact = exact_dodgson(p, c, tc);
        const ScoreReport greedy = greedy_score(p, c, Rule::dodgson, tc);
        require(exact.score.has_value() && greedy.score.has_value(),
                "Dodgson scores must be finite");
        require(*exact.score <= *greedy.score,
                "greedy must never beat the exact score");
        require(*greedy.score <= bound * *exact.score + 1e-9,
                "instance " + std::to_string(i) + " candidate " +
                    std::to_string(c) + ": greedy " +
                    std::to_string(*greedy.score) + " exceeds the bound on " +
                    std::to_string(*exact.score));
        if (*exact.score > 0) {
          worst_ratio = std::max(
              worst_ratio, static_cast<double>(*greedy.score) / *exact.score);
        }
        ++candidates_checked;
      }
    }
  }
  const double elapsed = seconds_since(start);
  require(elapsed < 120.0, "suite must finish within two minutes");
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "%lld candidate runs, worst ratio %.4f, %.1f s",
                candidates_checked, worst_ratio, elapsed);
  detail << buffer;
}

// ---------------------------------------------------------------------------
// 4. Never-below-exact and witness soundness for both rules.

void criterion_soundness(std::ostringstream& detail) {
  long long finite_witnesses = 0;
  for (int i = 0; i < 1000; ++i) {
    const int m = 2 + i % 5;
    const int n = 1 + i % 7;
    const Profile p =
        generate_impartial_culture(m, n, mix_seed(606060, m, n, i));
    for (const TieConvention tc : kConventions) {
      for (CandidateId c = 1; c <= m; ++c) {
        for (const Rule rule : {Rule::dodgson, Rule::young}) {
          const ExactScore exact = rule == Rule::dodgson
                                       ? exact_dodgson(p, c, tc)
                                       : exact_young(p, c, tc);
          const ScoreReport greedy = greedy_score(p, c, rule, tc);
          // greedy >= exact, reading UNSCORABLE as infinity. A stranded
          // greedy run against a finite oracle score is legal (and feeds the
          // informational Young monitor); the reverse would be an oracle bug.
          if (greedy.score.has_value()) {
            require(exact.score.has_value(),
                    "the oracle missed a witness greedy found");
            require(*greedy.score >= *exact.score,
                    "greedy must never report below the exact score");
          }
          if (exact.score.has_value()) {
            require(static_cast<int>(exact.witness.size()) == *exact.score,
                    "exact witness length must equal the score");
            require(is_condorcet_sequence(p, c, exact.witness, tc),
                    "exact witness must replay to zero deficit");
            ++finite_witnesses;
          }
          if (greedy.score.has_value()) {
            require(static_cast<int>(greedy.witness.size()) == *greedy.score,
                    "greedy witness length must equal the score");
            require(is_condorcet_sequence(p, c, greedy.witness, tc),
                    "greedy witness must replay to zero deficit");
            ++finite_witnesses;
          }
        }
      }
    }
  }
  detail << finite_witnesses << " finite witnesses replayed to zero deficit";
}

// ---------------------------------------------------------------------------
// 5. Raise-only search agrees with the unrestricted swap BFS.

void criterion_cnormal(std::ostringstream& detail) {
  long long compared = 0;
  for (int i = 0; i < 200; ++i) {
    const int m = 2 + i % 3;  // 2..4 candidates
    const int n = 1 + i % 5;  // 1..5 voters
    const Profile p =
        generate_impartial_culture(m, n, mix_seed(515151, m, n, i));
    for (const TieConvention tc : kConventions) {
      for (CandidateId c = 1; c <= m; ++c) {
        const ExactScore exact = exact_dodgson(p, c, tc);
        const int bfs = bfs_dodgson_score(p, c, tc);
        require(exact.score == bfs,
                "instance " + std::to_string(i) + " candidate " +
                    std::to_string(c) + ": raise search " +
                    std::to_string(*exact.score) + " != BFS " +
                    std::to_string(bfs));
        ++compared;
      }
    }
  }
  detail << compared << " candidate scores matched the unrestricted BFS";
}

// ---------------------------------------------------------------------------
// 6. Queue and naive engines emit identical reports.

void criterion_engines(std::ostringstream& detail) {
  long long compared = 0;
  for (int i = 0; i < 400; ++i) {
    const int m = 2 + i % 5;
    const int n = 1 + i % 7;
    const Profile p =
        generate_impartial_culture(m, n, mix_seed(717171, m, n, i));
    for (const Rule rule : {Rule::dodgson, Rule::young}) {
      for (const TieConvention tc : kConventions) {
        for (CandidateId c = 1; c <= m; ++c) {
          const std::string queue =
              score_report_text(greedy_score(p, c, rule, tc, Engine::queue));
          const std::string naive =
              score_report_text(greedy_score(p, c, rule, tc, Engine::naive));
          require(queue == naive, "engines diverged on instance " +
                                      std::to_string(i) + " candidate " +
                                      std::to_string(c));
          ++compared;
        }
      }
    }
  }
  detail << compared << " reports byte-identical across engines";
}

// ---------------------------------------------------------------------------
// 7. Young edge behavior when every ballot ranks the rival first.

void criterion_young_edge(std::ostringstream& detail) {
  const Profile p = build_profile({{2, 1}, {2, 1}, {2, 1}}, 2);
  const ScoreReport greedy_strict =
      greedy_score(p, 1, Rule::young, TieConvention::strict);
  const ExactScore exact_strict = exact_young(p, 1, TieConvention::strict);
  require(!greedy_strict.score.has_value(),
          "greedy must report UNSCORABLE under strict");
  require(!exact_strict.score.has_value(),
          "the oracle must report UNSCORABLE under strict");

  const ScoreReport greedy_weak =
      greedy_score(p, 1, Rule::young, TieConvention::weak);
  const ExactScore exact_weak = exact_young(p, 1, TieConvention::weak);
  require(greedy_weak.score.has_value() && exact_weak.score.has_value(),
          "both must report a finite weak score");
  require(*greedy_weak.score == 3 && *exact_weak.score == 3,
          "the weak score must be 3 (delete every ballot)");
  detail << "strict UNSCORABLE on both paths, weak score 3 on both";
}

// ---------------------------------------------------------------------------
// 8. Runtime scaling and the informational Young ratio monitor.

double time_greedy_dodgson(const Profile& p, CandidateId c) {
  // Repeat until 20 ms so the per-run time is stable.
  int runs = 0;
  const auto start = Clock::now();
  double elapsed = 0.0;
  do {
    const ScoreReport report =
        greedy_score(p, c, Rule::dodgson, TieConvention::strict);
    require(report.score.has_value(), "scaling run must produce a score");
    ++runs;
    elapsed = seconds_since(start);
  } while (elapsed < 0.02);
  return elapsed / runs;
}

void criterion_scaling(std::ostringstream& detail) {
  // (a) absolute: m=50, n=1000 runs comfortably under a second per candidate.
  double worst_single = 0.0;
  {
    const Profile p = generate_impartial_culture(50, 1000, 4242);
    for (const CandidateId c : {1, 25, 50}) {
      const auto start = Clock::now();
      const ScoreReport report =
          greedy_score(p, c, Rule::dodgson, TieConvention::strict);
      const double elapsed = seconds_since(start);
      require(report.score.has_value(), "scaling run must produce a score");
      worst_single = std::max(worst_single, elapsed);
      require(elapsed < 1.0, "candidate " + std::to_string(c) +
                                 " took " + std::to_string(elapsed) + " s");
    }
  }

  // (a) doubling: time ratio for n=2000 over n=1000 at m=50, median of five.
  std::vector<double> ratios;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Profile small = generate_impartial_culture(50, 1000, seed);
    const Profile large = generate_impartial_culture(50, 2000, seed);
    const double t_small = time_greedy_dodgson(small, 1);
    const double t_large = time_greedy_dodgson(large, 1);
    ratios.push_back(t_large / t_small);
  }
  std::sort(ratios.begin(), ratios.end());
  const double median = ratios[2];
  require(median < 4.5, "median doubling ratio " + std::to_string(median) +
                            " must stay below 4.5");

  // (b) informational: Young ratios monitored against 1 + ln m.
  BenchConfig young;
  young.rule = Rule::young;
  young.convention = TieConvention::strict;
  young.m_min = 2;
  young.m_max = 5;
  young.n_min = 2;
  young.n_max = 6;
  young.trials = 8;
  young.seed = 888;
  const BenchReport report = run_benchmark(young);

  char buffer[200];
  std::snprintf(buffer, sizeof(buffer),
                "worst single run %.1f ms, median doubling ratio %.2f; "
                "informational Young bound violations: %lld of %zu rows",
                worst_single * 1e3, median, report.summary.bound_violations,
                report.rows.size());
  detail << buffer;
}

// ---------------------------------------------------------------------------
// 9. Determinism: round trips, benchmark reproducibility, seeded generation.

std::string csv_without_runtimes(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::istringstream fields_in(line);
    std::string field;
    while (std::getline(fields_in, field, ',')) fields.push_back(field);
    if (fields.size() == 10) {
      fields[7] = "";
      fields[8] = "";
    }
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out << ',';
      out << fields[i];
    }
    out << '\n';
  }
  return out.str();
}

void criterion_determinism(std::ostringstream& detail) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const int m = 1 + seed % 6;
    const int n = 1 + seed % 9;
    const Profile p =
        generate_impartial_culture(m, n, mix_seed(121212, m, n, seed));
    std::istringstream in(to_native_text(p));
    const Profile back =
        parse_profile_stream(in, BallotFormat::native, "roundtrip");
    require(back == p, "native round trip must preserve the profile");
    require(generate_impartial_culture(m, n, mix_seed(121212, m, n, seed)) == p,
            "equal seeds must reproduce equal profiles");
  }

  BenchConfig config;
  config.rule = Rule::dodgson;
  config.m_min = 2;
  config.m_max = 4;
  config.n_min = 2;
  config.n_max = 5;
  config.trials = 4;
  config.seed = 31337;
  config.engines = {Engine::queue, Engine::naive};
  const BenchReport a = run_benchmark(config);
  const BenchReport b = run_benchmark(config);
  require(csv_without_runtimes(a.csv_text()) ==
              csv_without_runtimes(b.csv_text()),
          "identical configs must reproduce identical CSV rows");
  require(a.summary.to_json_text() == b.summary.to_json_text(),
          "identical configs must reproduce identical summaries");
  detail << "50 round trips, reproducible benchmark CSV ("
         << a.rows.size() << " rows)";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "golden-example", criterion_golden},
      {2, "condorcet-criterion", criterion_condorcet},
      {3, "dodgson-bound", criterion_dodgson_bound},
      {4, "soundness", criterion_soundness},
      {5, "cnormal-minimality", criterion_cnormal},
      {6, "engine-equivalence", criterion_engines},
      {7, "young-edge", criterion_young_edge},
      {8, "scaling", criterion_scaling},
      {9, "determinism", criterion_determinism},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (!selected.empty() && !selected.count(criterion.id)) continue;
    std::ostringstream detail;
    const auto start = Clock::now();
    try {
      criterion.run(detail);
      std::printf("PASS  %d %-22s (%.2f s)  %s\n", criterion.id,
                  criterion.name.c_str(), seconds_since(start),
                  detail.str().c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL  %d %-22s (%.2f s)  %s\n", criterion.id,
                  criterion.name.c_str(), seconds_since(start), e.what());
    }
    std::fflush(stdout);
  }
  return failures;
}

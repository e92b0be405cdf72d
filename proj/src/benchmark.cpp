#include "editvote/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "editvote/ballot_io.hpp"
#include "editvote/election.hpp"
#include "editvote/greedy.hpp"

namespace editvote {

namespace {

using nlohmann::json;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string format_fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::string score_field(const std::optional<int>& score) {
  return score.has_value() ? std::to_string(*score) : "UNSCORABLE";
}

struct TrialResult {
  std::vector<BenchRow> rows;
  bool winner_agreement = false;
  bool ranking_agreement = false;
};

// Scores every candidate with both routes, timing each scoring call alone.
TrialResult run_trial(const Profile& profile, const BenchConfig& config,
                      std::uint64_t seed) {
  const int m = profile.num_candidates();
  TrialResult trial;
  std::vector<ScoreReport> greedy_reports;
  std::vector<ScoreReport> exact_reports;
  std::vector<double> greedy_seconds;
  std::vector<double> oracle_seconds;

  for (CandidateId c = 1; c <= m; ++c) {
    auto start = std::chrono::steady_clock::now();
    ScoreReport greedy = greedy_score(profile, c, config.rule,
                                      config.convention, config.engines[0]);
    greedy_seconds.push_back(seconds_since(start));
    for (size_t e = 1; e < config.engines.size(); ++e) {
      const ScoreReport other = greedy_score(
          profile, c, config.rule, config.convention, config.engines[e]);
      if (score_report_text(other) != score_report_text(greedy)) {
        throw std::logic_error("engine disagreement for candidate " +
                               std::to_string(c));
      }
    }

    start = std::chrono::steady_clock::now();
    const ExactScore exact =
        config.rule == Rule::dodgson
            ? exact_dodgson(profile, c, config.convention, config.budget)
            : exact_young(profile, c, config.convention, config.budget);
    oracle_seconds.push_back(seconds_since(start));

    ScoreReport exact_report;
    exact_report.candidate = c;
    exact_report.score = exact.score;
    exact_report.witness = exact.witness;
    exact_report.rule = config.rule;
    exact_report.convention = config.convention;
    greedy_reports.push_back(std::move(greedy));
    exact_reports.push_back(std::move(exact_report));
  }

  const auto greedy_groups = ranking_groups(greedy_reports);
  const auto exact_groups = ranking_groups(exact_reports);
  trial.winner_agreement = greedy_groups.front() == exact_groups.front();
  trial.ranking_agreement = greedy_groups == exact_groups;

  for (CandidateId c = 1; c <= m; ++c) {
    BenchRow row;
    row.m = m;
    row.n = profile.num_voters_live();
    row.seed = seed;
    row.candidate = c;
    row.greedy_score = greedy_reports[c - 1].score;
    row.exact_score = exact_reports[c - 1].score;
    if (!row.greedy_score.has_value() && !row.exact_score.has_value()) {
      row.ratio = 1.0;
    } else if (!row.greedy_score.has_value() || !row.exact_score.has_value()) {
      row.ratio = std::numeric_limits<double>::infinity();
    } else if (*row.exact_score == 0) {
      row.ratio = *row.greedy_score == 0
                      ? 1.0
                      : std::numeric_limits<double>::infinity();
    } else {
      row.ratio = static_cast<double>(*row.greedy_score) /
                  static_cast<double>(*row.exact_score);
    }
    row.greedy_seconds = greedy_seconds[c - 1];
    row.oracle_seconds = oracle_seconds[c - 1];
    row.winner_agreement = trial.winner_agreement;
    trial.rows.push_back(row);
  }
  return trial;
}

}  // namespace

BenchConfig BenchConfig::from_json_text(const std::string& text) {
  const json j = json::parse(text);
  BenchConfig config;
  if (j.contains("rule")) config.rule = rule_from_string(j.at("rule"));
  if (j.contains("convention")) {
    config.convention = tie_convention_from_string(j.at("convention"));
  }
  config.m_min = j.value("m_min", config.m_min);
  config.m_max = j.value("m_max", config.m_max);
  config.n_min = j.value("n_min", config.n_min);
  config.n_max = j.value("n_max", config.n_max);
  config.trials = j.value("trials", config.trials);
  config.seed = j.value("seed", config.seed);
  if (j.contains("engines")) {
    config.engines.clear();
    for (const auto& name : j.at("engines")) {
      config.engines.push_back(engine_from_string(name));
    }
  }
  if (j.contains("files")) {
    for (const auto& path : j.at("files")) {
      config.files.push_back(path);
    }
  }
  config.out_csv = j.value("out_csv", config.out_csv);
  config.out_summary = j.value("out_summary", config.out_summary);
  config.budget.max_nodes = j.value("max_nodes", config.budget.max_nodes);
  config.budget.max_young_voters =
      j.value("max_young_voters", config.budget.max_young_voters);

  if (config.engines.empty()) {
    throw std::invalid_argument("bench config needs at least one engine");
  }
  if (config.files.empty()) {
    if (config.trials < 1) {
      throw std::invalid_argument("bench config needs trials >= 1");
    }
    if (config.m_min < 1 || config.m_max < config.m_min || config.n_min < 1 ||
        config.n_max < config.n_min) {
      throw std::invalid_argument("bench config has an empty size range");
    }
  }
  return config;
}

BenchConfig BenchConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open bench config: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return from_json_text(text.str());
}

std::string BenchSummary::to_json_text() const {
  json j;
  j["mean_ratio"] = mean_ratio;
  j["max_ratio"] = max_ratio;
  j["bound_violations"] = bound_violations;
  j["winner_agreement"] = winner_agreement;
  j["ranking_agreement"] = ranking_agreement;
  j["skipped_cells"] = skipped_cells;
  return j.dump(2) + "\n";
}

std::string BenchReport::csv_text() const {
  std::ostringstream out;
  out << "m,n,seed,candidate,exact_score,greedy_score,ratio,"
         "greedy_seconds,oracle_seconds,winner_agreement\n";
  for (const BenchRow& row : rows) {
    out << row.m << ',' << row.n << ',' << row.seed << ',' << row.candidate
        << ',' << score_field(row.exact_score) << ','
        << score_field(row.greedy_score) << ',';
    if (std::isinf(row.ratio)) {
      out << "inf";
    } else {
      out << format_fixed(row.ratio, 6);
    }
    out << ',' << format_fixed(row.greedy_seconds, 6) << ','
        << format_fixed(row.oracle_seconds, 6) << ','
        << (row.winner_agreement ? 1 : 0) << '\n';
  }
  return out.str();
}

BenchReport run_benchmark(const BenchConfig& config) {
  BenchReport report;
  long long trial_count = 0;
  long long winner_agree = 0;
  long long ranking_agree = 0;
  double ratio_sum = 0.0;
  long long ratio_count = 0;
  double max_ratio = 0.0;

  const auto consume = [&](const TrialResult& trial) {
    ++trial_count;
    winner_agree += trial.winner_agreement ? 1 : 0;
    ranking_agree += trial.ranking_agreement ? 1 : 0;
    for (const BenchRow& row : trial.rows) {
      const double bound = 1.0 + std::log(static_cast<double>(row.m));
      if (std::isinf(row.ratio) || row.ratio > bound + 1e-12) {
        ++report.summary.bound_violations;
      }
      if (!std::isinf(row.ratio)) {
        ratio_sum += row.ratio;
        ++ratio_count;
        max_ratio = std::max(max_ratio, row.ratio);
      }
      report.rows.push_back(row);
    }
  };

  if (!config.files.empty()) {
    for (const std::string& path : config.files) {
      const Profile profile = parse_profile(path);
      try {
        consume(run_trial(profile, config, 0));
      } catch (const OracleInfeasible&) {
        ++report.summary.skipped_cells;
      }
    }
  } else {
    for (int m = config.m_min; m <= config.m_max; ++m) {
      for (int n = config.n_min; n <= config.n_max; ++n) {
        for (int t = 0; t < config.trials; ++t) {
          const std::uint64_t seed = mix_seed(config.seed, m, n, t);
          const Profile profile = generate_impartial_culture(m, n, seed);
          try {
            consume(run_trial(profile, config, seed));
          } catch (const OracleInfeasible&) {
            ++report.summary.skipped_cells;
          }
        }
      }
    }
  }

  if (ratio_count > 0) {
    report.summary.mean_ratio = ratio_sum / static_cast<double>(ratio_count);
    report.summary.max_ratio = max_ratio;
  }
  if (trial_count > 0) {
    report.summary.winner_agreement =
        static_cast<double>(winner_agree) / static_cast<double>(trial_count);
    report.summary.ranking_agreement =
        static_cast<double>(ranking_agree) / static_cast<double>(trial_count);
  }

  if (!config.out_csv.empty()) {
    std::ofstream out(config.out_csv);
    if (!out) throw std::runtime_error("cannot write CSV: " + config.out_csv);
    out << report.csv_text();
  }
  if (!config.out_summary.empty()) {
    std::ofstream out(config.out_summary);
    if (!out) {
      throw std::runtime_error("cannot write summary: " + config.out_summary);
    }
    out << report.summary.to_json_text();
  }
  return report;
}

}  // namespace editvote

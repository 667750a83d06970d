#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "checkers/closed_form.hpp"
#include "checkers/engine.hpp"
#include "checkers/io.hpp"
#include "checkers/oracle.hpp"
#include "checkers/parallel.hpp"
#include "checkers/series.hpp"

namespace {

using namespace checkers;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct LineFlag {
  std::optional<int> line;
  bool free_walk = false;

  AbsorptionConfig config() const {
    return free_walk || !line ? AbsorptionConfig::free_walk()
                              : AbsorptionConfig::bypass(*line);
  }
};

void add_line_options(CLI::App* cmd, LineFlag* flag) {
  auto* line_opt = cmd->add_option("--line", flag->line, "absorbing line x = x0");
  cmd->add_flag("--free", flag->free_walk, "free walk, no absorption")
      ->excludes(line_opt);
}

int cmd_amp(int x, int t, const LineFlag& line, const std::string& mode,
            const std::string& format) {
  AmplitudeRecord record;
  const AbsorptionConfig cfg = line.config();
  if (mode == "float") {
    const FloatWalkState state = run_float(t, cfg);
    record.x = x;
    record.t = t;
    record.line = cfg.line;
    record.exact = false;
    std::complex<double> z;
    if (cfg.line && x == *cfg.line) {
      for (const auto& [at, arrival] : state.absorbed) {
        if (at == t) {
          z = arrival;
        }
      }
    } else {
      z = state.amplitude(x);
    }
    record.re_float = z.real();
    record.im_float = z.imag();
  } else {
    record = make_amplitude_record(x, t, cfg.line, amplitude(x, t, cfg));
  }
  if (format == "json") {
    std::cout << nlohmann::json::array({to_json(record)}).dump(2) << "\n";
  } else {
    std::cout << amplitude_csv_header() << "\n" << to_csv(record) << "\n";
  }
  return 0;
}

int cmd_grid(int t_max, const LineFlag& line, const std::string& format,
             int exact_t_cap) {
  if (t_max > exact_t_cap) {
    std::cerr << "grid: t_max " << t_max << " exceeds exact-mode cap "
              << exact_t_cap << " (raise with --exact-t-max)\n";
    return kExitUsage;
  }
  const AbsorptionConfig cfg = line.config();
  const AmplitudeHistory history(t_max, cfg);
  if (format == "svg") {
    std::vector<std::pair<int, double>> bars;
    for (int x = 2 - t_max; x <= t_max; x += 2) {
      bars.emplace_back(x, history.probability(x, t_max).to_double());
    }
    std::string title = "P(x, " + std::to_string(t_max) + ")";
    title += cfg.line ? " bypass " + std::to_string(*cfg.line) : " free";
    std::cout << svg_bar_chart(bars, title);
    return 0;
  }
  std::cout << amplitude_csv_header() << "\n";
  for (int t = 1; t <= t_max; ++t) {
    for (int x = 2 - t; x <= t; x += 2) {
      std::cout << to_csv(make_amplitude_record(x, t, cfg.line, history.at(x, t)))
                << "\n";
    }
  }
  return 0;
}

struct CheckResult {
  std::string name;
  int t = 0;
  bool holds = true;
  std::string lhs, rhs;
};

void report_identity(std::vector<CheckResult>& out, const IdentityReport& r) {
  out.push_back({r.identity, r.t, r.holds, r.lhs.to_string(), r.rhs.to_string()});
}

std::vector<CheckResult> run_lemma_suite(int t_max) {
  const IdentityVerifier verifier(std::max(t_max, 10));
  std::vector<CheckResult> results;
  for (int t = 3; t <= t_max; ++t) {
    report_identity(results, verifier.lemma1(t));
    report_identity(results, verifier.lemma2(t));
  }
  for (int t = 4; t <= t_max; ++t) {
    report_identity(results, verifier.lemma3(t));
    report_identity(results, verifier.proposition1(t));
  }
  for (int n = 3; 2 * n <= t_max; ++n) {
    report_identity(results, verifier.lemma4(n));
  }
  const int n_max = std::max(3, t_max / 2);
  results.push_back({"theorem1_induction", n_max,
                     theorem1_induction_check(n_max), "closed-form convolution",
                     "closed form"});
  return results;
}

std::vector<CheckResult> run_theorem1_suite(int t_max) {
  const IdentityVerifier verifier(std::max(t_max, 10));
  std::vector<CheckResult> results;
  for (int t = 1; t <= t_max; ++t) {
    report_identity(results, verifier.theorem1(t));
  }
  return results;
}

std::vector<CheckResult> run_oracle_suite(int t_max, int oracle_cap) {
  const int depth = std::min(t_max, oracle_cap);
  const std::vector<AbsorptionConfig> configs = {
      AbsorptionConfig::free_walk(), AbsorptionConfig::bypass(-1),
      AbsorptionConfig::bypass(0), AbsorptionConfig::bypass(2),
      AbsorptionConfig::bypass(3)};
  std::vector<CheckResult> results;
  for (const auto& cfg : configs) {
    const AmplitudeHistory history(depth, cfg);
    const std::string name =
        cfg.line ? "oracle_bypass_" + std::to_string(*cfg.line) : "oracle_free";
    std::vector<CheckResult> per_t(depth);
    parallel_for(1, depth + 1, [&](int t) {
      CheckResult r{name, t, true, "", ""};
      for (int x = -t; x <= t; ++x) {
        const auto engine_amp = history.at(x, t);
        const auto oracle_amp = oracle_amplitude(x, t, cfg, depth);
        if (!(engine_amp == oracle_amp)) {
          r.holds = false;
          r.lhs = "engine a(" + std::to_string(x) + "," + std::to_string(t) +
                  ") = " + engine_amp.to_string();
          r.rhs = "oracle " + oracle_amp.to_string();
          break;
        }
      }
      per_t[t - 1] = std::move(r);
    });
    results.insert(results.end(), per_t.begin(), per_t.end());
  }
  return results;
}

int cmd_verify(const std::string& suite, int t_max, int oracle_cap) {
  std::vector<CheckResult> results;
  auto append = [&results](std::vector<CheckResult> batch) {
    results.insert(results.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
  };
  if (suite == "lemmas" || suite == "all") {
    append(run_lemma_suite(t_max));
  }
  if (suite == "theorem1" || suite == "all") {
    append(run_theorem1_suite(t_max));
  }
  if (suite == "oracle" || suite == "all") {
    append(run_oracle_suite(t_max, oracle_cap));
  }
  int failures = 0;
  for (const auto& r : results) {
    if (!r.holds) {
      ++failures;
      std::cout << "FAIL " << r.name << " t=" << r.t << "\n  lhs: " << r.lhs
                << "\n  rhs: " << r.rhs << "\n";
    }
  }
  std::cout << "checked " << results.size() << " identities, " << failures
            << " failed\n";
  nlohmann::json summary{{"suite", suite},
                         {"t_max", t_max},
                         {"checks", results.size()},
                         {"failures", failures},
                         {"all_hold", failures == 0}};
  std::cout << summary.dump(2) << "\n";
  return failures == 0 ? 0 : kExitVerifyFailure;
}

long long checkpoint_index_to_t(int line, long long k) {
  switch (line) {
    case 0:
    case 2:
      return 4 * k + 4;
    default:
      return 4 * k + 3;
  }
}

int cmd_series(int line, long long k_max, std::optional<int> t_max, bool engine,
               const std::string& mode, const std::string& format) {
  std::vector<SeriesRow> rows;
  SeriesReport report;
  if (engine) {
    const int depth = t_max.value_or(static_cast<int>(k_max));
    const EngineMode engine_mode =
        mode == "float" ? EngineMode::Float : EngineMode::Exact;
    report = partial_sum_engine(line, depth, engine_mode);
    // per-decade cumulative rows straight from the absorption log
    std::vector<std::pair<int, double>> events;
    if (engine_mode == EngineMode::Exact) {
      const WalkState state = run(depth, AbsorptionConfig::bypass(line));
      for (const auto& event : state.absorbed()) {
        events.emplace_back(event.t, event.arrival.norm_sq().to_double());
      }
    } else {
      const FloatWalkState state = run_float(depth, AbsorptionConfig::bypass(line));
      for (const auto& [t, arrival] : state.absorbed) {
        events.emplace_back(t, std::norm(arrival));
      }
    }
    double cumulative = 0.0;
    long long next_decade = 10;
    for (const auto& [t, p] : events) {
      cumulative += p;
      if (t >= next_decade) {
        rows.push_back({line, t, p, cumulative, report.target, std::nullopt});
        while (next_decade <= t) {
          next_decade *= 10;
        }
      }
    }
    rows.push_back({line, depth, 0.0, report.partial_sum, report.target,
                    report.tail_bound});
  } else {
    long long next_decade = 1;
    std::vector<std::pair<long long, double>> checkpoints;
    report = partial_sum_closed(line, k_max, [&](long long k, double sum) {
      if (k >= next_decade || k == k_max) {
        checkpoints.emplace_back(k, sum);
        while (next_decade <= k) {
          next_decade *= 10;
        }
      }
    });
    for (const auto& [k, sum] : checkpoints) {
      rows.push_back({line, k, term(line, checkpoint_index_to_t(line, k)), sum,
                      report.target,
                      k == k_max ? report.tail_bound : std::nullopt});
    }
  }
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
      out.push_back(to_json(row));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << series_csv_header() << "\n";
    for (const auto& row : rows) {
      std::cout << to_csv(row) << "\n";
    }
  }
  const char* verdict = report.verdict == Verdict::Certified ? "certified"
                        : report.verdict == Verdict::Inconclusive
                            ? "not certified"
                            : "no target constant";
  std::cout << "line " << line << ": partial_sum = "
            << format_double(report.partial_sum);
  if (report.target) {
    std::cout << ", target = " << format_double(*report.target);
  }
  if (report.tail_bound) {
    std::cout << ", tail_bound = " << format_double(*report.tail_bound);
  }
  std::cout << " -> " << verdict << "\n";
  if (report.tail_bound && report.verdict != Verdict::Certified) {
    return kExitVerifyFailure;
  }
  return 0;
}

int cmd_paths(int x, int t, const LineFlag& line, int oracle_cap) {
  const auto paths = enumerate_paths(x, t, line.config(), oracle_cap);
  for (const auto& p : paths) {
    const auto w = p.weight();
    const auto z = w.to_complex();
    std::cout << p.to_string() << " turns=" << p.turns() << " weight=" << w.to_string()
              << " ~ (" << format_double(z.real()) << ", " << format_double(z.imag())
              << ")\n";
  }
  std::cout << paths.size() << " path(s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feynman checkers with an absorbing line: exact amplitudes, "
               "identity verification, and absorption-series certification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file (exact-t-max, "
                                 "oracle-t-max, series-k-max)");

  int exact_t_cap = 2000;
  int oracle_cap = kDefaultEnumerationCap;
  long long default_k_max = 100000;
  app.add_option("--exact-t-max", exact_t_cap, "cap for exact-mode runs")
      ->capture_default_str();
  app.add_option("--oracle-t-max", oracle_cap, "cap for path enumeration")
      ->capture_default_str();
  app.add_option("--series-k-max", default_k_max, "default closed-form term count")
      ->capture_default_str();

  // amp
  auto* amp_cmd = app.add_subcommand("amp", "one amplitude + probability record");
  int amp_x = 0, amp_t = 1;
  LineFlag amp_line;
  std::string amp_mode = "exact", amp_format = "csv";
  amp_cmd->add_option("x", amp_x, "column")->required();
  amp_cmd->add_option("t", amp_t, "time, >= 1")->required()
      ->check(CLI::PositiveNumber);
  add_line_options(amp_cmd, &amp_line);
  amp_cmd->add_option("--mode", amp_mode)->check(CLI::IsMember({"exact", "float"}));
  amp_cmd->add_option("--format", amp_format)->check(CLI::IsMember({"json", "csv"}));

  // grid
  auto* grid_cmd = app.add_subcommand(
      "grid", "CSV of all light-cone amplitudes up to t_max, or SVG of P(x, t_max)");
  int grid_t_max = 5;
  LineFlag grid_line;
  std::string grid_format = "csv";
  grid_cmd->add_option("t_max", grid_t_max)->required()->check(CLI::PositiveNumber);
  add_line_options(grid_cmd, &grid_line);
  grid_cmd->add_option("--format", grid_format)
      ->check(CLI::IsMember({"csv", "svg"}));

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "identity / closed-form / oracle suites");
  std::string suite = "all";
  int verify_t_max = 40;
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"lemmas", "theorem1", "oracle", "all"}));
  verify_cmd->add_option("--t-max", verify_t_max)->check(CLI::PositiveNumber);

  // series
  auto* series_cmd = app.add_subcommand(
      "series", "absorption-probability partial sums and certification");
  int series_line = 0;
  long long series_k_max = -1;
  std::optional<int> series_t_max;
  bool series_engine = false;
  std::string series_mode = "exact", series_format = "csv";
  series_cmd->add_option("--line", series_line, "absorbing line")->required();
  series_cmd->add_option("--k-max", series_k_max, "closed-form term count");
  series_cmd->add_option("--t-max", series_t_max, "engine summation depth");
  series_cmd->add_flag("--engine", series_engine,
                       "sum the engine's absorption log instead of closed form");
  series_cmd->add_option("--mode", series_mode)
      ->check(CLI::IsMember({"exact", "float"}));
  series_cmd->add_option("--format", series_format)
      ->check(CLI::IsMember({"json", "csv"}));

  // paths
  auto* paths_cmd = app.add_subcommand("paths", "dump the contributing paths");
  int paths_x = 0, paths_t = 1;
  LineFlag paths_line;
  paths_cmd->add_option("x", paths_x)->required();
  paths_cmd->add_option("t", paths_t)->required()->check(CLI::PositiveNumber);
  add_line_options(paths_cmd, &paths_line);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (amp_cmd->parsed()) {
      return cmd_amp(amp_x, amp_t, amp_line, amp_mode, amp_format);
    }
    if (grid_cmd->parsed()) {
      return cmd_grid(grid_t_max, grid_line, grid_format, exact_t_cap);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(suite, verify_t_max, oracle_cap);
    }
    if (series_cmd->parsed()) {
      return cmd_series(series_line,
                        series_k_max > 0 ? series_k_max : default_k_max,
                        series_t_max, series_engine, series_mode, series_format);
    }
    if (paths_cmd->parsed()) {
      return cmd_paths(paths_x, paths_t, paths_line, oracle_cap);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedLine& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return 0;
}

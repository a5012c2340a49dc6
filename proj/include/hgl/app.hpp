#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgl/series.hpp"
#include "json.hpp"

namespace hgl {

/// Everything a CLI run depends on.
struct RunConfig {
  std::string command;            ///< analyze | classify | envelope | norms | verify-lemmas
  std::string preset;             ///< preset spelling, e.g. "synthetic_flat(1,1,80)"
  std::string input;              ///< coefficient JSON or sampled CSV (d = 1)
  int dimension = 1;
  int max_degree = 20;
  std::optional<int> quad_order;
  std::optional<double> sigma;
  std::optional<double> s;
  int n_min = -1;                 ///< first N or k of envelope tables (-1 selects 0)
  int n_max = 40;
  std::string norm = "l2";
  int n0 = 0;
  std::string out;                ///< empty writes to stdout
  std::string format = "json";    ///< json | csv
  double radius = 1.0;
  std::string kind = "E";         ///< envelope table: E | flat | s | norm_s
  std::optional<double> t_min;    ///< verify-lemmas: F-monotone t lower end
  std::optional<double> t_max;    ///< verify-lemmas: g/h sweep t upper end
  std::string suite = "all";      ///< verify-lemmas: all | g_h | F | inf | fsr
};

nlohmann::json config_json(const RunConfig& config);

struct CommandResult {
  int exit_code = 0;              ///< 0 success, 2 input error, 3 suite failure
  std::string output;             ///< report text (written to config.out or stdout by the caller)
  std::vector<std::string> warnings;
  std::string error;              ///< message when exit_code == 2
};

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSuite = 3;

/// Series named by --preset or --input.
HermiteSeries load_series(const RunConfig& config);

CommandResult cmd_analyze(const RunConfig& config);
CommandResult cmd_classify(const RunConfig& config);
CommandResult cmd_envelope(const RunConfig& config);
CommandResult cmd_norms(const RunConfig& config);
CommandResult cmd_verify_lemmas(const RunConfig& config);

/// Dispatches on config.command; input and domain errors become exit code 2.
CommandResult run_command(const RunConfig& config);

}  // namespace hgl

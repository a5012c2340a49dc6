#include "hgl/app.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hgl/classifier.hpp"
#include "hgl/envelopes.hpp"
#include "hgl/io.hpp"
#include "hgl/presets.hpp"
#include "hgl/spectral.hpp"

namespace hgl {

namespace {

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

/// CSV preamble carrying the config as a comment line.
std::string csv_preamble(const RunConfig& config) { return "# config: " + config_json(config).dump() + "\n"; }

void require_format(const RunConfig& config) {
  if (config.format != "json" && config.format != "csv") {
    throw std::invalid_argument("--format must be json or csv, got '" + config.format + "'");
  }
}

std::string log_cell(const LogScalar& v) {
  std::ostringstream os;
  os.precision(17);
  if (v.is_zero()) {
    os << "-inf";
  } else {
    os << v.log_magnitude();
  }
  return os.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

nlohmann::json config_json(const RunConfig& c) {
  nlohmann::json j{{"command", c.command},
                   {"preset", c.preset},
                   {"input", c.input},
                   {"dim", c.dimension},
                   {"max_degree", c.max_degree},
                   {"n_min", c.n_min},
                   {"n_max", c.n_max},
                   {"norm", c.norm},
                   {"n0", c.n0},
                   {"out", c.out},
                   {"format", c.format},
                   {"radius", c.radius},
                   {"kind", c.kind},
                   {"suite", c.suite}};
  j["quad_order"] = c.quad_order ? nlohmann::json(*c.quad_order) : nlohmann::json(nullptr);
  j["sigma"] = c.sigma ? nlohmann::json(*c.sigma) : nlohmann::json(nullptr);
  j["s"] = c.s ? nlohmann::json(*c.s) : nlohmann::json(nullptr);
  j["t_min"] = c.t_min ? nlohmann::json(*c.t_min) : nlohmann::json(nullptr);
  j["t_max"] = c.t_max ? nlohmann::json(*c.t_max) : nlohmann::json(nullptr);
  return j;
}

HermiteSeries load_series(const RunConfig& config) {
  if (config.preset.empty() == config.input.empty()) {
    throw std::invalid_argument("exactly one of --preset and --input is required");
  }
  if (!config.preset.empty()) {
    return make_preset(config.preset, config.dimension, config.max_degree, config.quad_order).series;
  }
  if (ends_with(config.input, ".csv")) {
    if (config.dimension != 1) throw std::invalid_argument("sampled CSV input requires --dim 1");
    const auto samples = read_samples_file(config.input);
    return analyze_samples(samples.x, samples.fx, config.max_degree, config.quad_order);
  }
  return read_series_file(config.input);
}

CommandResult cmd_analyze(const RunConfig& config) {
  require_format(config);
  const auto series = load_series(config);
  CommandResult r;
  if (config.format == "json") {
    auto j = series_to_json(series);
    j["config"] = config_json(config);
    r.output = dump(j);
  } else {
    std::ostringstream os;
    os.precision(17);
    os << csv_preamble(config) << "alpha,re,im\n";
    for (const auto& [alpha, c] : series.coefficients()) {
      for (int i = 0; i < alpha.dimension(); ++i) os << (i ? ";" : "") << alpha[static_cast<std::size_t>(i)];
      os << ',' << c.real() << ',' << c.imag() << '\n';
    }
    r.output = os.str();
  }
  return r;
}

CommandResult cmd_classify(const RunConfig& config) {
  require_format(config);
  const auto series = load_series(config);
  const auto growth = classify(series);
  CommandResult r;
  std::optional<double> sigma = config.sigma;
  if (!sigma && growth.kind == GrowthClass::Kind::FlatSigma) sigma = growth.parameter;
  nlohmann::json report{{"config", config_json(config)}, {"classification", to_json(growth)}};
  std::optional<CrossValidation> cv;
  if (sigma) {
    cv = cross_validate(series, *sigma, config.n_max);
    report["cross_validation"] = to_json(*cv);
  }
  if (config.format == "json") {
    r.output = dump(report);
  } else {
    std::ostringstream os;
    os.precision(17);
    os << csv_preamble(config) << "kind,parameter,flavor,log_radius,coefficient_route,norm_route,agrees\n";
    os << to_string(growth.kind) << ',' << growth.parameter << ',' << to_string(growth.flavor) << ','
       << log_cell(growth.radius) << ',';
    if (cv) {
      os << to_string(cv->coefficient_fit.verdict) << ',' << to_string(cv->norm_fit.verdict) << ','
         << (cv->agrees ? "true" : "false");
    } else {
      os << ",,";
    }
    os << '\n';
    r.output = os.str();
  }
  return r;
}

CommandResult cmd_envelope(const RunConfig& config) {
  require_format(config);
  const int first = config.n_min >= 0 ? config.n_min : 0;
  if (config.n_max < first) throw std::invalid_argument("--n-max must be >= --n-min");
  CommandResult r;
  std::string index_name = "N";
  nlohmann::json rows = nlohmann::json::array();
  int omitted = 0;
  for (int n = first; n <= config.n_max; ++n) {
    LogScalar v;
    if (config.kind == "E") {
      const double sigma = config.sigma.value_or(1.0);
      if (!(n * sigma > std::numbers::e)) {
        ++omitted;
        continue;
      }
      v = envelope_E(n, sigma, config.radius);
    } else if (config.kind == "flat") {
      index_name = "k";
      v = envelope_coeff_flat(MultiIndex{n}, config.sigma.value_or(1.0), config.radius);
    } else if (config.kind == "s") {
      index_name = "k";
      v = envelope_coeff_s(MultiIndex{n}, config.s.value_or(0.5), config.radius);
    } else if (config.kind == "norm_s") {
      v = envelope_norm_s(n, config.s.value_or(0.5), config.radius);
    } else {
      throw std::invalid_argument("--kind must be E, flat, s or norm_s, got '" + config.kind + "'");
    }
    rows.push_back({n, v.log_magnitude()});
  }
  if (omitted > 0) {
    r.warnings.push_back(std::to_string(omitted) + " rows with N sigma <= e omitted");
  }
  if (config.format == "json") {
    r.output = dump({{"config", config_json(config)},
                     {"kind", config.kind},
                     {"index", index_name},
                     {"omitted", omitted},
                     {"rows", rows}});
  } else {
    std::ostringstream os;
    os.precision(17);
    os << csv_preamble(config) << index_name << ",log_envelope\n";
    for (const auto& row : rows) os << row[0].get<int>() << ',' << row[1].get<double>() << '\n';
    r.output = os.str();
  }
  return r;
}

CommandResult cmd_norms(const RunConfig& config) {
  require_format(config);
  const auto series = load_series(config);
  const auto kind = NormKind::parse(config.norm);
  auto seq = norm_sequence(series, config.n_max, kind, config.sigma.value_or(1.0));
  std::erase_if(seq.values, [&](const auto& v) { return v.first < config.n0; });
  CommandResult r;
  if (config.format == "csv") {
    r.output = csv_preamble(config) + to_csv(seq);
  } else {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& [n, v] : seq.values) values.push_back({{"N", n}, {"norm", to_json(v)}});
    r.output = dump({{"config", config_json(config)},
                     {"norm_kind", kind.label()},
                     {"d", seq.dimension},
                     {"sigma", seq.sigma},
                     {"max_degree", seq.max_degree},
                     {"values", values}});
  }
  return r;
}

CommandResult cmd_verify_lemmas(const RunConfig& config) {
  require_format(config);
  const std::string& suite = config.suite;
  if (suite != "all" && suite != "g_h" && suite != "F" && suite != "inf" && suite != "fsr") {
    throw std::invalid_argument("--suite must be all, g_h, F, inf or fsr");
  }
  std::vector<BoundCheckReport> reports;
  if (suite == "all" || suite == "g_h") {
    for (double R : {1.0, 5.0}) {
      GHGrid g;
      g.t_max = config.t_max.value_or(R == 1.0 ? 1e3 : 1e4);
      reports.push_back(check_lemma_g_h(R, g));
    }
  }
  if (suite == "all" || suite == "F") {
    for (double sigma : {1.0, 2.0}) {
      FGrid g;
      if (config.t_min) g.t_min = *config.t_min;
      reports.push_back(check_lemma_F_monotone(sigma, g));
    }
  }
  if (suite == "all" || suite == "inf") {
    for (double r1 : {0.5, 1.0, 2.0}) reports.push_back(check_inf_over_t(r1, config.sigma.value_or(1.0)));
  }
  if (suite == "all" || suite == "fsr") reports.push_back(check_lemma_fsr_family({0.2, 0.5, 1.0, 2.0}));

  CommandResult r;
  bool all_pass = true;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& rep : reports) {
    all_pass = all_pass && rep.pass;
    list.push_back(to_json(rep));
  }
  if (config.format == "json") {
    r.output = dump({{"config", config_json(config)}, {"pass", all_pass}, {"reports", list}});
  } else {
    std::ostringstream os;
    os.precision(17);
    os << csv_preamble(config) << "name,pass,log_max_ratio,threshold,log_fitted_constant\n";
    for (const auto& rep : reports) {
      os << rep.name << ',' << (rep.pass ? "true" : "false") << ',' << log_cell(rep.max_ratio) << ','
         << rep.threshold << ',' << log_cell(rep.fitted_constant) << '\n';
    }
    r.output = os.str();
  }
  r.exit_code = all_pass ? kExitOk : kExitSuite;
  return r;
}

CommandResult run_command(const RunConfig& config) {
  try {
    if (config.command == "analyze") return cmd_analyze(config);
    if (config.command == "classify") return cmd_classify(config);
    if (config.command == "envelope") return cmd_envelope(config);
    if (config.command == "norms") return cmd_norms(config);
    if (config.command == "verify-lemmas") return cmd_verify_lemmas(config);
    throw std::invalid_argument("unknown command '" + config.command + "'");
  } catch (const std::invalid_argument& e) {
    return CommandResult{kExitInput, "", {}, e.what()};
  } catch (const std::domain_error& e) {
    return CommandResult{kExitInput, "", {}, e.what()};
  } catch (const InputError& e) {
    return CommandResult{kExitInput, "", {}, e.what()};
  }
}

}  // namespace hgl

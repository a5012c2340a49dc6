#include <iostream>

#include "CLI11.hpp"
#include "hgl/app.hpp"
#include "hgl/io.hpp"

namespace {

void add_common(CLI::App* sub, hgl::RunConfig& c, bool needs_series) {
  if (needs_series) {
    sub->add_option("--preset", c.preset, "Preset, e.g. gaussian(1.0) or synthetic_flat(1,1,80)");
    sub->add_option("--input", c.input, "Coefficient JSON or sampled CSV (x,f(x)) file");
    sub->add_option("--dim", c.dimension, "Dimension for analyzed presets")->check(CLI::Range(1, 3));
    sub->add_option("--max-degree", c.max_degree, "Degree cutoff M")->check(CLI::NonNegativeNumber);
    sub->add_option("--quad-order", c.quad_order, "Gauss-Hermite order per axis")->check(CLI::PositiveNumber);
  }
  sub->add_option("--out", c.out, "Output file (default stdout)");
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite-spectral growth classification and envelope toolkit"};
  app.require_subcommand(1);
  hgl::RunConfig c;

  auto* analyze = app.add_subcommand("analyze", "Hermite coefficients of a preset or sampled function");
  add_common(analyze, c, true);

  auto* classify = app.add_subcommand("classify", "Position on the extended Pilipovic scale");
  add_common(classify, c, true);
  classify->add_option("--sigma", c.sigma, "Scale for the cross-validation (default: estimated)");
  classify->add_option("--n-max", c.n_max, "Largest power of the harmonic oscillator")->check(CLI::PositiveNumber);

  auto* envelope = app.add_subcommand("envelope", "Envelope tables");
  add_common(envelope, c, false);
  envelope->add_option("--kind", c.kind, "E, flat, s or norm_s")->check(CLI::IsMember({"E", "flat", "s", "norm_s"}));
  envelope->add_option("--sigma", c.sigma, "sigma for E and flat");
  envelope->add_option("--s", c.s, "s for s and norm_s");
  envelope->add_option("--radius", c.radius, "Radius r")->check(CLI::PositiveNumber);
  envelope->add_option("--n-min", c.n_min, "First N or k")->check(CLI::NonNegativeNumber);
  envelope->add_option("--n-max", c.n_max, "Last N or k")->check(CLI::NonNegativeNumber);

  auto* norms = app.add_subcommand("norms", "Norms of powers of the harmonic oscillator");
  add_common(norms, c, true);
  norms->add_option("--norm", c.norm, "l2, lp:<p>, linf or mod:<p>,<q>,<weight>");
  norms->add_option("--sigma", c.sigma, "Scale carried in the sequence");
  norms->add_option("--n-max", c.n_max, "Largest N")->check(CLI::PositiveNumber);
  norms->add_option("--n0", c.n0, "Drop N < n0")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify-lemmas", "Numerical lemma suites");
  add_common(verify, c, false);
  verify->add_option("--suite", c.suite, "all, g_h, F, inf or fsr");
  verify->add_option("--sigma", c.sigma, "sigma for the infimum suite");
  verify->add_option("--t-min", c.t_min, "Lower t end of the F sweep");
  verify->add_option("--t-max", c.t_max, "Upper t end of the g/h sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hgl::kExitInput;
  }
  c.command = app.get_subcommands().front()->get_name();

  const auto result = hgl::run_command(c);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
  if (result.exit_code == hgl::kExitInput) {
    std::cerr << "error: " << result.error << '\n';
    return result.exit_code;
  }
  try {
    if (c.out.empty()) {
      std::cout << result.output;
    } else {
      hgl::write_file_atomic(c.out, result.output);
    }
  } catch (const hgl::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return hgl::kExitInput;
  }
  return result.exit_code;
}

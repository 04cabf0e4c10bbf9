#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bandspec/run.hpp"

namespace {

using bandspec::AlphaSequence;
using bandspec::RunConfig;
using bandspec::WeightFamily;

// alpha spec strings: "affine:slope,offset" or "logshift".
AlphaSequence parse_alpha(const std::string& spec) {
  if (spec == "logshift") return AlphaSequence::log_shift();
  const std::string prefix = "affine:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string rest = spec.substr(prefix.size());
    const std::size_t comma = rest.find(',');
    const double slope = std::stod(rest.substr(0, comma));
    const double offset =
        comma == std::string::npos ? 0.0 : std::stod(rest.substr(comma + 1));
    return AlphaSequence::affine(slope, offset);
  }
  throw CLI::ValidationError(
      "--alpha expects 'affine:slope,offset' or 'logshift' "
      "(tabulated sequences go through --config)");
}

struct Flags {
  double r = 1.0;
  double s = 1.0;
  std::string space = "lp";
  double p = 2.0;
  std::string weight = "unit";
  double base = 2.0;
  std::string alpha;
  std::string config;
  std::string output;
  std::string point;
  std::size_t m = 0;
  std::size_t n_max = 0;
  unsigned seed = 0;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--r", f.r, "diagonal parameter r (nonzero)");
  cmd->add_option("--s", f.s, "subdiagonal parameter s (nonzero)");
  cmd->add_option("--space", f.space, "lp | lambda | lambda-dual")
      ->check(CLI::IsMember({"lp", "lambda", "lambda-dual"}));
  cmd->add_option("--p", f.p, "lp exponent, in (1, inf)");
  cmd->add_option("--weight", f.weight, "unit | geometric")
      ->check(CLI::IsMember({"unit", "geometric"}));
  cmd->add_option("--a", f.base, "geometric weight base (v_n = a^alpha_n)");
  cmd->add_option("--alpha", f.alpha,
                  "alpha sequence: affine:slope,offset | logshift");
  cmd->add_option("--config", f.config, "JSON config file with overrides");
  cmd->add_option("--output", f.output, "artifact output path");
  cmd->add_option("--point", f.point, "complex point 're,im'");
  cmd->add_option("--m", f.m, "truncation / section size");
  cmd->add_option("--n-max", f.n_max, "iteration horizon");
  cmd->add_option("--seed", f.seed, "verify RNG seed");
}

int build_and_run(bandspec::Command command, const Flags& f) {
  RunConfig cfg;
  cfg.command = command;
  cfg.band = bandspec::BandParams(f.r, f.s);
  if (f.space == "lp") {
    cfg.kind = bandspec::SpaceKind::Lp;
  } else if (f.space == "lambda") {
    cfg.kind = bandspec::SpaceKind::Lambda;
  } else {
    cfg.kind = bandspec::SpaceKind::LambdaDual;
  }
  cfg.p = f.p;
  if (!f.alpha.empty()) cfg.alpha = parse_alpha(f.alpha);
  if (f.weight == "geometric") {
    if (!cfg.alpha) {
      std::cerr << "error: geometric weight requires --alpha\n";
      return 2;
    }
    cfg.weight = WeightFamily::geometric(f.base, *cfg.alpha);
  }
  if (!f.point.empty()) {
    const std::size_t comma = f.point.find(',');
    const double re = std::stod(f.point.substr(0, comma));
    const double im = comma == std::string::npos
                          ? 0.0
                          : std::stod(f.point.substr(comma + 1));
    cfg.point = std::complex<double>(re, im);
  }
  if (f.m > 0) cfg.trunc.m = f.m;
  if (f.n_max > 0) cfg.n_max = f.n_max;
  if (f.seed > 0) cfg.seed = f.seed;
  cfg.output_path = f.output;

  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) {
      std::cerr << "error: cannot read config file " << f.config << "\n";
      return 2;
    }
    bandspec::json doc;
    in >> doc;
    bandspec::apply_config_json(doc, cfg);
    cfg.command = command;  // the subcommand wins over the config file
  }
  return bandspec::run(cfg, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Spectral and ergodic analysis of the double-band operator B(r,s) on "
      "weighted lp and graded sequence spaces"};
  app.require_subcommand(1);

  Flags f;
  struct Sub {
    const char* name;
    const char* help;
    bandspec::Command command;
  };
  const Sub subs[] = {
      {"classify", "fine spectrum report (JSON)", bandspec::Command::Classify},
      {"ergodics", "ergodicity verdicts (JSON)", bandspec::Command::Ergodics},
      {"resolve", "resolvent application + summability certificates",
       bandspec::Command::Resolve},
      {"cesaro", "Cesaro decay table (CSV)", bandspec::Command::Cesaro},
      {"pseudospec", "sigma_min grid (CSV) + contour summary (JSON)",
       bandspec::Command::Pseudospec},
      {"verify", "run the built-in property suite", bandspec::Command::Verify},
  };
  for (const Sub& sub : subs) {
    add_common(app.add_subcommand(sub.name, sub.help), f);
  }

  CLI11_PARSE(app, argc, argv);

  for (const Sub& sub : subs) {
    if (app.got_subcommand(sub.name)) {
      try {
        return build_and_run(sub.command, f);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
  }
  return 2;
}

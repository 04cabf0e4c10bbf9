#include "bandspec/run.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

#include "bandspec/errors.hpp"
#include "bandspec/grading.hpp"
#include "bandspec/resolvent.hpp"
#include "bandspec/spectra.hpp"

namespace bandspec {

namespace {

std::complex<double> complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  return {j.at("re").get<double>(),
          j.contains("im") ? j.at("im").get<double>() : 0.0};
}

AlphaSequence alpha_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "affine") {
    return AlphaSequence::affine(j.at("slope").get<double>(),
                                 j.value("offset", 0.0));
  }
  if (kind == "logshift") return AlphaSequence::log_shift();
  if (kind == "table") {
    return AlphaSequence::table(j.at("values").get<std::vector<double>>(),
                                j.at("l").get<double>());
  }
  throw std::invalid_argument("unknown alpha kind: " + kind);
}

WeightFamily weight_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "unit") return WeightFamily::unit();
  if (kind == "geometric") {
    return WeightFamily::geometric(j.at("base").get<double>(),
                                   alpha_from_json(j.at("alpha")));
  }
  if (kind == "table") {
    return WeightFamily::table(j.at("values").get<std::vector<double>>(),
                               j.at("N").get<double>(),
                               j.at("L").get<double>(),
                               j.at("L1").get<double>());
  }
  throw std::invalid_argument("unknown weight kind: " + kind);
}

Command command_from_string(const std::string& s) {
  if (s == "classify") return Command::Classify;
  if (s == "ergodics") return Command::Ergodics;
  if (s == "resolve") return Command::Resolve;
  if (s == "cesaro") return Command::Cesaro;
  if (s == "pseudospec") return Command::Pseudospec;
  if (s == "verify") return Command::Verify;
  throw std::invalid_argument("unknown command: " + s);
}

SpaceDescriptor make_space(const RunConfig& cfg) {
  if (cfg.kind == SpaceKind::Lp) {
    return SpaceDescriptor::lp(cfg.p, cfg.weight);
  }
  if (!cfg.alpha) {
    throw std::invalid_argument("graded space requires an alpha sequence");
  }
  return SpaceDescriptor::power_series(
      validate_space(*cfg.alpha, cfg.kind == SpaceKind::LambdaDual));
}

void write_artifact(const RunConfig& cfg, const std::string& content,
                    std::ostream& out) {
  if (cfg.output_path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(cfg.output_path, std::ios::binary);
  if (!f) {
    throw std::invalid_argument("cannot open output path: " + cfg.output_path);
  }
  f << content;
}

int run_classify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.kind == SpaceKind::Lp) {
    const FineSpectrum fs = fine_spectrum(cfg.band, cfg.p, cfg.weight);
    json j = to_json(fs);
    const NormBounds nb = operator_norm_bounds(cfg.band, cfg.p, fs.ratios);
    j["norm_bounds"] = json{{"lower_stated", nb.lower_stated},
                            {"lower_quotient", nb.lower_quotient},
                            {"upper", nb.upper},
                            {"bounds_disagree", nb.bounds_disagree}};
    if (cfg.point) {
      j["point"] = json{{"alpha",
                         json{{"re", cfg.point->real()},
                              {"im", cfg.point->imag()}}},
                        {"class", to_string(classify_point(fs, *cfg.point))}};
    }
    out << canonical(j);
    return 0;
  }
  const SpaceDescriptor space = make_space(cfg);
  const PowerSeriesSpace& sp = *space.as_power_series();
  const GradedFineSpectrum g = graded_fine_spectrum(cfg.band, sp);
  json j = to_json(g, sp);
  j["grade_crosscheck"] =
      to_json(per_grade_crosscheck(cfg.band, sp, cfg.crosscheck_grades));
  out << canonical(j);
  return 0;
}

int run_ergodics(const RunConfig& cfg, std::ostream& out) {
  const ErgodicReport rep = classify_ergodic(cfg.band, make_space(cfg));
  out << canonical(to_json(rep));
  return 0;
}

int run_resolve(const RunConfig& cfg, std::ostream& out) {
  if (cfg.kind != SpaceKind::Lp) {
    throw std::invalid_argument("resolve operates on the weighted lp spaces");
  }
  if (!cfg.point) {
    throw std::invalid_argument("resolve requires a target point");
  }
  const std::complex<double> alpha = *cfg.point;
  SeqVector y(cfg.trunc.m);
  if (cfg.rhs.empty()) {
    y.entries[0] = 1.0;
  } else {
    for (std::size_t i = 0; i < cfg.rhs.size() && i < cfg.trunc.m; ++i) {
      y.entries[i] = cfg.rhs[i];
    }
  }
  const ResolventEvaluation eval = make_resolvent(cfg.band, alpha, cfg.weight);
  const SeqVector x = resolvent_apply(cfg.band, alpha, y, cfg.trunc, cfg.weight);
  const SummabilityCertificates certs =
      summability_certificates(cfg.band, alpha, cfg.weight, cfg.p, cfg.trunc.m);

  json head = json::array();
  for (std::size_t n = 0; n < std::min<std::size_t>(16, x.size()); ++n) {
    head.push_back(json{{"re", x.entries[n].real()},
                        {"im", x.entries[n].imag()}});
  }
  json j{{"alpha", json{{"re", alpha.real()}, {"im", alpha.imag()}}},
         {"tail_ratio", eval.tail_ratio},
         {"tail_bound", eval.tail_bound},
         {"solution_head", head},
         {"solution_size", x.size()},
         {"certificates", to_json(certs)}};
  out << canonical(j);
  return 0;
}

int run_cesaro(const RunConfig& cfg, std::ostream& out) {
  const DecayTable table = cesaro_experiment(cfg.band, make_space(cfg),
                                             cfg.n_max, cfg.probes, cfg.trunc);
  write_artifact(cfg, decay_csv(table), out);
  if (!cfg.output_path.empty()) {
    out << canonical(json{{"rows", table.rows.size()},
                          {"consistent_with_verdicts",
                           table.consistent_with_verdicts},
                          {"csv", cfg.output_path}});
  }
  return 0;
}

int run_pseudospec(const RunConfig& cfg, std::ostream& out) {
  GridSpec spec = cfg.grid ? *cfg.grid : default_grid(cfg.band, cfg.weight);
  spec.weight = cfg.weight;
  const PseudoGrid grid = pseudo_grid(cfg.band, spec);
  write_artifact(cfg, grid_csv(grid), out);
  out << canonical(contour_json(grid));
  return 0;
}

// ---------------------------------------------------------------------------
// verify: deterministic property sweep

struct VerifyState {
  int passed = 0;
  int failed = 0;
  std::ostream& out;

  void check(const char* name, bool ok) {
    (ok ? passed : failed)++;
    out << (ok ? "pass" : "FAIL") << "  " << name << "\n";
  }
};

bool chain_consistent(const ErgodicReport& rep) {
  const auto no_contradiction = [](const TriState& strong,
                                   const TriState& weak) {
    return !(strong.verdict == Verdict::Holds &&
             weak.verdict == Verdict::Fails);
  };
  return no_contradiction(rep.power_bounded, rep.mean_ergodic) &&
         no_contradiction(rep.mean_ergodic, rep.cesaro_null) &&
         no_contradiction(rep.norm_powers_to_zero, rep.uniform_mean_ergodic) &&
         no_contradiction(rep.uniform_mean_ergodic, rep.mean_ergodic);
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyState st{0, 0, out};
  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  // Resolvent identity on random exterior points.
  {
    const BandParams b(1.0, -1.0);
    const WeightFamily v = WeightFamily::unit();
    const TruncationConfig tc{256, 1e-10};
    bool ok = true;
    for (int trial = 0; trial < 20; ++trial) {
      const double rad = 1.2 + 2.0 * unif(rng);
      const double ang = 2.0 * M_PI * unif(rng);
      const std::complex<double> alpha =
          std::complex<double>(1.0, 0.0) +
          std::polar(rad, ang);
      SeqVector y(tc.m);
      for (auto& e : y.entries) e = unif(rng) - 0.5;
      const SeqVector x = resolvent_apply(b, alpha, y, tc, v);
      for (std::size_t n = 0; n + 1 < tc.m; ++n) {
        const std::complex<double> lhs =
            (n > 0 ? b.s * x.entries[n - 1] : std::complex<double>(0.0)) +
            (b.r - alpha) * x.entries[n];
        if (std::abs(lhs - y.entries[n]) > 1e-10) ok = false;
      }
    }
    st.check("resolvent forward identity (20 random exterior points)", ok);
  }

  // Adjoint eigenvector identity inside the residual disk.
  {
    const BandParams b(1.0, -1.0);
    const WeightFamily v = WeightFamily::unit();
    bool ok = true;
    for (int trial = 0; trial < 20; ++trial) {
      const std::complex<double> alpha =
          std::complex<double>(1.0, 0.0) +
          std::polar(0.9 * unif(rng), 2.0 * M_PI * unif(rng));
      const AdjointEigenMembership mem =
          adjoint_eigen_membership(b, alpha, 2.0, v, 64);
      if (!mem.is_member() || !mem.eigenvector) {
        ok = false;
        continue;
      }
      const SeqVector& x = *mem.eigenvector;
      for (std::size_t n = 0; n + 1 < x.size(); ++n) {
        const std::complex<double> lhs =
            b.r * x.entries[n] + b.s * x.entries[n + 1];
        if (std::abs(lhs - alpha * x.entries[n]) >
            1e-12 * std::max(1.0, std::abs(alpha * x.entries[n]))) {
          ok = false;
        }
      }
    }
    st.check("adjoint eigenvector identity (20 interior points)", ok);
  }

  // sigma_min symmetry and monotonicity in the section size.
  {
    const BandParams b(1.0, -1.0);
    const WeightFamily v = WeightFamily::unit();
    bool ok = true;
    for (int trial = 0; trial < 5; ++trial) {
      const std::complex<double> alpha(0.4 + 1.6 * unif(rng),
                                       0.2 + unif(rng));
      const double plus = sigma_min(b, alpha, 120, v);
      const double minus = sigma_min(b, std::conj(alpha), 120, v);
      if (std::abs(plus - minus) > 1e-9 * std::max(1.0, plus)) ok = false;
      double prev = std::numeric_limits<double>::infinity();
      for (std::size_t m : {50u, 100u, 200u, 300u}) {
        const double val = sigma_min(b, alpha, m, v);
        if (val > prev * (1.0 + 1e-9)) ok = false;
        prev = val;
      }
    }
    st.check("sigma_min conjugate symmetry and section monotonicity", ok);
  }

  // Ergodic chain consistency across families.
  {
    bool ok = true;
    for (int i = 1; i <= 20 && ok; ++i) {
      for (int jdx = 1; jdx <= 20 && ok; ++jdx) {
        const double r = -1.5 + 3.0 * (i - 0.5) / 20.0;
        const double s = -1.5 + 3.0 * (jdx - 0.5) / 20.0;
        if (r == 0.0 || s == 0.0) continue;
        const BandParams b(r, s);
        ok = ok && chain_consistent(classify_ergodic(
                       b, SpaceDescriptor::lp(2.0, WeightFamily::unit())));
        const auto primal0 =
            validate_space(AlphaSequence::log_shift(), false);
        const auto primal1 =
            validate_space(AlphaSequence::affine(1.0, 1.0), false);
        const auto dual0 = validate_space(AlphaSequence::log_shift(), true);
        const auto dual1 = validate_space(AlphaSequence::affine(1.0, 1.0), true);
        for (const auto& sp : {primal0, primal1, dual0, dual1}) {
          ok = ok && chain_consistent(
                         classify_ergodic(b, SpaceDescriptor::power_series(sp)));
        }
      }
    }
    st.check("ergodic implication chains consistent on the (r,s) grid", ok);
  }

  // JSON canonical round-trip.
  {
    const FineSpectrum fs =
        fine_spectrum(BandParams(1.0, -1.0), 2.0, WeightFamily::unit());
    const std::string s1 = canonical(to_json(fs));
    const std::string s2 = canonical(json::parse(s1));
    st.check("classification JSON canonical round-trip", s1 == s2);
  }

  out << st.passed << " passed, " << st.failed << " failed\n";
  return st.failed == 0 ? 0 : 4;
}

}  // namespace

void apply_config_json(const json& doc, RunConfig& cfg) {
  if (doc.contains("command")) {
    cfg.command = command_from_string(doc["command"].get<std::string>());
  }
  if (doc.contains("band")) {
    cfg.band = BandParams(doc["band"].at("r").get<double>(),
                          doc["band"].at("s").get<double>());
  }
  if (doc.contains("space")) {
    const json& sp = doc["space"];
    const std::string kind = sp.at("kind").get<std::string>();
    if (kind == "lp") {
      cfg.kind = SpaceKind::Lp;
    } else if (kind == "lambda") {
      cfg.kind = SpaceKind::Lambda;
    } else if (kind == "lambda-dual") {
      cfg.kind = SpaceKind::LambdaDual;
    } else {
      throw std::invalid_argument("unknown space kind: " + kind);
    }
    if (sp.contains("p")) cfg.p = sp["p"].get<double>();
    if (sp.contains("weight")) cfg.weight = weight_from_json(sp["weight"]);
    if (sp.contains("alpha")) cfg.alpha = alpha_from_json(sp["alpha"]);
  }
  if (doc.contains("numeric")) {
    const json& nm = doc["numeric"];
    if (nm.contains("m")) cfg.trunc.m = nm["m"].get<std::size_t>();
    if (nm.contains("tol")) cfg.trunc.tol = nm["tol"].get<double>();
    if (nm.contains("n_max")) cfg.n_max = nm["n_max"].get<std::size_t>();
    if (nm.contains("probes")) {
      cfg.probes = nm["probes"].get<std::vector<std::size_t>>();
    }
    if (nm.contains("grades")) cfg.crosscheck_grades = nm["grades"].get<int>();
    if (nm.contains("seed")) cfg.seed = nm["seed"].get<unsigned>();
    if (nm.contains("grid")) {
      const json& g = nm["grid"];
      GridSpec spec;
      spec.lo = complex_from_json(g.at("lo"));
      spec.hi = complex_from_json(g.at("hi"));
      if (g.contains("nx")) spec.nx = g["nx"].get<std::size_t>();
      if (g.contains("ny")) spec.ny = g["ny"].get<std::size_t>();
      if (g.contains("m")) spec.m = g["m"].get<std::size_t>();
      cfg.grid = spec;
    }
  }
  if (doc.contains("point")) cfg.point = complex_from_json(doc["point"]);
  if (doc.contains("rhs")) {
    cfg.rhs.clear();
    for (const json& e : doc["rhs"]) cfg.rhs.push_back(complex_from_json(e));
  }
  if (doc.contains("output")) {
    cfg.output_path = doc["output"].get<std::string>();
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Classify:
        return run_classify(cfg, out);
      case Command::Ergodics:
        return run_ergodics(cfg, out);
      case Command::Resolve:
        return run_resolve(cfg, out);
      case Command::Cesaro:
        return run_cesaro(cfg, out);
      case Command::Pseudospec:
        return run_pseudospec(cfg, out);
      case Command::Verify:
        return run_verify(cfg, out);
    }
    err << "error: unknown command\n";
    return 2;
  } catch (const HypothesisFailure& e) {
    err << "hypothesis failure: " << e.what() << "\n";
    return 3;
  } catch (const ContinuityFailure& e) {
    err << "continuity failure: " << e.what() << "\n";
    return 3;
  } catch (const UnboundedRatio& e) {
    err << "continuity failure: " << e.what() << "\n";
    return 3;
  } catch (const AggregationViolation& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bandspec

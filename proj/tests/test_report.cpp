#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "bandspec/report.hpp"
#include "bandspec/run.hpp"

using namespace bandspec;

TEST_CASE("verdict and classification strings") {
  CHECK(std::string(to_string(Verdict::Holds)) == "holds");
  CHECK(std::string(to_string(Verdict::Fails)) == "fails");
  CHECK(std::string(to_string(Verdict::Undetermined)) == "undetermined");
  CHECK(std::string(to_string(SeriesVerdict::Converges)) == "converges");
  CHECK(std::string(to_string(PointClass::Residual)) == "residual");
  CHECK(std::string(to_string(PointClass::BoundaryUndetermined)) ==
        "boundary-undetermined");
  CHECK(std::string(to_string(RegionKind::WholePlane)) == "whole-plane");
}

TEST_CASE("classification JSON carries rules and the expected fields") {
  const FineSpectrum fs =
      fine_spectrum(BandParams(1.0, -1.0), 2.0, WeightFamily::unit());
  const json j = to_json(fs);
  for (const char* key :
       {"band", "p", "weight_ratios", "sigma", "point", "residual",
        "continuous", "waelbroeck", "adjoint_point_equals_residual"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["sigma"].contains("rule"));
  CHECK(j["residual"].contains("rule"));
  CHECK(j["sigma"]["radius"].get<double>() == doctest::Approx(1.0));
  CHECK(j["residual"]["boundary_circle"].get<std::string>() == "diverges");
  CHECK(j["weight_ratios"]["L"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("graded JSON records the space hypotheses") {
  const auto sp = validate_space(AlphaSequence::affine(1.0, 1.0), true);
  const GradedFineSpectrum g = graded_fine_spectrum(BandParams(2.0, 5.0), sp);
  const json j = to_json(g, sp);
  CHECK(j["space"]["dual"].get<bool>());
  CHECK(j["space"]["gap_limit"].get<double>() == doctest::Approx(1.0));
  CHECK(j["sigma"]["kind"].get<std::string>() == "singleton");
  CHECK(j.contains("rule"));
}

TEST_CASE("canonical serialization round-trips byte-identically") {
  const FineSpectrum fs =
      fine_spectrum(BandParams(0.5, 2.0), 3.0, WeightFamily::unit());
  json j = to_json(fs);
  j["norm_bounds"] = json{{"upper", 2.5}, {"lower_stated", 2.0}};
  const std::string s1 = canonical(j);
  const std::string s2 = canonical(json::parse(s1));
  CHECK(s1 == s2);
  CHECK(s1.back() == '\n');

  const ErgodicReport rep = classify_ergodic(
      BandParams(0.5, 0.5), SpaceDescriptor::lp(2.0, WeightFamily::unit()));
  const std::string e1 = canonical(to_json(rep));
  CHECK(e1 == canonical(json::parse(e1)));
}

TEST_CASE("CSV emitters: headers, row counts, full precision") {
  GridSpec spec;
  spec.lo = {0.0, -1.0};
  spec.hi = {2.0, 1.0};
  spec.nx = 7;
  spec.ny = 5;
  spec.m = 40;
  spec.weight = WeightFamily::unit();
  const PseudoGrid grid = pseudo_grid(BandParams(1.0, -1.0), spec);
  const std::string csv = grid_csv(grid);
  CHECK(csv.rfind("re,im,sigma_min\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 1 + spec.nx * spec.ny);
  // 17 significant digits survive a parse round-trip.
  std::istringstream rows(csv);
  std::string line;
  std::getline(rows, line);  // header
  std::getline(rows, line);
  const auto c1 = line.find(','), c2 = line.find(',', line.find(',') + 1);
  CHECK(std::stod(line.substr(0, c1)) == grid.point(0, 0).real());
  CHECK(std::stod(line.substr(c2 + 1)) == grid.value(0, 0));

  const DecayTable table = cesaro_experiment(
      BandParams(0.5, 0.5), SpaceDescriptor::lp(2.0, WeightFamily::unit()), 50,
      {0}, TruncationConfig{64, 1e-10});
  const std::string decay = decay_csv(table);
  CHECK(decay.rfind("n,probe,grade,cesaro_norm,power_over_n,"
                    "recurrence_residual\n",
                    0) == 0);
  lines = 0;
  for (char c : decay) lines += c == '\n';
  CHECK(lines == 1 + table.rows.size());
}

TEST_CASE("config JSON overrides the run request") {
  RunConfig cfg;
  const json doc = json::parse(R"({
    "command": "resolve",
    "band": {"r": 1.0, "s": -2.0},
    "space": {
      "kind": "lp",
      "p": 3.0,
      "weight": {"kind": "geometric", "base": 2.0,
                 "alpha": {"kind": "affine", "slope": 1.0}}
    },
    "numeric": {"m": 96, "tol": 1e-9, "n_max": 77, "probes": [0, 2],
                "grades": 5, "seed": 7,
                "grid": {"lo": [-1.0, -1.0], "hi": [3.0, 1.0], "nx": 11,
                         "ny": 9, "m": 30}},
    "point": {"re": 8.0, "im": 0.5},
    "rhs": [1.0, [0.0, 1.0]],
    "output": "artifact.csv"
  })");
  apply_config_json(doc, cfg);
  CHECK(cfg.command == Command::Resolve);
  CHECK(cfg.band.r == 1.0);
  CHECK(cfg.band.s == -2.0);
  CHECK(cfg.p == 3.0);
  CHECK(cfg.trunc.m == 96);
  CHECK(cfg.n_max == 77);
  CHECK(cfg.probes == std::vector<std::size_t>{0, 2});
  CHECK(cfg.crosscheck_grades == 5);
  CHECK(cfg.seed == 7);
  REQUIRE(cfg.grid.has_value());
  CHECK(cfg.grid->nx == 11);
  REQUIRE(cfg.point.has_value());
  CHECK(*cfg.point == std::complex<double>(8.0, 0.5));
  REQUIRE(cfg.rhs.size() == 2);
  CHECK(cfg.rhs[1] == std::complex<double>(0.0, 1.0));
  CHECK(cfg.output_path == "artifact.csv");

  CHECK_THROWS_AS(apply_config_json(json{{"command", "nonsense"}}, cfg),
                  std::invalid_argument);
}

TEST_CASE("run exit codes: success paths") {
  std::ostringstream out, err;

  RunConfig classify;
  classify.command = Command::Classify;
  classify.band = BandParams(1.0, -1.0);
  CHECK(run(classify, out, err) == 0);
  const json j = json::parse(out.str());
  CHECK(j["sigma"]["radius"].get<double>() == doctest::Approx(1.0));
  CHECK(j.contains("norm_bounds"));

  out.str("");
  RunConfig resolve;
  resolve.command = Command::Resolve;
  resolve.band = BandParams(1.0, -1.0);
  resolve.point = std::complex<double>(3.0, 0.0);
  resolve.trunc.m = 64;
  CHECK(run(resolve, out, err) == 0);
  const json rj = json::parse(out.str());
  CHECK(rj["tail_ratio"].get<double>() == doctest::Approx(0.5));
  CHECK(rj["certificates"]["both_finite"].get<bool>());

  out.str("");
  RunConfig graded;
  graded.command = Command::Classify;
  graded.band = BandParams(2.0, 5.0);
  graded.kind = SpaceKind::LambdaDual;
  graded.alpha = AlphaSequence::affine(1.0, 1.0);
  CHECK(run(graded, out, err) == 0);
  const json gj = json::parse(out.str());
  CHECK(gj["sigma"]["kind"].get<std::string>() == "singleton");
  CHECK(gj["grade_crosscheck"]["ok"].get<bool>());

  out.str("");
  RunConfig cesaro;
  cesaro.command = Command::Cesaro;
  cesaro.band = BandParams(0.5, 0.5);
  cesaro.n_max = 50;
  cesaro.probes = {0};
  cesaro.trunc.m = 64;
  CHECK(run(cesaro, out, err) == 0);
  CHECK(out.str().rfind("n,probe,grade,", 0) == 0);
}

TEST_CASE("run exit codes: validation and hypothesis failures") {
  std::ostringstream out, err;

  RunConfig no_point;
  no_point.command = Command::Resolve;
  CHECK(run(no_point, out, err) == 2);
  CHECK(err.str().rfind("error:", 0) == 0);

  err.str("");
  RunConfig inside;
  inside.command = Command::Resolve;
  inside.band = BandParams(1.0, -1.0);
  inside.point = std::complex<double>(1.5, 0.0);
  CHECK(run(inside, out, err) == 2);

  err.str("");
  RunConfig no_alpha;
  no_alpha.command = Command::Classify;
  no_alpha.kind = SpaceKind::Lambda;
  CHECK(run(no_alpha, out, err) == 2);

  err.str("");
  std::vector<double> vals{0.0};
  for (std::size_t i = 1; i < 64; ++i) {
    vals.push_back(vals.back() + (i % 2 == 0 ? 2.0 : 0.5));
  }
  RunConfig bad_space;
  bad_space.command = Command::Classify;
  bad_space.kind = SpaceKind::Lambda;
  bad_space.alpha = AlphaSequence::table(vals, 1.0);
  CHECK(run(bad_space, out, err) == 3);
  CHECK(err.str().rfind("hypothesis failure:", 0) == 0);

  err.str("");
  RunConfig unbounded;
  unbounded.command = Command::Classify;
  unbounded.band = BandParams(1.0, 1.0);
  unbounded.weight =
      WeightFamily::geometric_log(1000.0, AlphaSequence::affine(10.0, 0.0));
  CHECK(run(unbounded, out, err) == 3);
}

TEST_CASE("run verify reports per-property lines and succeeds") {
  std::ostringstream out, err;
  RunConfig verify;
  verify.command = Command::Verify;
  CHECK(run(verify, out, err) == 0);
  const std::string text = out.str();
  CHECK(text.find("FAIL") == std::string::npos);
  std::size_t passes = 0, pos = 0;
  while ((pos = text.find("pass", pos)) != std::string::npos) {
    ++passes;
    pos += 4;
  }
  CHECK(passes >= 5);  // per-property lines plus the summary
}

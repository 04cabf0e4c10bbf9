#include <cmath>
#include <vector>

#include "doctest.h"

#include "bandspec/ergodics.hpp"
#include "bandspec/grading.hpp"

using namespace bandspec;

namespace {

SpaceDescriptor l2_unit() {
  return SpaceDescriptor::lp(2.0, WeightFamily::unit());
}

bool chain_consistent(const ErgodicReport& rep) {
  const auto ok = [](const TriState& strong, const TriState& weak) {
    // An implication strong => weak is violated only by Holds before Fails.
    return !(strong.verdict == Verdict::Holds &&
             weak.verdict == Verdict::Fails);
  };
  return ok(rep.power_bounded, rep.mean_ergodic) &&
         ok(rep.mean_ergodic, rep.cesaro_null) &&
         ok(rep.norm_powers_to_zero, rep.uniform_mean_ergodic) &&
         ok(rep.uniform_mean_ergodic, rep.mean_ergodic) &&
         ok(rep.power_bounded, rep.cesaro_null);
}

}  // namespace

TEST_CASE("unweighted l2 verdicts at and below the threshold") {
  const ErgodicReport at = classify_ergodic(BandParams(0.5, 0.5), l2_unit());
  CHECK(at.power_bounded.verdict == Verdict::Holds);
  CHECK(at.mean_ergodic.verdict == Verdict::Holds);
  CHECK(at.cesaro_null.verdict == Verdict::Holds);
  CHECK(at.one_in_spectrum);
  CHECK(at.uniform_mean_ergodic.verdict == Verdict::Fails);

  const ErgodicReport below = classify_ergodic(BandParams(0.4, 0.5), l2_unit());
  CHECK(below.uniform_mean_ergodic.verdict == Verdict::Holds);
  CHECK(below.norm_powers_to_zero.verdict == Verdict::Holds);
  CHECK(below.supercyclic_excluded.verdict == Verdict::Holds);

  const ErgodicReport above = classify_ergodic(BandParams(1.0, -1.0), l2_unit());
  CHECK(above.power_bounded.verdict == Verdict::Fails);
  CHECK(above.mean_ergodic.verdict == Verdict::Fails);
  CHECK(above.norm_powers_to_zero.verdict == Verdict::Fails);
}

TEST_CASE("weighted lp band: Undetermined between the N and L thresholds") {
  // v_n = n+1: N = 2, L = L1 = 1.  r + s chosen so |r|+L|s| <= 1 < |r|+N|s|.
  const WeightFamily poly =
      WeightFamily::geometric(std::exp(1.0), AlphaSequence::log_shift());
  const ErgodicReport band = classify_ergodic(
      BandParams(0.3, 0.6), SpaceDescriptor::lp(2.0, poly));
  CHECK(band.power_bounded.verdict == Verdict::Undetermined);
  CHECK(band.mean_ergodic.verdict == Verdict::Undetermined);
  // |r|+L|s| = 0.9 < 1: uniform decay side still decided.
  CHECK(band.uniform_mean_ergodic.verdict == Verdict::Holds);
  CHECK(band.norm_powers_to_zero.verdict == Verdict::Holds);
  CHECK(chain_consistent(band));
}

TEST_CASE("supercyclicity verdict follows the liminf radius") {
  const ErgodicReport pos = classify_ergodic(BandParams(1.0, 1.0), l2_unit());
  CHECK(pos.supercyclic_excluded.verdict == Verdict::Holds);

  std::vector<double> values{1.0};
  for (std::size_t i = 1; i < 64; ++i) {
    values.push_back(values.back() * (i % 2 == 1 ? 2.0 : 0.01));
  }
  const WeightFamily osc = WeightFamily::table(values, 2.0, 2.0, 0.0);
  const ErgodicReport zero = classify_ergodic(
      BandParams(1.0, 1.0), SpaceDescriptor::lp(2.0, osc));
  CHECK(zero.supercyclic_excluded.verdict == Verdict::Undetermined);
}

TEST_CASE("graded space verdicts") {
  const auto entire = validate_space(AlphaSequence::affine(1.0, 1.0), false);
  const ErgodicReport growing = classify_ergodic(
      BandParams(0.1, 0.1), SpaceDescriptor::power_series(entire));
  CHECK(growing.power_bounded.verdict == Verdict::Fails);
  CHECK(growing.mean_ergodic.verdict == Verdict::Fails);
  CHECK(growing.uniform_mean_ergodic.verdict == Verdict::Fails);
  CHECK(growing.supercyclic_excluded.verdict == Verdict::Holds);
  CHECK(growing.one_in_spectrum);

  const auto smooth = validate_space(AlphaSequence::log_shift(), false);
  const ErgodicReport contracting = classify_ergodic(
      BandParams(0.4, 0.4), SpaceDescriptor::power_series(smooth));
  CHECK(contracting.power_bounded.verdict == Verdict::Holds);
  CHECK(contracting.norm_powers_to_zero.verdict == Verdict::Holds);
  const ErgodicReport expanding = classify_ergodic(
      BandParams(1.0, 1.0), SpaceDescriptor::power_series(smooth));
  CHECK(expanding.power_bounded.verdict == Verdict::Fails);
}

TEST_CASE("dual space verdicts") {
  const auto dual0 = validate_space(AlphaSequence::log_shift(), true);
  const ErgodicReport at = classify_ergodic(
      BandParams(0.5, 0.5), SpaceDescriptor::power_series(dual0));
  CHECK(at.power_bounded.verdict == Verdict::Holds);
  CHECK(at.uniform_mean_ergodic.verdict == Verdict::Holds);
  CHECK(at.mean_ergodic.verdict == Verdict::Holds);
  CHECK(at.cesaro_null.verdict == Verdict::Holds);
  CHECK(at.norm_powers_to_zero.verdict == Verdict::Undetermined);
  CHECK(at.supercyclic_excluded.verdict == Verdict::Holds);

  const ErgodicReport over = classify_ergodic(
      BandParams(0.9, 0.2), SpaceDescriptor::power_series(dual0));
  CHECK(over.power_bounded.verdict == Verdict::Fails);

  const auto dual1 = validate_space(AlphaSequence::affine(1.0, 1.0), true);
  const ErgodicReport banded = classify_ergodic(
      BandParams(0.9, 0.5), SpaceDescriptor::power_series(dual1));
  CHECK(banded.power_bounded.verdict == Verdict::Undetermined);
  CHECK(banded.supercyclic_excluded.verdict == Verdict::Undetermined);
  const ErgodicReport big = classify_ergodic(
      BandParams(1.5, 0.5), SpaceDescriptor::power_series(dual1));
  CHECK(big.power_bounded.verdict == Verdict::Fails);
  const ErgodicReport small = classify_ergodic(
      BandParams(0.4, 0.4), SpaceDescriptor::power_series(dual1));
  CHECK(small.power_bounded.verdict == Verdict::Holds);
}

TEST_CASE("threshold sharpness and chain consistency on the parameter grid") {
  const auto primal0 = validate_space(AlphaSequence::log_shift(), false);
  const auto primal1 = validate_space(AlphaSequence::affine(1.0, 1.0), false);
  const auto dual0 = validate_space(AlphaSequence::log_shift(), true);
  const auto dual1 = validate_space(AlphaSequence::affine(1.0, 1.0), true);
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double r = -1.5 + 3.0 * (i + 0.5) / 20.0;
      const double s = -1.5 + 3.0 * (j + 0.5) / 20.0;
      if (r == 0.0 || s == 0.0) continue;
      const BandParams b(r, s);

      const ErgodicReport rep = classify_ergodic(b, l2_unit());
      const Verdict want =
          std::abs(r) + std::abs(s) <= 1.0 ? Verdict::Holds : Verdict::Fails;
      CHECK(rep.power_bounded.verdict == want);
      CHECK(rep.mean_ergodic.verdict == want);
      CHECK(chain_consistent(rep));

      for (const auto& sp : {primal0, primal1, dual0, dual1}) {
        CHECK(chain_consistent(
            classify_ergodic(b, SpaceDescriptor::power_series(sp))));
      }
    }
  }
}

TEST_CASE("cesaro experiment decays when the verdict says it should") {
  const DecayTable good = cesaro_experiment(
      BandParams(0.5, 0.5), l2_unit(), 400, {0}, TruncationConfig{512, 1e-10});
  REQUIRE_FALSE(good.rows.empty());
  CHECK(good.consistent_with_verdicts);
  CHECK(good.rows.back().power_over_n < good.rows.front().power_over_n);
  for (const DecayRow& row : good.rows) {
    CHECK(row.recurrence_residual <= 1e-12);
  }

  const DecayTable bad = cesaro_experiment(
      BandParams(1.0, -1.0), l2_unit(), 200, {0}, TruncationConfig{256, 1e-10});
  CHECK(bad.consistent_with_verdicts);
  CHECK(bad.rows.back().power_over_n > 1.0);
}

TEST_CASE("cesaro experiment reports grade norms for the graded spaces") {
  const auto smooth = validate_space(AlphaSequence::log_shift(), false);
  const DecayTable table = cesaro_experiment(
      BandParams(0.4, 0.4), SpaceDescriptor::power_series(smooth), 100, {0, 3},
      TruncationConfig{128, 1e-10});
  bool saw_grades[4] = {false, false, false, false};
  for (const DecayRow& row : table.rows) {
    REQUIRE(row.grade >= 1);
    REQUIRE(row.grade <= 3);
    saw_grades[row.grade] = true;
  }
  CHECK(saw_grades[1]);
  CHECK(saw_grades[2]);
  CHECK(saw_grades[3]);
}

TEST_CASE("growth experiment approaches the spectral radius") {
  const double unit_rate = growth_experiment(
      BandParams(1.0, -1.0), WeightFamily::unit(), 2.0, 5000);
  CHECK(unit_rate == doctest::Approx(2.0).epsilon(0.02));

  const WeightFamily pow2 =
      WeightFamily::geometric(2.0, AlphaSequence::affine(1.0, 0.0));
  const double weighted_rate =
      growth_experiment(BandParams(1.0, 1.0), pow2, 2.0, 5000);
  CHECK(weighted_rate == doctest::Approx(3.0).epsilon(0.02));

  const WeightFamily poly =
      WeightFamily::geometric(std::exp(1.0), AlphaSequence::log_shift());
  const double poly_rate =
      growth_experiment(BandParams(1.0, 1.0), poly, 2.0, 5000);
  CHECK(poly_rate == doctest::Approx(2.0).epsilon(0.02));
}

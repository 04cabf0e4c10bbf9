#pragma once

#include <string>
#include <variant>
#include <vector>

#include "bandspec/band_operator.hpp"
#include "bandspec/grading.hpp"
#include "bandspec/weights.hpp"

namespace bandspec {

enum class Verdict { Holds, Fails, Undetermined };

// Tri-state verdict with the witnessing inequality; Undetermined marks the
// band where the available implications run in one direction only.
struct TriState {
  Verdict verdict = Verdict::Undetermined;
  std::string rule;
};

struct WeightedLpSpace {
  double p;
  WeightFamily weight;
};

// Which space B(r,s) acts on.
struct SpaceDescriptor {
  std::variant<WeightedLpSpace, PowerSeriesSpace> space;

  static SpaceDescriptor lp(double p, WeightFamily v) {
    return SpaceDescriptor{WeightedLpSpace{p, std::move(v)}};
  }
  static SpaceDescriptor power_series(PowerSeriesSpace sp) {
    return SpaceDescriptor{std::move(sp)};
  }
  const WeightedLpSpace* as_lp() const {
    return std::get_if<WeightedLpSpace>(&space);
  }
  const PowerSeriesSpace* as_power_series() const {
    return std::get_if<PowerSeriesSpace>(&space);
  }
};

struct ErgodicReport {
  TriState power_bounded;
  TriState mean_ergodic;
  TriState uniform_mean_ergodic;
  TriState cesaro_null;           // B^n/n -> 0 pointwise
  TriState norm_powers_to_zero;   // B^n -> 0 in operator norm
  bool one_in_spectrum;
  TriState supercyclic_excluded;
};

ErgodicReport classify_ergodic(const BandParams& b,
                               const SpaceDescriptor& space);

// Numerical decay table for Cesaro means and normalized powers along basis
// probes, in the space's norm (grade norms for the graded spaces).
struct DecayRow {
  std::size_t n;
  std::size_t probe;
  int grade;  // 0 for lp(v)
  double cesaro_norm;
  double power_over_n;
  double recurrence_residual;  // B^n x/n vs difference of Cesaro means
};

struct DecayTable {
  std::vector<DecayRow> rows;
  bool consistent_with_verdicts;
};

DecayTable cesaro_experiment(const BandParams& b, const SpaceDescriptor& space,
                             std::size_t n_max,
                             const std::vector<std::size_t>& probes,
                             const TruncationConfig& cfg = {});

// ||B^n e_0||_{p,v}^{1/n} at n = n_max, computed in the log domain.
double growth_experiment(const BandParams& b, const WeightFamily& v, double p,
                         std::size_t n_max);

}  // namespace bandspec

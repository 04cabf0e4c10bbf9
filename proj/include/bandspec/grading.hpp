#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "bandspec/band_operator.hpp"
#include "bandspec/spectra.hpp"
#include "bandspec/weights.hpp"

namespace bandspec {

// The graded sequence space cut out by the weights e^{k alpha_n}: the
// projective intersection of l2(v_k) over k (primal) or the inductive union
// of l2(1/v_k) (dual), with the hypotheses of the graded spectral theory
// validated at construction.
struct PowerSeriesSpace {
  AlphaSequence alpha;
  double l;  // lim (alpha_{n+1} - alpha_n)
  std::optional<double> log_bound_c;  // alpha_n >= c log(n+1) when l = 0
  bool nuclear;
  bool dual;
};

// Throws HypothesisFailure when the gap limit is absent (tabulated data) or a
// primal space with l = 0 lacks a logarithmic lower bound on alpha.
PowerSeriesSpace validate_space(const AlphaSequence& alpha, bool dual);

enum class RegionKind { Empty, OpenDisk, ClosedDisk, Circle, Singleton, WholePlane };

struct SpectralRegion {
  RegionKind kind = RegionKind::Empty;
  std::complex<double> center{0.0, 0.0};
  double radius = 0.0;

  static SpectralRegion empty() { return {}; }
  static SpectralRegion whole_plane() { return {RegionKind::WholePlane}; }
  static SpectralRegion singleton(std::complex<double> z) {
    return {RegionKind::Singleton, z, 0.0};
  }
  static SpectralRegion closed_disk(std::complex<double> c, double rad) {
    return {RegionKind::ClosedDisk, c, rad};
  }
  static SpectralRegion open_disk(std::complex<double> c, double rad) {
    return {RegionKind::OpenDisk, c, rad};
  }
  static SpectralRegion circle(std::complex<double> c, double rad) {
    return {RegionKind::Circle, c, rad};
  }

  bool operator==(const SpectralRegion&) const = default;
};

struct GradedFineSpectrum {
  SpectralRegion sigma;
  SpectralRegion point;  // always empty
  SpectralRegion residual;
  SpectralRegion continuous;
  SpectralRegion waelbroeck;  // equals sigma in every covered case
};

GradedFineSpectrum graded_fine_spectrum(const BandParams& b,
                                        const PowerSeriesSpace& sp);

// Per-grade fine spectra cross-checked against the graded answer via the
// projective-union / inductive-tail-intersection aggregation rules.
struct GradeCheck {
  int k;
  double N_k;
  double L_k;
  double radius;  // per-grade spectrum radius, e^{+-kl}|s|
};

struct CrosscheckReport {
  std::vector<GradeCheck> grades;
  bool ok;
  std::string detail;
};

// Throws AggregationViolation when a per-grade spectrum contradicts the
// aggregation inclusion.
CrosscheckReport per_grade_crosscheck(const BandParams& b,
                                      const PowerSeriesSpace& sp, int k_max);

}  // namespace bandspec

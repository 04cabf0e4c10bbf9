#include "bandspec/grading.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bandspec/errors.hpp"

namespace bandspec {

namespace {
constexpr double kGapCheckRelTol = 0.05;
constexpr double kGapCheckAbsTol = 0.05;
constexpr double kRadiusRelTol = 1e-9;

void check_table_gap_limit(const AlphaSequence& alpha) {
  const auto* t = alpha.as_table();
  if (t == nullptr) return;
  const double l = t->declared_l;
  const std::size_t n_gaps = t->values.size() - 1;
  const std::size_t tail_len =
      std::max<std::size_t>(1, static_cast<std::size_t>(0.25 * n_gaps));
  const double tol = l > 0.0 ? kGapCheckRelTol * l : kGapCheckAbsTol;
  for (std::size_t i = n_gaps - tail_len; i < n_gaps; ++i) {
    const double gap = t->values[i + 1] - t->values[i];
    if (std::abs(gap - l) > tol) {
      throw HypothesisFailure(
          "tabulated alpha gaps do not settle at the declared limit; "
          "lim (alpha_{n+1} - alpha_n) must exist");
    }
  }
}
}  // namespace

PowerSeriesSpace validate_space(const AlphaSequence& alpha, bool dual) {
  check_table_gap_limit(alpha);
  const double l = alpha.limit_gap();

  if (alpha.is_table() && l == 0.0) {
    throw HypothesisFailure(
        "tabulated alpha with zero gap limit is eventually constant and "
        "cannot tend to infinity");
  }

  std::optional<double> c;
  if (alpha.is_log_shift()) {
    c = 1.0;  // alpha_n = log(n+1) exactly
  } else if (l > 0.0) {
    // A positive gap limit makes the logarithmic lower bound automatic;
    // record the sampled constant.
    double c_min = std::numeric_limits<double>::infinity();
    for (std::size_t n = 1; n <= 1024; ++n) {
      c_min = std::min(c_min, alpha.value(n) / std::log(static_cast<double>(n) + 1.0));
    }
    c = c_min;
  }
  if (!dual && l == 0.0 && !c.has_value()) {
    throw HypothesisFailure(
        "primal space with gap limit 0 requires alpha_n >= c log(n+1)");
  }

  const bool nuclear = alpha.is_log_shift() || l > 0.0;
  return PowerSeriesSpace{alpha, l, c, nuclear, dual};
}

GradedFineSpectrum graded_fine_spectrum(const BandParams& b,
                                        const PowerSeriesSpace& sp) {
  const std::complex<double> center(b.r, 0.0);
  const double as = std::abs(b.s);
  GradedFineSpectrum g;
  g.point = SpectralRegion::empty();
  if (!sp.dual) {
    if (sp.l == 0.0) {
      g.sigma = SpectralRegion::closed_disk(center, as);
      g.residual = g.sigma;
      g.continuous = SpectralRegion::empty();
    } else {
      g.sigma = SpectralRegion::whole_plane();
      g.residual = g.sigma;
      g.continuous = SpectralRegion::empty();
    }
  } else {
    if (sp.l == 0.0) {
      g.sigma = SpectralRegion::closed_disk(center, as);
      g.residual = SpectralRegion::open_disk(center, as);
      g.continuous = SpectralRegion::circle(center, as);
    } else {
      g.sigma = SpectralRegion::singleton(center);
      g.residual = g.sigma;
      g.continuous = SpectralRegion::empty();
    }
  }
  g.waelbroeck = g.sigma;
  return g;
}

CrosscheckReport per_grade_crosscheck(const BandParams& b,
                                      const PowerSeriesSpace& sp, int k_max) {
  if (k_max < 2) throw std::invalid_argument("k_max must be >= 2");
  const GradedFineSpectrum graded = graded_fine_spectrum(b, sp);
  const double as = std::abs(b.s);

  CrosscheckReport report;
  report.ok = true;
  for (int k = 1; k <= k_max; ++k) {
    WeightFamily w = grade_weight(sp.alpha, k);
    if (sp.dual) w = w.reciprocal();
    const FineSpectrum fs = fine_spectrum(b, 2.0, w);
    const RatioAsymptotics ra = ratio_asymptotics(w);
    const double sign = sp.dual ? -1.0 : 1.0;
    const double expected = std::exp(sign * k * sp.l) * as;
    report.grades.push_back(GradeCheck{k, ra.N, ra.L, fs.sigma.radius});
    if (std::abs(fs.sigma.radius - expected) >
        kRadiusRelTol * std::max(1.0, expected)) {
      throw AggregationViolation(
          "grade " + std::to_string(k) + " spectrum radius " +
          std::to_string(fs.sigma.radius) + " differs from e^{" +
          (sp.dual ? "-" : "+") + "kl}|s| = " + std::to_string(expected));
    }
  }

  const auto radius_at = [&](int i) { return report.grades[i].radius; };
  const int n = static_cast<int>(report.grades.size());
  if (!sp.dual) {
    if (graded.sigma.kind == RegionKind::ClosedDisk) {
      // Projective aggregation: sigma must lie inside every finite union,
      // and with l = 0 every grade reproduces the same disk.
      for (int i = 0; i < n; ++i) {
        if (std::abs(radius_at(i) - graded.sigma.radius) >
            kRadiusRelTol * std::max(1.0, graded.sigma.radius)) {
          throw AggregationViolation(
              "primal grade disk differs from the graded spectrum disk");
        }
      }
      report.detail = "all grades reproduce the spectrum disk";
    } else {
      for (int i = 0; i + 1 < n; ++i) {
        if (!(radius_at(i + 1) > radius_at(i))) {
          throw AggregationViolation(
              "primal grade radii must grow when l > 0 (union exhausts C)");
        }
      }
      report.detail = "grade radii grow geometrically; union exhausts C";
    }
  } else {
    if (graded.sigma.kind == RegionKind::ClosedDisk) {
      for (int i = 0; i < n; ++i) {
        if (graded.sigma.radius >
            radius_at(i) + kRadiusRelTol * std::max(1.0, radius_at(i))) {
          throw AggregationViolation(
              "dual graded spectrum escapes a tail union of grade disks");
        }
      }
      report.detail = "all grades reproduce the spectrum disk";
    } else {
      // Singleton {r}: contained in every grade disk (common center), and the
      // radii must shrink so the tail intersection collapses to the center.
      for (int i = 0; i + 1 < n; ++i) {
        if (!(radius_at(i + 1) < radius_at(i))) {
          throw AggregationViolation(
              "dual grade radii must shrink when l > 0 (tails pinch to {r})");
        }
      }
      report.detail = "grade radii shrink geometrically; tails pinch to {r}";
    }
  }
  return report;
}

}  // namespace bandspec

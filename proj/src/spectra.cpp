#include "bandspec/spectra.hpp"

#include <cmath>

#include "bandspec/errors.hpp"

namespace bandspec {

namespace {
constexpr double kCircleRelTol = 1e-12;

bool on_circle(double dist, double radius) {
  return std::abs(dist - radius) <= kCircleRelTol * std::max(1.0, radius);
}
}  // namespace

FineSpectrum fine_spectrum(const BandParams& b, double p,
                           const WeightFamily& v) {
  ConjugateExponent check_p(p);
  (void)check_p;
  RatioAsymptotics ra;
  try {
    ra = ratio_asymptotics(v);
  } catch (const UnboundedRatio& e) {
    throw ContinuityFailure(std::string("B(r,s) is not continuous on lp(v): ") +
                            e.what());
  }
  const double as = std::abs(b.s);
  const std::complex<double> center(b.r, 0.0);
  return FineSpectrum{
      b,
      p,
      ra,
      Disk{center, ra.L * as},
      Disk{center, ra.L1 * as},
      boundary_series_test(v, p, ra.L1),
  };
}

PointClass classify_point(const FineSpectrum& fs, std::complex<double> alpha) {
  const double dist = std::abs(alpha - fs.sigma.center);
  if (on_circle(dist, fs.residual_inner.radius)) {
    switch (fs.boundary_rule) {
      case SeriesVerdict::Converges:
        return PointClass::Residual;
      case SeriesVerdict::Diverges:
        return PointClass::Continuous;
      case SeriesVerdict::Undetermined:
        return PointClass::BoundaryUndetermined;
    }
  }
  if (dist > fs.sigma.radius) return PointClass::Resolvent;
  if (dist < fs.residual_inner.radius) return PointClass::Residual;
  return PointClass::Continuous;
}

AdjointEigenMembership adjoint_eigen_membership(const BandParams& b,
                                                std::complex<double> alpha,
                                                double p, const WeightFamily& v,
                                                std::size_t m) {
  const std::complex<double> q =
      (alpha - std::complex<double>(b.r, 0.0)) / b.s;
  const SeriesVerdict verdict = boundary_series_test(v, p, std::abs(q));
  AdjointEigenMembership result{verdict, std::nullopt};
  if (verdict == SeriesVerdict::Converges) {
    SeqVector x(m, TailFlag::Unknown);
    std::complex<double> power = 1.0;
    for (std::size_t n = 0; n < m; ++n) {
      x.entries[n] = power;
      power *= q;
    }
    result.eigenvector = std::move(x);
  }
  return result;
}

double spectral_radius(const BandParams& b, const WeightFamily& v) {
  const RatioAsymptotics ra = ratio_asymptotics(v);
  return std::abs(b.r) + ra.L * std::abs(b.s);
}

}  // namespace bandspec

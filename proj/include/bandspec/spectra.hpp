#pragma once

#include <complex>
#include <optional>

#include "bandspec/band_operator.hpp"
#include "bandspec/weights.hpp"

namespace bandspec {

struct Disk {
  std::complex<double> center;
  double radius;

  bool contains_closed(std::complex<double> z) const {
    return std::abs(z - center) <= radius;
  }
};

enum class PointClass { Resolvent, Residual, Continuous, BoundaryUndetermined };

// Closed-form fine spectrum of B(r,s) on lp(v): the spectrum is the closed
// L|s|-disk about r, the point spectrum is empty, the residual part is the
// L1|s|-disk whose boundary circle belongs to it exactly when the geometric
// adjoint eigenvector is p'-summable against 1/v.
struct FineSpectrum {
  BandParams band;
  double p;
  RatioAsymptotics ratios;
  Disk sigma;                  // closed disk, radius L|s|
  Disk residual_inner;         // open disk, radius L1|s|
  SeriesVerdict boundary_rule;  // series test at rho = L1
  bool point_spectrum_empty = true;
  bool adjoint_point_equals_residual = true;
  bool waelbroeck_equals_sigma = true;
};

// Throws ContinuityFailure when the weight ratio is unbounded.
FineSpectrum fine_spectrum(const BandParams& b, double p,
                           const WeightFamily& v);

PointClass classify_point(const FineSpectrum& fs, std::complex<double> alpha);

// Membership of the geometric sequence ((alpha - r)/s)^n in l_{p'}(1/v);
// when it holds, carries the truncated eigenvector of the adjoint.
struct AdjointEigenMembership {
  SeriesVerdict series;
  std::optional<SeqVector> eigenvector;

  bool is_member() const { return series == SeriesVerdict::Converges; }
  bool undetermined() const { return series == SeriesVerdict::Undetermined; }
};

AdjointEigenMembership adjoint_eigen_membership(const BandParams& b,
                                                std::complex<double> alpha,
                                                double p, const WeightFamily& v,
                                                std::size_t m = 512);

// |r| + L|s|.
double spectral_radius(const BandParams& b, const WeightFamily& v);

}  // namespace bandspec

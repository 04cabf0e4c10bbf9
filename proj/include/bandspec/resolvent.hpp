#pragma once

#include <complex>

#include "bandspec/band_operator.hpp"
#include "bandspec/weights.hpp"

namespace bandspec {

// Lower-triangular Toeplitz kernel of (B(r,s) - alpha I)^{-1}:
// offset-j coefficient d_j = (-s)^j / (r - alpha)^{j+1}.
struct ResolventEvaluation {
  std::complex<double> alpha;
  double r;
  double s;
  double tail_ratio;  // q = L|s| / |r - alpha|, < 1 by construction
  double tail_bound;  // geometric bound on the dropped kernel mass

  std::complex<double> kernel(std::size_t j) const;
};

// Validates |r - alpha| > L|s| and packages the kernel.
// Throws SpectrumViolation when alpha lies in the predicted spectrum disk.
ResolventEvaluation make_resolvent(const BandParams& b,
                                   std::complex<double> alpha,
                                   const WeightFamily& v);

// Solves (B - alpha I) x = y by the forward recurrence
// x_n = (y_n - s x_{n-1}) / (r - alpha); exact on indices < m.
SeqVector resolvent_apply(const BandParams& b, std::complex<double> alpha,
                          const SeqVector& y, const TruncationConfig& cfg,
                          const WeightFamily& v);

// Row/column sup-sum certificates for the inverse acting on l_1(v) and
// l_inf(v); partial sums up to the horizon plus a geometric tail bound once
// the empirical weight ratio enters the 5% band around L.
struct SummabilityCertificates {
  double row_sup;
  double col_sup;
  bool both_finite;
  bool tail_bounded;  // whether the tail bound was claimable at the horizon
};

SummabilityCertificates summability_certificates(const BandParams& b,
                                                 std::complex<double> alpha,
                                                 const WeightFamily& v, double p,
                                                 std::size_t horizon);

}  // namespace bandspec

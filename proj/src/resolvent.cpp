#include "bandspec/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bandspec/errors.hpp"

namespace bandspec {

namespace {
constexpr double kRatioBand = 0.05;  // empirical ratio band around L

void check_exterior(const BandParams& b, std::complex<double> alpha, double L) {
  const double dist = std::abs(std::complex<double>(b.r, 0.0) - alpha);
  if (!(dist > L * std::abs(b.s))) {
    throw SpectrumViolation(
        "alpha lies in the predicted spectrum disk: |r - alpha| = " +
        std::to_string(dist) + " <= L|s| = " + std::to_string(L * std::abs(b.s)));
  }
}
}  // namespace

std::complex<double> ResolventEvaluation::kernel(std::size_t j) const {
  const std::complex<double> d(r - alpha.real(), -alpha.imag());
  return std::pow(std::complex<double>(-s, 0.0), static_cast<double>(j)) /
         std::pow(d, static_cast<double>(j) + 1.0);
}

ResolventEvaluation make_resolvent(const BandParams& b,
                                   std::complex<double> alpha,
                                   const WeightFamily& v) {
  const RatioAsymptotics ra = ratio_asymptotics(v);
  check_exterior(b, alpha, ra.L);
  const double dist = std::abs(std::complex<double>(b.r, 0.0) - alpha);
  const double q = ra.L * std::abs(b.s) / dist;
  const double lead = 1.0 / dist;
  return ResolventEvaluation{alpha, b.r, b.s, q, lead * q / (1.0 - q)};
}

SeqVector resolvent_apply(const BandParams& b, std::complex<double> alpha,
                          const SeqVector& y, const TruncationConfig& cfg,
                          const WeightFamily& v) {
  (void)cfg;
  make_resolvent(b, alpha, v);  // validates the strict-exterior precondition
  const std::complex<double> d = std::complex<double>(b.r, 0.0) - alpha;
  SeqVector x(y.size(), TailFlag::Unknown);
  x.log_scale = y.log_scale;
  std::complex<double> prev = 0.0;
  for (std::size_t n = 0; n < y.size(); ++n) {
    prev = (y.entries[n] - b.s * prev) / d;
    x.entries[n] = prev;
  }
  return x;
}

SummabilityCertificates summability_certificates(const BandParams& b,
                                                 std::complex<double> alpha,
                                                 const WeightFamily& v, double p,
                                                 std::size_t horizon) {
  ConjugateExponent check_p(p);
  (void)check_p;
  const RatioAsymptotics ra = ratio_asymptotics(v);
  check_exterior(b, alpha, ra.L);
  const double dist = std::abs(std::complex<double>(b.r, 0.0) - alpha);
  const double q0 = std::abs(b.s) / dist;     // per-offset kernel decay
  const double q = ra.L * q0;                 // with the limsup weight growth

  // First index past which the empirical ratio stays inside the 5% band.
  std::size_t band_start = horizon + 1;
  for (std::size_t n = 0; n <= horizon; ++n) {
    if (std::abs(v.ratio(n) - ra.L) <= kRatioBand * ra.L) {
      bool stable = true;
      for (std::size_t j = n; j < std::min(n + 16, horizon); ++j) {
        if (std::abs(v.ratio(j) - ra.L) > kRatioBand * ra.L) {
          stable = false;
          break;
        }
      }
      if (stable) {
        band_start = n;
        break;
      }
    }
  }
  const double q_eff = q * (1.0 + kRatioBand);
  const bool tail_claimable = band_start <= horizon && q_eff < 1.0;

  double row_sup = 0.0;
  for (std::size_t k = 0; k <= horizon; ++k) {
    double sum = 0.0;
    double last_term = 0.0;
    const double log_vk = v.log_value(k);
    for (std::size_t l = 0; l <= horizon; ++l) {
      last_term = std::exp(static_cast<double>(l) * std::log(q0) +
                           v.log_value(k + l) - log_vk) /
                  dist;
      sum += last_term;
    }
    if (tail_claimable) sum += last_term * q_eff / (1.0 - q_eff);
    row_sup = std::max(row_sup, sum);
  }

  double col_sup = 0.0;
  for (std::size_t n = 0; n <= horizon; ++n) {
    double sum = 0.0;
    const double log_vn = v.log_value(n);
    for (std::size_t l = 0; l <= n; ++l) {
      sum += std::exp(static_cast<double>(l) * std::log(q0) + log_vn -
                      v.log_value(n - l)) /
             dist;
    }
    col_sup = std::max(col_sup, sum);
  }

  return SummabilityCertificates{row_sup, col_sup, q < 1.0, tail_claimable};
}

}  // namespace bandspec

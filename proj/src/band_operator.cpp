#include "bandspec/band_operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bandspec {

BandParams::BandParams(double r_in, double s_in) : r(r_in), s(s_in) {
  if (r == 0.0 || s == 0.0 || !std::isfinite(r) || !std::isfinite(s)) {
    throw std::invalid_argument("band parameters r, s must be nonzero reals");
  }
}

SeqVector apply(const BandParams& b, const SeqVector& x) {
  const std::size_t m = x.size();
  SeqVector y(m);
  y.log_scale = x.log_scale;
  std::complex<double> prev = 0.0;
  for (std::size_t n = 0; n < m; ++n) {
    y.entries[n] = b.s * prev + b.r * x.entries[n];
    prev = x.entries[n];
  }
  // The forward influence s*x_{m-1} onto index m is dropped.
  const bool tail_exact =
      x.zero_tail() && (m == 0 || x.entries[m - 1] == std::complex<double>(0.0));
  y.tail = tail_exact ? TailFlag::Zero : TailFlag::Unknown;
  return y;
}

SeqVector apply_adjoint(const BandParams& b, const SeqVector& x) {
  const std::size_t m = x.size();
  SeqVector y(m);
  y.log_scale = x.log_scale;
  for (std::size_t n = 0; n < m; ++n) {
    const std::complex<double> next =
        (n + 1 < m) ? x.entries[n + 1] : std::complex<double>(0.0);
    y.entries[n] = b.r * x.entries[n] + b.s * next;
  }
  // The last entry uses the unknown x_m unless the tail is asserted zero.
  y.tail = x.tail;
  return y;
}

SeqVector power_column(const BandParams& b, std::size_t n) {
  SeqVector col(n + 1);
  if (n == 0) {
    col.entries[0] = 1.0;
    return col;
  }
  const double log_r = std::log(std::abs(b.r));
  const double log_s = std::log(std::abs(b.s));
  const double lg_n = std::lgamma(static_cast<double>(n) + 1.0);

  std::vector<double> log_mag(n + 1);
  std::vector<double> sign(n + 1);
  double max_log = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k <= n; ++k) {
    const double dk = static_cast<double>(k);
    const double dnk = static_cast<double>(n - k);
    log_mag[k] = lg_n - std::lgamma(dk + 1.0) - std::lgamma(dnk + 1.0) +
                 dnk * log_r + dk * log_s;
    double sg = 1.0;
    if (b.r < 0.0 && ((n - k) % 2 == 1)) sg = -sg;
    if (b.s < 0.0 && (k % 2 == 1)) sg = -sg;
    sign[k] = sg;
    max_log = std::max(max_log, log_mag[k]);
  }
  col.log_scale = max_log;
  for (std::size_t k = 0; k <= n; ++k) {
    col.entries[k] = sign[k] * std::exp(log_mag[k] - max_log);
  }
  return col;
}

SeqVector cesaro_apply(const BandParams& b, std::size_t n, const SeqVector& x) {
  if (n < 1) throw std::invalid_argument("cesaro_apply requires n >= 1");
  SeqVector cur = x;
  SeqVector sum(x.size());
  sum.log_scale = x.log_scale;
  sum.tail = x.tail;
  for (std::size_t j = 1; j <= n; ++j) {
    cur = apply(b, cur);
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum.entries[i] += cur.entries[i];
    }
    if (!cur.zero_tail()) sum.tail = TailFlag::Unknown;
  }
  const double inv = 1.0 / static_cast<double>(n);
  for (auto& e : sum.entries) e *= inv;
  return sum;
}

std::vector<double> LowerBidiagonal::apply(const std::vector<double>& x) const {
  std::vector<double> y(size, 0.0);
  for (std::size_t n = 0; n < size && n < x.size(); ++n) {
    y[n] += diag * x[n];
    if (n + 1 < size) y[n + 1] += sub * x[n];
  }
  return y;
}

LowerBidiagonal finite_section(const BandParams& b, std::size_t m) {
  if (m < 1) throw std::invalid_argument("section size must be >= 1");
  return LowerBidiagonal{b.r, b.s, m};
}

NormBounds operator_norm_bounds(const BandParams& b, double p,
                                const RatioAsymptotics& ra) {
  const ConjugateExponent ce(p);
  const double ar = std::abs(b.r);
  const double as = std::abs(b.s);
  NormBounds nb;
  nb.lower_stated = std::pow(std::pow(ar, p) + ra.N * std::pow(as, p), 1.0 / p);
  nb.lower_quotient =
      std::pow(std::pow(ar, p) + std::pow(ra.N * as, p), 1.0 / p);
  nb.upper = ar + ra.N * as;
  nb.bounds_disagree =
      std::abs(nb.lower_quotient - nb.lower_stated) >
      1e-12 * std::max(1.0, nb.lower_quotient);
  return nb;
}

}  // namespace bandspec

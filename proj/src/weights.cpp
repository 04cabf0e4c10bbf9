#include "bandspec/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bandspec {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLinearLogRange = 300.0;
constexpr double kBoundaryBandRelTol = 1e-12;
// Exponent margin around the p-series threshold for tail-fit decisions.
constexpr double kSlopeFitMargin = 0.25;
constexpr std::size_t kSlopeFitMinPoints = 8;
}  // namespace

// ---------------------------------------------------------------------------
// AlphaSequence

AlphaSequence AlphaSequence::affine(double slope, double offset) {
  if (!(slope > 0.0) || !(offset >= 0.0)) {
    throw std::invalid_argument("affine alpha requires slope > 0, offset >= 0");
  }
  return AlphaSequence(Affine{slope, offset});
}

AlphaSequence AlphaSequence::log_shift() { return AlphaSequence(LogShift{}); }

AlphaSequence AlphaSequence::table(std::vector<double> values,
                                   double declared_l) {
  if (values.size() < 2) {
    throw std::invalid_argument("alpha table needs at least two values");
  }
  if (!(values.front() >= 0.0)) {
    throw std::invalid_argument("alpha table values must be non-negative");
  }
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (!(values[i + 1] > values[i])) {
      throw std::invalid_argument("alpha table values must be increasing");
    }
  }
  if (!(declared_l >= 0.0) || !std::isfinite(declared_l)) {
    throw std::invalid_argument("declared gap limit must be finite and >= 0");
  }
  return AlphaSequence(Table{std::move(values), declared_l});
}

double AlphaSequence::value(std::size_t n) const {
  if (const auto* a = std::get_if<Affine>(&v_)) {
    return a->slope * static_cast<double>(n) + a->offset;
  }
  if (std::holds_alternative<LogShift>(v_)) {
    return std::log(static_cast<double>(n) + 1.0);
  }
  const auto& t = std::get<Table>(v_);
  if (n < t.values.size()) return t.values[n];
  const double past = static_cast<double>(n - (t.values.size() - 1));
  return t.values.back() + t.declared_l * past;
}

double AlphaSequence::gap(std::size_t n) const {
  if (const auto* a = std::get_if<Affine>(&v_)) return a->slope;
  if (std::holds_alternative<LogShift>(v_)) {
    return std::log1p(1.0 / (static_cast<double>(n) + 1.0));
  }
  return value(n + 1) - value(n);
}

double AlphaSequence::limit_gap() const {
  if (const auto* a = std::get_if<Affine>(&v_)) return a->slope;
  if (std::holds_alternative<LogShift>(v_)) return 0.0;
  return std::get<Table>(v_).declared_l;
}

double AlphaSequence::sup_gap() const {
  if (const auto* a = std::get_if<Affine>(&v_)) return a->slope;
  if (std::holds_alternative<LogShift>(v_)) return std::log(2.0);
  const auto& t = std::get<Table>(v_);
  double g = t.declared_l;
  for (std::size_t i = 0; i + 1 < t.values.size(); ++i) {
    g = std::max(g, t.values[i + 1] - t.values[i]);
  }
  return g;
}

double AlphaSequence::inf_gap() const {
  if (const auto* a = std::get_if<Affine>(&v_)) return a->slope;
  if (std::holds_alternative<LogShift>(v_)) return 0.0;
  const auto& t = std::get<Table>(v_);
  double g = t.declared_l;
  for (std::size_t i = 0; i + 1 < t.values.size(); ++i) {
    g = std::min(g, t.values[i + 1] - t.values[i]);
  }
  return g;
}

bool AlphaSequence::closed_form() const {
  return !std::holds_alternative<Table>(v_);
}

// ---------------------------------------------------------------------------
// ConjugateExponent

ConjugateExponent::ConjugateExponent(double p_in) : p(p_in) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("p must lie in (1, inf)");
  }
  p_prime = p / (p - 1.0);
}

// ---------------------------------------------------------------------------
// WeightFamily

WeightFamily WeightFamily::unit() { return WeightFamily(Unit{}); }

WeightFamily WeightFamily::geometric(double base, AlphaSequence alpha) {
  if (!(base > 0.0) || !std::isfinite(base)) {
    throw std::invalid_argument("geometric weight base must be positive");
  }
  return WeightFamily(GeometricExp{std::log(base), std::move(alpha)});
}

WeightFamily WeightFamily::geometric_log(double log_base, AlphaSequence alpha) {
  if (!std::isfinite(log_base)) {
    throw std::invalid_argument("log base must be finite");
  }
  return WeightFamily(GeometricExp{log_base, std::move(alpha)});
}

WeightFamily WeightFamily::table(std::vector<double> values, double N, double L,
                                 double L1) {
  if (values.size() < 2) {
    throw std::invalid_argument("weight table needs at least two values");
  }
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("weight table values must be positive");
    }
  }
  if (!(L1 >= 0.0) || !(L >= L1) || !(N >= L)) {
    throw std::invalid_argument("declared asymptotics must satisfy L1<=L<=N");
  }
  return WeightFamily(Table{std::move(values), N, L, L1});
}

double WeightFamily::log_value(std::size_t n) const {
  if (std::holds_alternative<Unit>(v_)) return 0.0;
  if (const auto* g = std::get_if<GeometricExp>(&v_)) {
    return g->log_base * g->alpha.value(n);
  }
  const auto& t = std::get<Table>(v_);
  if (n < t.values.size()) return std::log(t.values[n]);
  // Past the stored prefix, extend with the declared limsup ratio.
  const double past = static_cast<double>(n - (t.values.size() - 1));
  return std::log(t.values.back()) + past * std::log(t.declared_L);
}

double WeightFamily::log_ratio(std::size_t n) const {
  if (std::holds_alternative<Unit>(v_)) return 0.0;
  if (const auto* g = std::get_if<GeometricExp>(&v_)) {
    return g->log_base * g->alpha.gap(n);
  }
  return log_value(n + 1) - log_value(n);
}

double WeightFamily::ratio(std::size_t n) const {
  return std::exp(log_ratio(n));
}

WeightFamily WeightFamily::reciprocal() const {
  if (std::holds_alternative<Unit>(v_)) return unit();
  if (const auto* g = std::get_if<GeometricExp>(&v_)) {
    return WeightFamily(GeometricExp{-g->log_base, g->alpha});
  }
  const auto& t = std::get<Table>(v_);
  std::vector<double> recip(t.values.size());
  double sup_ratio = t.declared_L1 > 0.0 ? 1.0 / t.declared_L1 : kInf;
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    recip[i] = 1.0 / t.values[i];
    if (i + 1 < t.values.size()) {
      sup_ratio = std::max(sup_ratio, t.values[i] / t.values[i + 1]);
    }
  }
  const double L = t.declared_L1 > 0.0 ? 1.0 / t.declared_L1 : kInf;
  const double L1 = t.declared_L > 0.0 ? 1.0 / t.declared_L : 0.0;
  if (!std::isfinite(L)) {
    throw UnboundedRatio("reciprocal weight has unbounded ratio (L1 = 0)");
  }
  return WeightFamily(Table{std::move(recip), sup_ratio, L, L1});
}

// ---------------------------------------------------------------------------
// ratio_asymptotics

namespace {

bool declared_matches(double observed, double declared, double rel_tol) {
  if (declared > 0.0) {
    return std::abs(observed - declared) <= rel_tol * declared;
  }
  return observed <= rel_tol;
}

}  // namespace

RatioAsymptotics ratio_asymptotics(const WeightFamily& v,
                                   const TableCheckConfig& cfg) {
  if (v.is_unit()) return RatioAsymptotics{1.0, 1.0, 1.0, true};

  if (const auto* g = v.as_geometric()) {
    const double l = g->alpha.limit_gap();
    const double lim = std::exp(g->log_base * l);
    const double extreme_gap =
        g->log_base >= 0.0 ? g->alpha.sup_gap() : g->alpha.inf_gap();
    const double N = std::exp(g->log_base * extreme_gap);
    if (!std::isfinite(N)) {
      throw UnboundedRatio("geometric weight ratio is unbounded");
    }
    return RatioAsymptotics{N, lim, lim, g->alpha.closed_form()};
  }

  const auto* t = v.as_table();
  const std::size_t n_ratios = t->values.size() - 1;
  std::vector<double> ratios(n_ratios);
  for (std::size_t i = 0; i < n_ratios; ++i) {
    ratios[i] = t->values[i + 1] / t->values[i];
  }
  double N = std::max(t->declared_N, t->declared_L);
  for (double r : ratios) N = std::max(N, r);
  if (!std::isfinite(N)) {
    throw UnboundedRatio("tabulated weight declares an unbounded ratio");
  }

  const std::size_t tail_len = std::max<std::size_t>(
      1, static_cast<std::size_t>(cfg.tail_fraction * n_ratios));
  double tail_max = 0.0;
  double tail_min = kInf;
  for (std::size_t i = n_ratios - tail_len; i < n_ratios; ++i) {
    tail_max = std::max(tail_max, ratios[i]);
    tail_min = std::min(tail_min, ratios[i]);
  }
  if (!declared_matches(tail_max, t->declared_L, cfg.rel_tol)) {
    throw DeclaredMismatch("declared L = " + std::to_string(t->declared_L) +
                           " disagrees with tail-window maximum ratio " +
                           std::to_string(tail_max));
  }
  if (!declared_matches(tail_min, t->declared_L1, cfg.rel_tol)) {
    throw DeclaredMismatch("declared L1 = " + std::to_string(t->declared_L1) +
                           " disagrees with tail-window minimum ratio " +
                           std::to_string(tail_min));
  }
  return RatioAsymptotics{N, t->declared_L, t->declared_L1, false};
}

// ---------------------------------------------------------------------------
// weighted_norm

double NormResult::linear() const { return std::exp(log_value); }

NormResult weighted_norm(const SeqVector& x, double p, const WeightFamily& v) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("weighted_norm requires p in (1, inf)");
  }
  std::vector<double> logs;
  logs.reserve(x.size());
  double max_log = -kInf;
  for (std::size_t n = 0; n < x.size(); ++n) {
    if (x.entries[n] == std::complex<double>(0.0, 0.0)) continue;
    const double a = x.log_magnitude(n) + v.log_value(n);
    logs.push_back(a);
    max_log = std::max(max_log, a);
  }
  const bool lower_bound = !x.zero_tail();
  if (logs.empty()) return NormResult{-kInf, lower_bound};

  if (std::abs(max_log) * p < kLinearLogRange) {
    double sum = 0.0;
    for (double a : logs) sum += std::pow(std::exp(a), p);
    return NormResult{std::log(sum) / p, lower_bound};
  }
  double sum = 0.0;
  for (double a : logs) sum += std::exp(p * (a - max_log));
  return NormResult{max_log + std::log(sum) / p, lower_bound};
}

// ---------------------------------------------------------------------------
// boundary_series_test

namespace {

// Least-squares slope of log-term magnitudes against log(n+1) over the tail
// window of the stored prefix; estimates the polynomial decay exponent.
std::optional<double> tail_log_slope(const std::vector<double>& log_terms,
                                     std::size_t first) {
  const std::size_t count = log_terms.size() - first;
  if (count < kSlopeFitMinPoints) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = first; i < log_terms.size(); ++i) {
    const double xi = std::log(static_cast<double>(i) + 1.0);
    const double yi = log_terms[i];
    sx += xi;
    sy += yi;
    sxx += xi * xi;
    sxy += xi * yi;
  }
  const double n = static_cast<double>(count);
  const double denom = n * sxx - sx * sx;
  if (denom <= 0.0) return std::nullopt;
  return (n * sxy - sx * sy) / denom;
}

SeriesVerdict verdict_from_slope(std::optional<double> slope) {
  if (!slope) return SeriesVerdict::Undetermined;
  if (*slope < -1.0 - kSlopeFitMargin) return SeriesVerdict::Converges;
  if (*slope > -1.0 + kSlopeFitMargin) return SeriesVerdict::Diverges;
  return SeriesVerdict::Undetermined;
}

SeriesVerdict boundary_case(const WeightFamily& v, double p_prime,
                            double rho) {
  if (v.is_unit()) return SeriesVerdict::Diverges;  // constant terms 1

  if (const auto* g = v.as_geometric()) {
    if (g->alpha.closed_form()) {
      if (g->alpha.is_affine()) {
        // terms exp(-p' * log_base * offset): constant, never null.
        return SeriesVerdict::Diverges;
      }
      // log-shift: terms (n+1)^(-p' * log_base), a p-series.
      return p_prime * g->log_base > 1.0 ? SeriesVerdict::Converges
                                         : SeriesVerdict::Diverges;
    }
  }

  // Tabulated data: fit the decay exponent on the stored tail.
  std::size_t stored = 0;
  if (const auto* g = v.as_geometric()) {
    stored = g->alpha.as_table()->values.size();
  } else if (const auto* t = v.as_table()) {
    stored = t->values.size();
  }
  if (stored < 2 * kSlopeFitMinPoints) return SeriesVerdict::Undetermined;
  std::vector<double> log_terms(stored);
  const double log_rho = std::log(rho);
  for (std::size_t n = 0; n < stored; ++n) {
    log_terms[n] =
        p_prime * (static_cast<double>(n) * log_rho - v.log_value(n));
  }
  return verdict_from_slope(tail_log_slope(log_terms, (3 * stored) / 4));
}

}  // namespace

SeriesVerdict boundary_series_test(const WeightFamily& v, double p,
                                   double rho) {
  if (!(rho >= 0.0)) {
    throw std::invalid_argument("rho must be non-negative");
  }
  const ConjugateExponent ce(p);
  if (rho == 0.0) return SeriesVerdict::Converges;

  const RatioAsymptotics ra = ratio_asymptotics(v);
  const double band = kBoundaryBandRelTol * std::max(1.0, ra.L1);
  if (std::abs(rho - ra.L1) <= band) {
    return boundary_case(v, ce.p_prime, rho);
  }
  return rho < ra.L1 ? SeriesVerdict::Converges : SeriesVerdict::Diverges;
}

// ---------------------------------------------------------------------------
// grade_weight

WeightFamily grade_weight(const AlphaSequence& alpha, int k) {
  if (k < 1) throw std::invalid_argument("grade index k must be >= 1");
  return WeightFamily::geometric_log(static_cast<double>(k), alpha);
}

}  // namespace bandspec

#include "bandspec/ergodics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "bandspec/errors.hpp"
#include "bandspec/spectra.hpp"

namespace bandspec {

namespace {

std::string ineq(const char* lhs, double value, const char* rel, double bound) {
  std::ostringstream os;
  os << lhs << " = " << value << " " << rel << " " << bound;
  return os.str();
}

TriState holds(std::string rule) { return {Verdict::Holds, std::move(rule)}; }
TriState fails(std::string rule) { return {Verdict::Fails, std::move(rule)}; }
TriState open_band(std::string rule) {
  return {Verdict::Undetermined, std::move(rule)};
}

ErgodicReport classify_lp(const BandParams& b, const WeightedLpSpace& sp) {
  RatioAsymptotics ra;
  try {
    ra = ratio_asymptotics(sp.weight);
  } catch (const UnboundedRatio& e) {
    throw ContinuityFailure(std::string("B(r,s) is not continuous on lp(v): ") +
                            e.what());
  }
  const double ar = std::abs(b.r);
  const double as = std::abs(b.s);
  const double t_sup = ar + ra.N * as;   // controls the norm bound
  const double t_lim = ar + ra.L * as;   // the spectral radius
  const bool one_in_sigma = std::abs(b.r - 1.0) <= ra.L * as;

  ErgodicReport rep;
  rep.one_in_spectrum = one_in_sigma;

  const auto chain_state = [&](const char* what) -> TriState {
    if (t_sup <= 1.0) {
      return holds(std::string(what) + ": " + ineq("|r|+N|s|", t_sup, "<=", 1.0));
    }
    if (t_lim > 1.0) {
      return fails(std::string(what) + ": " + ineq("|r|+L|s|", t_lim, ">", 1.0));
    }
    return open_band(std::string(what) + ": band " +
                     ineq("|r|+L|s|", t_lim, "<= 1 <", t_sup));
  };
  rep.power_bounded = chain_state("power bounded");
  rep.mean_ergodic = chain_state("mean ergodic");
  rep.cesaro_null = chain_state("B^n/n -> 0");

  if (t_lim < 1.0) {
    rep.uniform_mean_ergodic =
        holds("uniformly mean ergodic: " + ineq("|r|+L|s|", t_lim, "<", 1.0));
    rep.norm_powers_to_zero =
        holds("||B^n|| -> 0: " + ineq("|r|+L|s|", t_lim, "<", 1.0));
  } else if (t_lim > 1.0) {
    rep.uniform_mean_ergodic = fails("uniformly mean ergodic: " +
                                     ineq("|r|+L|s|", t_lim, ">", 1.0));
    rep.norm_powers_to_zero =
        fails("||B^n|| -> 0: " + ineq("|r|+L|s|", t_lim, ">", 1.0));
  } else if (one_in_sigma) {
    rep.uniform_mean_ergodic = fails(
        "uniformly mean ergodic: 1 lies in the spectrum disk, " +
        ineq("|r-1|", std::abs(b.r - 1.0), "<=", ra.L * as));
    rep.norm_powers_to_zero = fails(
        "||B^n|| -> 0: 1 lies in the spectrum disk, " +
        ineq("|r-1|", std::abs(b.r - 1.0), "<=", ra.L * as));
  } else {
    rep.uniform_mean_ergodic = open_band(
        "uniformly mean ergodic: |r|+L|s| = 1 with 1 outside the spectrum");
    rep.norm_powers_to_zero = open_band(
        "||B^n|| -> 0: |r|+L|s| = 1 with 1 outside the spectrum");
  }

  if (ra.L1 > 0.0) {
    rep.supercyclic_excluded = holds(
        "not supercyclic: adjoint point spectrum fills an open disk, " +
        ineq("L1|s|", ra.L1 * as, ">", 0.0));
  } else {
    rep.supercyclic_excluded =
        open_band("supercyclicity: L1 = 0 leaves no open adjoint eigen-disk");
  }
  return rep;
}

ErgodicReport classify_power_series(const BandParams& b,
                                    const PowerSeriesSpace& sp) {
  const double ar = std::abs(b.r);
  const double as = std::abs(b.s);
  const double t = ar + as;
  ErgodicReport rep;

  if (!sp.dual) {
    if (sp.l > 0.0) {
      const std::string why =
          "spectrum is the whole plane (gap limit l = " + std::to_string(sp.l) +
          " > 0)";
      rep.power_bounded = fails("power bounded: " + why);
      rep.mean_ergodic = fails("mean ergodic: " + why);
      rep.uniform_mean_ergodic = fails("uniformly mean ergodic: " + why);
      rep.cesaro_null = fails("B^n/n -> 0: " + why);
      rep.norm_powers_to_zero = fails("||B^n|| -> 0: " + why);
      rep.one_in_spectrum = true;
      rep.supercyclic_excluded =
          holds("not supercyclic: adjoint point spectrum is the whole plane");
      return rep;
    }
    const bool one_in_sigma = std::abs(b.r - 1.0) <= as;
    rep.one_in_spectrum = one_in_sigma;
    const auto side = [&](const char* what, bool holds_needs_strict,
                          bool fails_on_one_in_sigma) -> TriState {
      if (t < 1.0) {
        return holds(std::string(what) + ": " + ineq("|r|+|s|", t, "<", 1.0));
      }
      if (t > 1.0) {
        return fails(std::string(what) + ": " + ineq("|r|+|s|", t, ">", 1.0));
      }
      if (fails_on_one_in_sigma && one_in_sigma) {
        return fails(std::string(what) +
                     ": 1 lies in the spectrum disk at |r|+|s| = 1");
      }
      (void)holds_needs_strict;
      return open_band(std::string(what) + ": boundary case |r|+|s| = 1");
    };
    rep.power_bounded = side("power bounded", true, true);
    rep.mean_ergodic = side("mean ergodic", true, false);
    rep.uniform_mean_ergodic = side("uniformly mean ergodic", true, true);
    rep.cesaro_null = side("B^n/n -> 0", true, false);
    rep.norm_powers_to_zero = side("||B^n|| -> 0", true, true);
    rep.supercyclic_excluded =
        holds("not supercyclic: adjoint point spectrum fills the closed disk");
    return rep;
  }

  // Strong dual.
  if (sp.l == 0.0) {
    rep.one_in_spectrum = std::abs(b.r - 1.0) <= as;
    const auto equiv = [&](const char* what) -> TriState {
      if (t <= 1.0) {
        return holds(std::string(what) + ": " + ineq("|r|+|s|", t, "<=", 1.0));
      }
      return fails(std::string(what) + ": " + ineq("|r|+|s|", t, ">", 1.0));
    };
    rep.power_bounded = equiv("power bounded");
    rep.mean_ergodic = equiv("mean ergodic");
    rep.uniform_mean_ergodic = equiv("uniformly mean ergodic");
    rep.cesaro_null = equiv("B^n/n -> 0");
    if (t < 1.0) {
      rep.norm_powers_to_zero =
          holds("||B^n|| -> 0: " + ineq("|r|+|s|", t, "<", 1.0));
    } else if (t > 1.0) {
      rep.norm_powers_to_zero =
          fails("||B^n|| -> 0: " + ineq("|r|+|s|", t, ">", 1.0));
    } else {
      rep.norm_powers_to_zero =
          open_band("||B^n|| -> 0: boundary case |r|+|s| = 1");
    }
    rep.supercyclic_excluded =
        holds("not supercyclic: adjoint point spectrum fills an open disk");
    return rep;
  }

  rep.one_in_spectrum = b.r == 1.0;  // spectrum is the singleton {r}
  const auto dual_state = [&](const char* what) -> TriState {
    if (t < 1.0) {
      return holds(std::string(what) + ": " + ineq("|r|+|s|", t, "<", 1.0) +
                   " (every grade norm is a strict contraction)");
    }
    if (ar > 1.0) {
      return fails(std::string(what) + ": " + ineq("|r|", ar, ">", 1.0));
    }
    return open_band(std::string(what) + ": band |r| <= 1 <= |r|+|s|");
  };
  rep.power_bounded = dual_state("power bounded");
  rep.mean_ergodic = dual_state("mean ergodic");
  rep.uniform_mean_ergodic = dual_state("uniformly mean ergodic");
  rep.cesaro_null = dual_state("B^n/n -> 0");
  rep.norm_powers_to_zero = dual_state("||B^n|| -> 0");
  rep.supercyclic_excluded = open_band(
      "supercyclicity: the dual adjoint point spectrum is not characterized "
      "when l > 0");
  return rep;
}

}  // namespace

ErgodicReport classify_ergodic(const BandParams& b,
                               const SpaceDescriptor& space) {
  if (const auto* sp = space.as_lp()) return classify_lp(b, *sp);
  return classify_power_series(b, *space.as_power_series());
}

// ---------------------------------------------------------------------------
// Experiments

namespace {

std::vector<std::size_t> log_spaced(std::size_t n_max, std::size_t points) {
  std::set<std::size_t> ns;
  for (std::size_t i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(points - 1);
    ns.insert(static_cast<std::size_t>(
        std::llround(std::pow(static_cast<double>(n_max), f))));
  }
  return {ns.begin(), ns.end()};
}

double vec_norm(const SeqVector& x, double p, const WeightFamily& v) {
  return weighted_norm(x, p, v).linear();
}

}  // namespace

DecayTable cesaro_experiment(const BandParams& b, const SpaceDescriptor& space,
                             std::size_t n_max,
                             const std::vector<std::size_t>& probes,
                             const TruncationConfig& cfg) {
  if (n_max < 10) throw std::invalid_argument("n_max must be >= 10");

  // (grade, p, weight) triples defining the norms to report.
  struct NormSpec {
    int grade;
    double p;
    WeightFamily weight;
  };
  std::vector<NormSpec> norms;
  if (const auto* lp = space.as_lp()) {
    norms.push_back({0, lp->p, lp->weight});
  } else {
    const auto* ps = space.as_power_series();
    for (int k = 1; k <= 3; ++k) {
      WeightFamily w = grade_weight(ps->alpha, k);
      if (ps->dual) w = w.reciprocal();
      norms.push_back({k, 2.0, std::move(w)});
    }
  }

  const std::vector<std::size_t> checkpoints = log_spaced(n_max, 12);
  DecayTable table;
  table.consistent_with_verdicts = true;

  for (std::size_t probe : probes) {
    SeqVector x = SeqVector::basis(probe, cfg.m);
    SeqVector cur = x;
    SeqVector sum(cfg.m);
    SeqVector prev_mean(cfg.m);
    auto next_cp = checkpoints.begin();
    for (std::size_t n = 1; n <= n_max && next_cp != checkpoints.end(); ++n) {
      cur = apply(b, cur);
      for (std::size_t i = 0; i < cfg.m; ++i) sum.entries[i] += cur.entries[i];
      const double dn = static_cast<double>(n);
      if (n == *next_cp) {
        SeqVector mean(cfg.m);
        for (std::size_t i = 0; i < cfg.m; ++i) {
          mean.entries[i] = sum.entries[i] / dn;
        }
        // B^n x / n against the two-term Cesaro recurrence.
        double resid = 0.0;
        if (n >= 2) {
          for (std::size_t i = 0; i < cfg.m; ++i) {
            const std::complex<double> lhs = cur.entries[i] / dn;
            const std::complex<double> rhs =
                mean.entries[i] - (dn - 1.0) / dn * prev_mean.entries[i];
            resid = std::max(resid, std::abs(lhs - rhs));
          }
        }
        for (const NormSpec& ns : norms) {
          table.rows.push_back(DecayRow{
              n, probe, ns.grade, vec_norm(mean, ns.p, ns.weight),
              vec_norm(cur, ns.p, ns.weight) / dn, resid});
        }
        ++next_cp;
      }
      // Keep T_[n-1] for the recurrence check at the next checkpoint.
      if (next_cp != checkpoints.end() && n + 1 == *next_cp) {
        for (std::size_t i = 0; i < cfg.m; ++i) {
          prev_mean.entries[i] = sum.entries[i] / dn;
        }
      }
    }
  }

  const ErgodicReport verdicts = classify_ergodic(b, space);
  if (verdicts.cesaro_null.verdict != Verdict::Undetermined &&
      !table.rows.empty()) {
    const double first = table.rows.front().power_over_n;
    const double last = table.rows.back().power_over_n;
    if (verdicts.cesaro_null.verdict == Verdict::Holds) {
      table.consistent_with_verdicts = last <= std::max(first, 1e-12) * 1.01;
    } else {
      table.consistent_with_verdicts = last > 0.5;
    }
  }
  return table;
}

double growth_experiment(const BandParams& b, const WeightFamily& v, double p,
                         std::size_t n_max) {
  if (n_max < 100) throw std::invalid_argument("n_max must be >= 100");
  const SeqVector col = power_column(b, n_max);
  const NormResult norm = weighted_norm(col, p, v);
  return std::exp(norm.log_value / static_cast<double>(n_max));
}

}  // namespace bandspec

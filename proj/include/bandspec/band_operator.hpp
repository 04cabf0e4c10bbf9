#pragma once

#include <cstddef>
#include <vector>

#include "bandspec/seq_vector.hpp"
#include "bandspec/weights.hpp"

namespace bandspec {

// Parameters of the double-band operator B(r,s): diagonal r, subdiagonal s.
struct BandParams {
  double r;
  double s;
  BandParams(double r_in, double s_in);
};

struct TruncationConfig {
  std::size_t m = 512;
  double tol = 1e-10;
};

// y_n = s x_{n-1} + r x_n with x_{-1} = 0, truncated to the input length.
SeqVector apply(const BandParams& b, const SeqVector& x);

// Adjoint action y_n = r x_n + s x_{n+1}.
SeqVector apply_adjoint(const BandParams& b, const SeqVector& x);

// B^n e_0: entries binom(n,k) r^(n-k) s^k, built from log-gamma with a shared
// log-scale so powers up to n ~ 10^4 stay representable.
SeqVector power_column(const BandParams& b, std::size_t n);

// Cesaro mean (1/n) sum_{j=1..n} B^j x by iterated application.
SeqVector cesaro_apply(const BandParams& b, std::size_t n, const SeqVector& x);

// m x m leading section: lower bidiagonal, exact for powers of B by lower
// triangularity.
struct LowerBidiagonal {
  double diag;
  double sub;
  std::size_t size;

  double entry(std::size_t i, std::size_t j) const {
    if (i == j) return diag;
    if (i == j + 1) return sub;
    return 0.0;
  }
  std::vector<double> apply(const std::vector<double>& x) const;
};

LowerBidiagonal finite_section(const BandParams& b, std::size_t m);

// Candidate operator-norm bounds on lp(v).  The displayed per-basis quotients
// have supremum with an N^p term while the stated lower bound carries N to the
// first power; both are reported and their disagreement flagged.
struct NormBounds {
  double lower_stated;     // (|r|^p + N |s|^p)^(1/p)
  double lower_quotient;   // sup_k (|r|^p + |s|^p (v_{k+1}/v_k)^p)^(1/p)
  double upper;            // |r| + N |s|
  bool bounds_disagree;
};

NormBounds operator_norm_bounds(const BandParams& b, double p,
                                const RatioAsymptotics& ra);

}  // namespace bandspec

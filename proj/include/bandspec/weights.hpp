#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "bandspec/errors.hpp"
#include "bandspec/seq_vector.hpp"

namespace bandspec {

// Grading sequence alpha: non-negative, non-decreasing, alpha_n -> infinity.
//
// Closed forms carry exact gap asymptotics; tabulated sequences extrapolate
// past the stored prefix with the declared limit gap l, i.e.
// alpha_n = alpha_last + l * (n - last).
class AlphaSequence {
 public:
  struct Affine {
    double slope;
    double offset;
  };
  struct LogShift {};  // alpha_n = log(n + 1)
  struct Table {
    std::vector<double> values;
    double declared_l;
  };

  static AlphaSequence affine(double slope, double offset);
  static AlphaSequence log_shift();
  static AlphaSequence table(std::vector<double> values, double declared_l);

  double value(std::size_t n) const;
  double gap(std::size_t n) const;  // alpha_{n+1} - alpha_n

  double limit_gap() const;  // l = lim gap
  double sup_gap() const;
  double inf_gap() const;
  bool closed_form() const;

  bool is_affine() const { return std::holds_alternative<Affine>(v_); }
  bool is_log_shift() const { return std::holds_alternative<LogShift>(v_); }
  bool is_table() const { return std::holds_alternative<Table>(v_); }
  const Table* as_table() const { return std::get_if<Table>(&v_); }
  const Affine* as_affine() const { return std::get_if<Affine>(&v_); }

 private:
  explicit AlphaSequence(std::variant<Affine, LogShift, Table> v)
      : v_(std::move(v)) {}
  std::variant<Affine, LogShift, Table> v_;
};

// N = sup, L = limsup, L1 = liminf of the ratio sequence v_{n+1}/v_n.
struct RatioAsymptotics {
  double N;
  double L;
  double L1;
  bool exact;
};

struct ConjugateExponent {
  double p;
  double p_prime;
  explicit ConjugateExponent(double p_in);
};

// Tail-window cross-check of declared asymptotics for tabulated weights.
struct TableCheckConfig {
  double tail_fraction = 0.25;
  double rel_tol = 0.05;
};

// Positive weight sequence v with declared or exact ratio asymptotics.
// All evaluation goes through log v_n so graded weights e^{k alpha_n} stay
// representable far beyond the linear floating-point range.
class WeightFamily {
 public:
  struct Unit {};
  struct GeometricExp {
    double log_base;  // v_n = exp(log_base * alpha_n)
    AlphaSequence alpha;
  };
  struct Table {
    std::vector<double> values;
    double declared_N;
    double declared_L;
    double declared_L1;
  };

  static WeightFamily unit();
  static WeightFamily geometric(double base, AlphaSequence alpha);
  static WeightFamily geometric_log(double log_base, AlphaSequence alpha);
  static WeightFamily table(std::vector<double> values, double N, double L,
                            double L1);

  double log_value(std::size_t n) const;
  double ratio(std::size_t n) const;  // v_{n+1}/v_n
  double log_ratio(std::size_t n) const;

  // 1/v; swaps the roles of L and L1.
  WeightFamily reciprocal() const;

  bool is_unit() const { return std::holds_alternative<Unit>(v_); }
  const GeometricExp* as_geometric() const {
    return std::get_if<GeometricExp>(&v_);
  }
  const Table* as_table() const { return std::get_if<Table>(&v_); }

 private:
  explicit WeightFamily(std::variant<Unit, GeometricExp, Table> v)
      : v_(std::move(v)) {}
  std::variant<Unit, GeometricExp, Table> v_;
};

// Computes (N, L, L1) for a weight family.
// Throws UnboundedRatio when N is infinite and DeclaredMismatch when a
// tabulated weight's declared L/L1 disagree with the stored tail window.
RatioAsymptotics ratio_asymptotics(const WeightFamily& v,
                                   const TableCheckConfig& cfg = {});

// Weighted lp norm of a truncated sequence, carried in the log domain.
struct NormResult {
  double log_value;  // -inf for the zero vector
  bool lower_bound_only;

  double linear() const;
};

NormResult weighted_norm(const SeqVector& x, double p, const WeightFamily& v);

enum class SeriesVerdict { Converges, Diverges, Undetermined };

// Decides whether sum_n rho^{n p'} / v_n^{p'} converges, the membership test
// for the geometric adjoint eigenvector in l_{p'}(1/v).  Exact strictly
// inside/outside the liminf radius L1; on the circle rho = L1 the answer is
// exact for closed-form weights and estimated (or Undetermined) for tables.
SeriesVerdict boundary_series_test(const WeightFamily& v, double p,
                                   double rho);

// Grade-k weight v_k(n) = e^{k alpha_n} of the graded hierarchy.
WeightFamily grade_weight(const AlphaSequence& alpha, int k);

}  // namespace bandspec

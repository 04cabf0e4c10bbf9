#pragma once

#include <stdexcept>

namespace bandspec {

// Ratio sequence v_{n+1}/v_n is unbounded; B(r,s) is not continuous on lp(v).
struct UnboundedRatio : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Declared asymptotics of a tabulated weight disagree with the stored tail.
struct DeclaredMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resolvent requested at a point inside or on the predicted spectrum disk.
struct SpectrumViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// B(r,s) fails to act continuously on the requested space.
struct ContinuityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The grading sequence alpha violates a hypothesis of the graded theory.
struct HypothesisFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A per-grade spectrum contradicts the projective/inductive aggregation rule.
struct AggregationViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bandspec

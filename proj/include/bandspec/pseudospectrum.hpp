#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "bandspec/band_operator.hpp"
#include "bandspec/weights.hpp"

namespace bandspec {

// Rectangular evaluation grid for sigma_min over the complex plane.
struct GridSpec {
  std::complex<double> lo{0.0, 0.0};  // lower-left corner
  std::complex<double> hi{0.0, 0.0};  // upper-right corner
  std::size_t nx = 201;
  std::size_t ny = 201;
  std::size_t m = 300;
  WeightFamily weight = WeightFamily::unit();
};

// Box around the predicted spectrum disk with 25% padding.
GridSpec default_grid(const BandParams& b, const WeightFamily& v);

// Smallest singular value of the weighted m x m section of (B - alpha I),
// via Sturm-count bisection on the tridiagonal normal matrix (O(m) per
// bisection step).  Returns exactly 0 when alpha = r (the diagonal of the
// section vanishes); results are exactly symmetric under conjugation of alpha
// because only squared magnitudes enter the pivots.
double sigma_min(const BandParams& b, std::complex<double> alpha,
                 std::size_t m, const WeightFamily& v);

// Per-epsilon comparison of the sublevel set with the predicted disk,
// both sampled on the same grid.
struct ContourSummary {
  double epsilon;
  std::size_t sublevel_points;
  std::size_t disk_points;
  double discrepancy;  // Hausdorff-style distance between the two point sets
};

struct PseudoGrid {
  GridSpec spec;
  std::vector<double> values;  // row-major: index = iy * nx + ix
  std::vector<ContourSummary> contours;
  bool sublevel_sets_nested;

  std::complex<double> point(std::size_t ix, std::size_t iy) const;
  double value(std::size_t ix, std::size_t iy) const;
};

// Evaluates sigma_min over the grid in parallel (BANDSPEC_THREADS caps the
// worker count) with deterministic output ordering.
PseudoGrid pseudo_grid(const BandParams& b, const GridSpec& spec);

}  // namespace bandspec

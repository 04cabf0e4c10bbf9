#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bandspec/band_operator.hpp"
#include "bandspec/ergodics.hpp"
#include "bandspec/pseudospectrum.hpp"
#include "bandspec/report.hpp"

namespace bandspec {

enum class Command { Classify, Ergodics, Resolve, Cesaro, Pseudospec, Verify };

enum class SpaceKind { Lp, Lambda, LambdaDual };

// Validated run request assembled from CLI flags or a JSON config file.
struct RunConfig {
  Command command = Command::Classify;
  BandParams band{1.0, 1.0};

  SpaceKind kind = SpaceKind::Lp;
  double p = 2.0;
  WeightFamily weight = WeightFamily::unit();
  std::optional<AlphaSequence> alpha;  // required for the graded spaces

  TruncationConfig trunc;
  std::optional<std::complex<double>> point;  // resolve target / classify probe
  std::vector<std::complex<double>> rhs;      // resolve right-hand side

  std::size_t n_max = 1000;                 // cesaro horizon
  std::vector<std::size_t> probes = {0, 5};  // cesaro basis probes

  std::optional<GridSpec> grid;  // pseudospec overrides
  int crosscheck_grades = 4;
  unsigned seed = 12345;  // verify randomization

  std::string output_path;  // empty: write everything to the stream
};

// Applies overrides from a JSON config document onto cfg.
void apply_config_json(const json& doc, RunConfig& cfg);

// Executes the request, writing the report to `out` (and CSV artifacts to
// output_path when set).  Returns the process exit status: 0 success,
// 2 validation error, 3 failed space/continuity hypothesis, 4 internal
// invariant violation.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace bandspec

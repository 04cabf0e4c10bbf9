#pragma once

#include <string>

#include "json.hpp"

#include "bandspec/ergodics.hpp"
#include "bandspec/grading.hpp"
#include "bandspec/pseudospectrum.hpp"
#include "bandspec/resolvent.hpp"
#include "bandspec/spectra.hpp"

namespace bandspec {

using json = nlohmann::json;

// JSON views of the analysis results.  Each classification field carries a
// "rule" string stating the criterion that produced it, so reports are
// self-contained.
json to_json(const Disk& d);
json to_json(const SpectralRegion& region);
json to_json(const RatioAsymptotics& ra);
json to_json(const FineSpectrum& fs);
json to_json(const GradedFineSpectrum& g, const PowerSeriesSpace& sp);
json to_json(const TriState& t);
json to_json(const ErgodicReport& rep);
json to_json(const SummabilityCertificates& certs);
json to_json(const CrosscheckReport& report);
json contour_json(const PseudoGrid& grid);

const char* to_string(Verdict v);
const char* to_string(SeriesVerdict v);
const char* to_string(PointClass c);
const char* to_string(RegionKind k);

// Canonical serialization: sorted keys, two-space indent, trailing newline.
// Parsing and re-serializing a canonical document is byte-identical.
std::string canonical(const json& j);

// CSV emitters; 17 significant digits, row-major for grids.
std::string grid_csv(const PseudoGrid& grid);
std::string decay_csv(const DecayTable& table);

}  // namespace bandspec

#include "bandspec/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bandspec {

namespace {

json complex_json(std::complex<double> z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::Undetermined:
      return "undetermined";
  }
  return "?";
}

const char* to_string(SeriesVerdict v) {
  switch (v) {
    case SeriesVerdict::Converges:
      return "converges";
    case SeriesVerdict::Diverges:
      return "diverges";
    case SeriesVerdict::Undetermined:
      return "undetermined";
  }
  return "?";
}

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::Resolvent:
      return "resolvent";
    case PointClass::Residual:
      return "residual";
    case PointClass::Continuous:
      return "continuous";
    case PointClass::BoundaryUndetermined:
      return "boundary-undetermined";
  }
  return "?";
}

const char* to_string(RegionKind k) {
  switch (k) {
    case RegionKind::Empty:
      return "empty";
    case RegionKind::OpenDisk:
      return "open-disk";
    case RegionKind::ClosedDisk:
      return "closed-disk";
    case RegionKind::Circle:
      return "circle";
    case RegionKind::Singleton:
      return "singleton";
    case RegionKind::WholePlane:
      return "whole-plane";
  }
  return "?";
}

json to_json(const Disk& d) {
  return json{{"center", complex_json(d.center)}, {"radius", d.radius}};
}

json to_json(const SpectralRegion& region) {
  json j{{"kind", to_string(region.kind)}};
  switch (region.kind) {
    case RegionKind::Empty:
    case RegionKind::WholePlane:
      break;
    case RegionKind::Singleton:
      j["center"] = complex_json(region.center);
      break;
    default:
      j["center"] = complex_json(region.center);
      j["radius"] = region.radius;
  }
  return j;
}

json to_json(const RatioAsymptotics& ra) {
  return json{{"N", ra.N}, {"L", ra.L}, {"L1", ra.L1}, {"exact", ra.exact}};
}

json to_json(const FineSpectrum& fs) {
  json j;
  j["band"] = json{{"r", fs.band.r}, {"s", fs.band.s}};
  j["p"] = fs.p;
  j["weight_ratios"] = to_json(fs.ratios);
  j["sigma"] = to_json(fs.sigma);
  j["sigma"]["rule"] = "closed disk of radius L|s| about r";
  j["point"] = json{{"kind", "empty"},
                    {"rule", "forward recurrence forbids lp eigenvectors"}};
  j["residual"] = json{
      {"inner", to_json(fs.residual_inner)},
      {"boundary_circle", to_string(fs.boundary_rule)},
      {"rule",
       "open disk of radius L1|s|; circle included iff the geometric adjoint "
       "eigenvector series converges in the dual weight"}};
  j["continuous"] = json{
      {"rule", "remainder of the spectrum disk after the residual part"}};
  j["waelbroeck"] = json{{"equals_sigma", fs.waelbroeck_equals_sigma},
                         {"rule", "no extra non-equicontinuous boundary "
                                  "points arise for this operator"}};
  j["adjoint_point_equals_residual"] = fs.adjoint_point_equals_residual;
  return j;
}

json to_json(const GradedFineSpectrum& g, const PowerSeriesSpace& sp) {
  json j;
  j["space"] = json{{"dual", sp.dual},
                    {"gap_limit", sp.l},
                    {"nuclear", sp.nuclear}};
  if (sp.log_bound_c) j["space"]["log_bound_c"] = *sp.log_bound_c;
  j["sigma"] = to_json(g.sigma);
  j["point"] = to_json(g.point);
  j["residual"] = to_json(g.residual);
  j["continuous"] = to_json(g.continuous);
  j["waelbroeck"] = to_json(g.waelbroeck);
  j["rule"] = sp.dual
                  ? "dual graded space: tail intersections of grade disks"
                  : "graded space: intersection over all grade weights";
  return j;
}

json to_json(const TriState& t) {
  return json{{"verdict", to_string(t.verdict)}, {"rule", t.rule}};
}

json to_json(const ErgodicReport& rep) {
  return json{{"power_bounded", to_json(rep.power_bounded)},
              {"mean_ergodic", to_json(rep.mean_ergodic)},
              {"uniform_mean_ergodic", to_json(rep.uniform_mean_ergodic)},
              {"cesaro_null", to_json(rep.cesaro_null)},
              {"norm_powers_to_zero", to_json(rep.norm_powers_to_zero)},
              {"one_in_spectrum", rep.one_in_spectrum},
              {"supercyclic_excluded", to_json(rep.supercyclic_excluded)}};
}

json to_json(const SummabilityCertificates& certs) {
  return json{{"row_sup", certs.row_sup},
              {"col_sup", certs.col_sup},
              {"both_finite", certs.both_finite},
              {"tail_bounded", certs.tail_bounded}};
}

json to_json(const CrosscheckReport& report) {
  json grades = json::array();
  for (const GradeCheck& g : report.grades) {
    grades.push_back(json{
        {"k", g.k}, {"N", g.N_k}, {"L", g.L_k}, {"radius", g.radius}});
  }
  return json{{"grades", grades}, {"ok", report.ok}, {"detail", report.detail}};
}

json contour_json(const PseudoGrid& grid) {
  json contours = json::array();
  for (const ContourSummary& c : grid.contours) {
    contours.push_back(json{{"epsilon", c.epsilon},
                            {"sublevel_points", c.sublevel_points},
                            {"disk_points", c.disk_points},
                            {"discrepancy", c.discrepancy}});
  }
  return json{{"contours", contours},
              {"nested", grid.sublevel_sets_nested},
              {"nx", grid.spec.nx},
              {"ny", grid.spec.ny},
              {"m", grid.spec.m}};
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

std::string grid_csv(const PseudoGrid& grid) {
  std::string out = "re,im,sigma_min\n";
  for (std::size_t iy = 0; iy < grid.spec.ny; ++iy) {
    for (std::size_t ix = 0; ix < grid.spec.nx; ++ix) {
      const auto z = grid.point(ix, iy);
      out += fmt17(z.real());
      out += ',';
      out += fmt17(z.imag());
      out += ',';
      out += fmt17(grid.value(ix, iy));
      out += '\n';
    }
  }
  return out;
}

std::string decay_csv(const DecayTable& table) {
  std::string out = "n,probe,grade,cesaro_norm,power_over_n,recurrence_residual\n";
  for (const DecayRow& row : table.rows) {
    std::ostringstream line;
    line << row.n << ',' << row.probe << ',' << row.grade << ','
         << fmt17(row.cesaro_norm) << ',' << fmt17(row.power_over_n) << ','
         << fmt17(row.recurrence_residual) << '\n';
    out += line.str();
  }
  return out;
}

}  // namespace bandspec

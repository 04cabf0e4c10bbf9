#include "bandspec/pseudospectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace bandspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRelTol = 1e-12;
constexpr int kMaxBisect = 160;

// Whether the Hermitian tridiagonal normal matrix A*A of the bidiagonal
// section has an eigenvalue below lam.  Sturm pivots: the count of negative
// LDL* pivots of A*A - lam I equals the number of eigenvalues below lam, so a
// single negative pivot decides the question.  Only |d|^2 and sub_n^2 enter.
bool eigenvalue_below(double dd, const std::vector<double>& sub, double lam) {
  const std::size_t m = sub.size() + 1;
  double p = dd + sub[0] * sub[0] - lam;
  for (std::size_t n = 1; n < m; ++n) {
    if (!(p > 0.0)) return true;  // negative, zero, or NaN pivot
    const double diag = dd + (n + 1 < m ? sub[n] * sub[n] : 0.0);
    p = diag - lam - dd * sub[n - 1] * sub[n - 1] / p;
  }
  return !(p > 0.0);
}

std::size_t thread_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BANDSPEC_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
  }
  return n;
}

// Chamfer two-pass distance transform on the grid, seeded at member points;
// distances in grid units scaled by the sample spacing.
std::vector<double> distance_to_set(const std::vector<char>& member,
                                    std::size_t nx, std::size_t ny, double dx,
                                    double dy) {
  std::vector<double> dist(member.size(), kInf);
  for (std::size_t i = 0; i < member.size(); ++i) {
    if (member[i]) dist[i] = 0.0;
  }
  const double diag = std::hypot(dx, dy);
  const auto relax = [&](std::size_t to, std::size_t from, double step) {
    dist[to] = std::min(dist[to], dist[from] + step);
  };
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const std::size_t i = iy * nx + ix;
      if (ix > 0) relax(i, i - 1, dx);
      if (iy > 0) relax(i, i - nx, dy);
      if (ix > 0 && iy > 0) relax(i, i - nx - 1, diag);
      if (ix + 1 < nx && iy > 0) relax(i, i - nx + 1, diag);
    }
  }
  for (std::size_t iy = ny; iy-- > 0;) {
    for (std::size_t ix = nx; ix-- > 0;) {
      const std::size_t i = iy * nx + ix;
      if (ix + 1 < nx) relax(i, i + 1, dx);
      if (iy + 1 < ny) relax(i, i + nx, dy);
      if (ix + 1 < nx && iy + 1 < ny) relax(i, i + nx + 1, diag);
      if (ix > 0 && iy + 1 < ny) relax(i, i + nx - 1, diag);
    }
  }
  return dist;
}

double hausdorff(const std::vector<char>& a, const std::vector<char>& b,
                 std::size_t nx, std::size_t ny, double dx, double dy) {
  const bool a_empty = std::find(a.begin(), a.end(), 1) == a.end();
  const bool b_empty = std::find(b.begin(), b.end(), 1) == b.end();
  if (a_empty && b_empty) return 0.0;
  if (a_empty || b_empty) return kInf;
  const std::vector<double> da = distance_to_set(a, nx, ny, dx, dy);
  const std::vector<double> db = distance_to_set(b, nx, ny, dx, dy);
  double h = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i]) h = std::max(h, db[i]);
    if (b[i]) h = std::max(h, da[i]);
  }
  return h;
}

}  // namespace

GridSpec default_grid(const BandParams& b, const WeightFamily& v) {
  const RatioAsymptotics ra = ratio_asymptotics(v);
  const double radius = ra.L * std::abs(b.s);
  const double half = radius > 0.0 ? 1.25 * radius : 0.5;
  GridSpec spec;
  spec.lo = std::complex<double>(b.r - half, -half);
  spec.hi = std::complex<double>(b.r + half, half);
  spec.weight = v;
  return spec;
}

double sigma_min(const BandParams& b, std::complex<double> alpha,
                 std::size_t m, const WeightFamily& v) {
  if (m < 1) throw std::invalid_argument("section size m must be >= 1");
  const std::complex<double> d = std::complex<double>(b.r, 0.0) - alpha;
  if (d == std::complex<double>(0.0, 0.0)) return 0.0;
  if (m == 1) return std::abs(d);

  // T_v conjugation: the subdiagonal entry in row n+1 becomes s v_{n+1}/v_n,
  // the diagonal is untouched.
  std::vector<double> sub(m - 1);
  for (std::size_t n = 0; n + 1 < m; ++n) {
    sub[n] = b.s * std::exp(v.log_ratio(n));
    if (!std::isfinite(sub[n])) {
      throw std::invalid_argument("weighted section entry overflows");
    }
  }

  // Bisection for the smallest eigenvalue of A*A.  The last diagonal entry of
  // the normal matrix is |d|^2, so the smallest eigenvalue is at most |d|^2;
  // the iteration cap bounds the work when that eigenvalue underflows in the
  // spectrum's interior.
  const double dd = std::norm(d);
  double lo = 0.0;
  double hi = dd;
  for (int iter = 0; iter < kMaxBisect && hi - lo > kRelTol * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (eigenvalue_below(dd, sub, mid) ? hi : lo) = mid;
  }
  return std::sqrt(0.5 * (lo + hi));
}

std::complex<double> PseudoGrid::point(std::size_t ix, std::size_t iy) const {
  const double dx =
      spec.nx > 1 ? (spec.hi.real() - spec.lo.real()) / double(spec.nx - 1)
                  : 0.0;
  const double dy =
      spec.ny > 1 ? (spec.hi.imag() - spec.lo.imag()) / double(spec.ny - 1)
                  : 0.0;
  return {spec.lo.real() + double(ix) * dx, spec.lo.imag() + double(iy) * dy};
}

double PseudoGrid::value(std::size_t ix, std::size_t iy) const {
  return values[iy * spec.nx + ix];
}

PseudoGrid pseudo_grid(const BandParams& b, const GridSpec& spec) {
  if (spec.nx < 1 || spec.ny < 1 || spec.m < 1) {
    throw std::invalid_argument("grid spec must have nx, ny, m >= 1");
  }
  if (!(spec.hi.real() >= spec.lo.real()) ||
      !(spec.hi.imag() >= spec.lo.imag())) {
    throw std::invalid_argument("grid box corners are inverted");
  }

  PseudoGrid grid;
  grid.spec = spec;
  grid.values.assign(spec.nx * spec.ny, 0.0);

  const std::size_t rows = spec.ny;
  const std::size_t workers = std::min(thread_count(), rows);
  std::atomic<std::size_t> next_row{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t iy = next_row.fetch_add(1);
      if (iy >= rows) return;
      for (std::size_t ix = 0; ix < spec.nx; ++ix) {
        grid.values[iy * spec.nx + ix] =
            sigma_min(b, grid.point(ix, iy), spec.m, spec.weight);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  // Contour comparison against the predicted disk on the same sample points.
  const RatioAsymptotics ra = ratio_asymptotics(spec.weight);
  const double radius = ra.L * std::abs(b.s);
  const std::complex<double> center(b.r, 0.0);
  const double dx =
      spec.nx > 1 ? (spec.hi.real() - spec.lo.real()) / double(spec.nx - 1)
                  : 1.0;
  const double dy =
      spec.ny > 1 ? (spec.hi.imag() - spec.lo.imag()) / double(spec.ny - 1)
                  : 1.0;

  std::vector<char> disk(grid.values.size(), 0);
  for (std::size_t iy = 0; iy < spec.ny; ++iy) {
    for (std::size_t ix = 0; ix < spec.nx; ++ix) {
      disk[iy * spec.nx + ix] =
          std::abs(grid.point(ix, iy) - center) <= radius ? 1 : 0;
    }
  }

  grid.sublevel_sets_nested = true;
  std::vector<char> prev;
  for (double eps : {1e-1, 1e-2, 1e-3}) {
    std::vector<char> sub(grid.values.size(), 0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
      sub[i] = grid.values[i] < eps ? 1 : 0;
      count += sub[i];
    }
    if (!prev.empty()) {
      for (std::size_t i = 0; i < sub.size(); ++i) {
        if (sub[i] && !prev[i]) grid.sublevel_sets_nested = false;
      }
    }
    const std::size_t disk_count =
        static_cast<std::size_t>(std::count(disk.begin(), disk.end(), 1));
    grid.contours.push_back(ContourSummary{
        eps, count, disk_count, hausdorff(sub, disk, spec.nx, spec.ny, dx, dy)});
    prev = std::move(sub);
  }
  return grid;
}

}  // namespace bandspec

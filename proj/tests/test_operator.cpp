#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"

#include "bandspec/band_operator.hpp"

using namespace bandspec;

TEST_CASE("apply reproduces the band action") {
  const BandParams b(1.0, -1.0);
  SeqVector e0 = SeqVector::basis(0, 4);
  const SeqVector y = apply(b, e0);
  CHECK(y.entries[0] == std::complex<double>(1.0));
  CHECK(y.entries[1] == std::complex<double>(-1.0));
  CHECK(y.entries[2] == std::complex<double>(0.0));

  SeqVector ones(5);
  ones.entries[0] = ones.entries[1] = ones.entries[2] = 1.0;
  const SeqVector t = apply(b, ones);
  CHECK(t.entries[0] == std::complex<double>(1.0));
  CHECK(t.entries[1] == std::complex<double>(0.0));
  CHECK(t.entries[2] == std::complex<double>(0.0));
  CHECK(t.entries[3] == std::complex<double>(-1.0));
  CHECK(t.entries[4] == std::complex<double>(0.0));
}

TEST_CASE("two applications give the squared column") {
  const BandParams b(2.0, 3.0);
  const SeqVector y = apply(b, apply(b, SeqVector::basis(0, 4)));
  CHECK(y.entries[0].real() == doctest::Approx(4.0));   // r^2
  CHECK(y.entries[1].real() == doctest::Approx(12.0));  // 2rs
  CHECK(y.entries[2].real() == doctest::Approx(9.0));   // s^2
}

TEST_CASE("adjoint action on basis and geometric vectors") {
  const BandParams b(2.0, 3.0);
  const SeqVector a0 = apply_adjoint(b, SeqVector::basis(0, 4));
  CHECK(a0.entries[0].real() == doctest::Approx(2.0));
  CHECK(std::abs(a0.entries[1]) == 0.0);

  const SeqVector a1 = apply_adjoint(b, SeqVector::basis(1, 4));
  CHECK(a1.entries[0].real() == doctest::Approx(3.0));
  CHECK(a1.entries[1].real() == doctest::Approx(2.0));

  const std::complex<double> q(0.4, 0.3);
  SeqVector x(32, TailFlag::Unknown);
  std::complex<double> power = 1.0;
  for (auto& e : x.entries) {
    e = power;
    power *= q;
  }
  const SeqVector y = apply_adjoint(b, x);
  const std::complex<double> factor = b.r + b.s * q;
  for (std::size_t n = 0; n + 1 < 32; ++n) {
    CHECK(std::abs(y.entries[n] - factor * x.entries[n]) <=
          1e-14 * std::abs(factor * x.entries[n]));
  }
}

TEST_CASE("power column closed form") {
  const BandParams b(2.0, 3.0);
  const SeqVector p0 = power_column(b, 0);
  CHECK(p0.value(0) == std::complex<double>(1.0));

  const SeqVector p2 = power_column(b, 2);
  CHECK(p2.value(0).real() == doctest::Approx(4.0));
  CHECK(p2.value(1).real() == doctest::Approx(12.0));
  CHECK(p2.value(2).real() == doctest::Approx(9.0));
}

TEST_CASE("binomial column at n=100 sums to one in l1 for r=s=1/2") {
  const BandParams b(0.5, 0.5);
  const SeqVector col = power_column(b, 100);
  double log_sum = -std::numeric_limits<double>::infinity();
  // l1 norm in the log domain: logsumexp over log|entries| + log_scale.
  double max_log = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k <= 100; ++k) {
    max_log = std::max(max_log, col.log_magnitude(k));
  }
  double acc = 0.0;
  for (std::size_t k = 0; k <= 100; ++k) {
    acc += std::exp(col.log_magnitude(k) - max_log);
  }
  log_sum = max_log + std::log(acc);
  CHECK(log_sum == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("power column equals iterated application up to n = 200") {
  const BandParams b(1.0, -1.0);
  SeqVector x = SeqVector::basis(0, 201);
  for (std::size_t n = 1; n <= 200; ++n) {
    x = apply(b, x);
    if (n % 40 != 0 && n != 200) continue;
    const SeqVector col = power_column(b, n);
    for (std::size_t k = 0; k <= n; ++k) {
      const double got = std::abs(x.entries[k]);
      const double want_log = col.log_magnitude(k);
      if (got == 0.0) {
        CHECK(want_log == -std::numeric_limits<double>::infinity());
      } else {
        CHECK(std::log(got) == doctest::Approx(want_log).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("cesaro mean basics and recurrence") {
  const BandParams b(0.5, 0.5);
  SeqVector e0 = SeqVector::basis(0, 64);
  const SeqVector one = cesaro_apply(b, 1, e0);
  const SeqVector direct = apply(b, e0);
  for (std::size_t k = 0; k < 64; ++k) {
    CHECK(std::abs(one.entries[k] - direct.entries[k]) <= 1e-15);
  }

  for (std::size_t n : {2, 5, 17}) {
    const SeqVector tn = cesaro_apply(b, n, e0);
    const SeqVector tn1 = cesaro_apply(b, n - 1, e0);
    SeqVector pw = SeqVector::basis(0, 64);
    for (std::size_t j = 0; j < n; ++j) pw = apply(b, pw);
    const double dn = static_cast<double>(n);
    for (std::size_t k = 0; k < 64; ++k) {
      const std::complex<double> lhs = pw.entries[k] / dn;
      const std::complex<double> rhs =
          tn.entries[k] - (dn - 1.0) / dn * tn1.entries[k];
      CHECK(std::abs(lhs - rhs) <= 1e-14);
    }
  }
}

TEST_CASE("finite sections and composition exactness") {
  const BandParams b(1.0, -1.0);
  const LowerBidiagonal s1 = finite_section(b, 1);
  CHECK(s1.entry(0, 0) == 1.0);

  const LowerBidiagonal s3 = finite_section(b, 3);
  CHECK(s3.entry(0, 0) == 1.0);
  CHECK(s3.entry(1, 0) == -1.0);
  CHECK(s3.entry(1, 1) == 1.0);
  CHECK(s3.entry(2, 1) == -1.0);
  CHECK(s3.entry(0, 1) == 0.0);

  const BandParams b2(2.0, 3.0);
  const LowerBidiagonal sec = finite_section(b2, 6);
  std::vector<double> e0(6, 0.0);
  e0[0] = 1.0;
  const std::vector<double> sq = sec.apply(sec.apply(e0));
  const SeqVector col = power_column(b2, 2);
  for (std::size_t k = 0; k < 6; ++k) {
    const double want = k <= 2 ? col.value(k).real() : 0.0;
    CHECK(sq[k] == doctest::Approx(want).epsilon(1e-14));
  }
}

TEST_CASE("truncation compatibility: sections commute with powers") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const BandParams b(0.7, -1.3);
  for (std::size_t m : {4u, 16u, 64u}) {
    const LowerBidiagonal sec = finite_section(b, m);
    std::vector<double> x(m);
    for (auto& e : x) e = unif(rng);
    SeqVector full(m);
    for (std::size_t k = 0; k < m; ++k) full.entries[k] = x[k];
    std::vector<double> sect = x;
    for (std::size_t n = 1; n <= 20; ++n) {
      sect = sec.apply(sect);
      full = apply(b, full);
      for (std::size_t k = 0; k < m; ++k) {
        CHECK(std::abs(full.entries[k].real() - sect[k]) <=
              1e-10 * std::max(1.0, std::abs(sect[k])));
      }
    }
  }
}

TEST_CASE("norm sandwich on lp") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const BandParams b(0.8, -0.6);
  const WeightFamily unit = WeightFamily::unit();
  for (double p : {1.5, 2.0, 3.0}) {
    for (int trial = 0; trial < 10; ++trial) {
      SeqVector x(48);
      for (auto& e : x.entries) e = {unif(rng), unif(rng)};
      const double nx = weighted_norm(x, p, unit).linear();
      const double ny = weighted_norm(apply(b, x), p, unit).linear();
      CHECK(ny <= (std::abs(b.r) + std::abs(b.s)) * nx * (1.0 + 1e-12));
    }
    // Basis vectors attain the stated lower bound.
    const SeqVector col = apply(b, SeqVector::basis(0, 4));
    const double basis_norm = weighted_norm(col, p, unit).linear();
    const double lower =
        std::pow(std::pow(std::abs(b.r), p) + std::pow(std::abs(b.s), p),
                 1.0 / p);
    CHECK(basis_norm >= lower * (1.0 - 1e-12));
  }
}

TEST_CASE("weighted norm bound |r| + N|s|") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const BandParams b(1.0, 1.0);
  std::vector<WeightFamily> weights;
  weights.push_back(WeightFamily::unit());
  weights.push_back(
      WeightFamily::geometric(2.0, AlphaSequence::affine(1.0, 0.0)));
  weights.push_back(
      WeightFamily::geometric(std::exp(1.0), AlphaSequence::log_shift()));
  for (const WeightFamily& v : weights) {
    const RatioAsymptotics ra = ratio_asymptotics(v);
    const double bound = std::abs(b.r) + ra.N * std::abs(b.s);
    for (int trial = 0; trial < 5; ++trial) {
      SeqVector x(32);
      for (auto& e : x.entries) e = {unif(rng), unif(rng)};
      const double nx = weighted_norm(x, 2.0, v).linear();
      const double ny = weighted_norm(apply(b, x), 2.0, v).linear();
      CHECK(ny <= bound * nx * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("both candidate lower norm bounds are reported") {
  const BandParams b(1.0, 1.0);
  const RatioAsymptotics ra = ratio_asymptotics(
      WeightFamily::geometric(std::exp(1.0), AlphaSequence::log_shift()));
  const NormBounds nb = operator_norm_bounds(b, 2.0, ra);
  CHECK(nb.lower_stated ==
        doctest::Approx(std::sqrt(1.0 + 2.0)).epsilon(1e-12));
  CHECK(nb.lower_quotient ==
        doctest::Approx(std::sqrt(1.0 + 4.0)).epsilon(1e-12));
  CHECK(nb.upper == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(nb.bounds_disagree);

  const NormBounds unit_nb =
      operator_norm_bounds(b, 2.0, RatioAsymptotics{1.0, 1.0, 1.0, true});
  CHECK_FALSE(unit_nb.bounds_disagree);
}

TEST_CASE("band parameters must be nonzero") {
  CHECK_THROWS_AS(BandParams(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(BandParams(1.0, 0.0), std::invalid_argument);
}

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>

#include "extremal/cm_lattice.hpp"
#include "extremal/error.hpp"
#include "extremal/orbit_engine.hpp"
#include "oracles.hpp"

using namespace extremal;

namespace {

std::complex<double> zeta(int p, long long e) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e % p) / p);
}

// Straight scan of the box with a floating determinant and phi_j(alpha)
// evaluated from all p-1 roots of unity.
std::optional<std::vector<int>> box_scan(int p, const std::vector<int>& members, int bound) {
  const int g = (p - 1) / 2;
  std::vector<int> c(static_cast<std::size_t>(g), -bound);
  auto coeff = [&](int k) {
    k %= p;
    return k <= g ? c[static_cast<std::size_t>(k - 1)] : -c[static_cast<std::size_t>(p - k - 1)];
  };
  while (true) {
    bool positive = true;
    for (int j : members) {
      std::complex<double> alpha = 0;
      for (int k = 1; k < p; ++k) alpha += static_cast<double>(coeff(k)) * zeta(p, static_cast<long long>(j) * k);
      if (alpha.imag() / p <= 1e-12) positive = false;
    }
    if (positive) {
      Eigen::MatrixXd e(p - 1, p - 1);
      for (int a = 0; a < p - 1; ++a)
        for (int b = 0; b < p - 1; ++b) {
          const int d = ((b - a) % p + p) % p;
          e(a, b) = d == 0 ? 0.0 : coeff(d);
        }
      if (std::lround(e.determinant()) == 1) return c;
    }
    int i = g - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == bound) c[static_cast<std::size_t>(i--)] = -bound;
    if (i < 0) return std::nullopt;
    ++c[static_cast<std::size_t>(i)];
  }
}

}  // namespace

TEST_CASE("embedding columns are powers of the chosen roots") {
  const PrimeContext ctx(7);
  const CmType c(ctx, {1, 2, 4});
  const CmEmbedding emb = embed(ctx, c);
  REQUIRE(emb.basis_images.rows() == 3);
  REQUIRE(emb.basis_images.cols() == 6);
  for (int row = 0; row < 3; ++row)
    for (int k = 0; k < 6; ++k)
      CHECK(std::abs(emb.basis_images(row, k) - zeta(7, static_cast<long long>(c.members()[row]) * k)) < 1e-12);
  for (int row = 0; row < 3; ++row) CHECK(emb.basis_images(row, 0) == std::complex<double>(1.0, 0.0));

  const PrimeContext three(3);
  const CmEmbedding e3 = embed(three, CmType(three, {1}));
  REQUIRE(e3.basis_images.cols() == 2);
  CHECK(std::abs(e3.basis_images(0, 1) - std::complex<double>(-0.5, std::sqrt(3.0) / 2)) < 1e-12);
}

TEST_CASE("riemann form matches the numeric trace") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int p : {3, 5, 7, 11, 13}) {
    const PrimeContext ctx(p);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> c(static_cast<std::size_t>(ctx.g()));
      for (int& x : c) x = dist(rng);
      for (int a = 0; a < p - 1; ++a)
        for (int b = 0; b < p - 1; ++b)
          CHECK(std::abs(riemann_form_value(ctx, c, a, b) - oracle::numeric_trace_form(p, c, a, b)) < 1e-9);
    }
  }
}

TEST_CASE("odd extension of the coefficients") {
  const PrimeContext ctx(7);
  const std::vector<int> c{4, -1, 2};
  CHECK(odd_coefficient(ctx, c, 0) == 0);
  CHECK(odd_coefficient(ctx, c, 1) == 4);
  CHECK(odd_coefficient(ctx, c, 6) == -4);
  CHECK(odd_coefficient(ctx, c, 5) == 1);
  CHECK(odd_coefficient(ctx, c, -1) == -4);
  CHECK(odd_coefficient(ctx, c, 15) == 4);
}

TEST_CASE("the genus one polarization") {
  const PrimeContext ctx(3);
  const CmType c(ctx, {1});
  const PolarizationForm pol = find_polarization(ctx, c, 1);
  CHECK(pol.c == std::vector<int>{1});
  CHECK(pol.form == ZMatrix::from_rows({{0, 1}, {-1, 0}}));
  CHECK(pol.pfaffian == 1);
  CHECK(pol.positive());
}

TEST_CASE("search agrees with a plain box scan") {
  for (int p : {5, 7, 11, 13}) {
    const PrimeContext ctx(p);
    for (const OrbitClass& cls : orbit_classes(ctx, kDefaultEnumerationCap)) {
      for (int bound : {1, 2}) {
        if (p == 13 && bound == 2) continue;
        const auto expected = box_scan(p, cls.canonical.members(), bound);
        if (expected) {
          const PolarizationForm pol = find_polarization(ctx, cls.canonical, bound);
          CHECK(pol.c == *expected);
          CHECK(pol.principal());
          CHECK(pol.positive());
        } else {
          CHECK_THROWS_AS(find_polarization(ctx, cls.canonical, bound), Error);
        }
      }
    }
  }
}

TEST_CASE("every class up to 23 is realized and its automorphism checks out") {
  for (int p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    const PrimeContext ctx(p);
    for (const OrbitClass& cls : orbit_classes(ctx, kDefaultEnumerationCap)) {
      const PolarizationForm pol = find_polarization(ctx, cls.canonical, 1);
      const PeriodData data = period_matrix(embed(ctx, cls.canonical), pol);
      CHECK(data.basis.transpose() * data.form * data.basis == ZMatrix::standard_symplectic(static_cast<std::size_t>(ctx.g())));
      CHECK(data.symmetry_residual < kAlgebraicTolerance);
      CHECK(data.min_im_eigenvalue > kAlgebraicTolerance);
      const AutomorphismReport report = automorphism_check(data);
      CHECK_MESSAGE(report.all(), "p=", p, " fix=", report.fix_residual, " spec=", report.spectrum_residual);
      CHECK(report.fix_residual < kCompositionTolerance);
      CHECK(report.spectrum_residual < kCompositionTolerance);
    }
  }
}

TEST_CASE("the modular action has order p and is symplectic") {
  const PrimeContext ctx(11);
  const CmType c(ctx, {1, 2, 3, 4, 6});
  const PeriodData data = period_matrix(embed(ctx, c), find_polarization(ctx, c, 5));
  const ZMatrix gamma = modular_action(data);
  const ZMatrix j = ZMatrix::standard_symplectic(5);
  CHECK(gamma.transpose() * j * gamma == j);
  CHECK(matrix_power(gamma, 11) == ZMatrix::identity(10));
  CHECK_FALSE(gamma == ZMatrix::identity(10));
}

TEST_CASE("a non-positive principal form violates the Riemann relations") {
  int found = 0;
  for (int p : {5, 7}) {
    const PrimeContext ctx(p);
    const int g = ctx.g();
    for (const CmType& c : enumerate_cm_types(ctx, kDefaultEnumerationCap)) {
      std::vector<int> coeffs(static_cast<std::size_t>(g), -1);
      while (true) {
        const PolarizationForm pol = make_polarization(ctx, c, coeffs);
        bool mixed_sign = false, negative = false, positive = false;
        for (double v : pol.alpha_imag) {
          if (v > 1e-9) positive = true;
          if (v < -1e-9) negative = true;
        }
        mixed_sign = positive && negative;
        if (pol.principal() && mixed_sign) {
          CHECK_THROWS_WITH_AS(period_matrix(embed(ctx, c), pol), "Riemann relations violated", Error);
          ++found;
        }
        int i = g - 1;
        while (i >= 0 && coeffs[static_cast<std::size_t>(i)] == 1) coeffs[static_cast<std::size_t>(i--)] = -1;
        if (i < 0) break;
        ++coeffs[static_cast<std::size_t>(i)];
      }
    }
  }
  CHECK(found > 0);
}

TEST_CASE("a negated polarization violates the Riemann relations") {
  for (int p : {3, 7, 11}) {
    const PrimeContext ctx(p);
    for (const OrbitClass& cls : orbit_classes(ctx, kDefaultEnumerationCap)) {
      std::vector<int> c = find_polarization(ctx, cls.canonical, 2).c;
      for (int& x : c) x = -x;
      const PolarizationForm flipped = make_polarization(ctx, cls.canonical, c);
      CHECK(flipped.principal());
      CHECK_THROWS_WITH_AS(period_matrix(embed(ctx, cls.canonical), flipped), "Riemann relations violated", Error);
    }
  }
}

TEST_CASE("genus one period point is the hexagonal one") {
  const PrimeContext ctx(3);
  const CmType c(ctx, {1});
  const PeriodData data = period_matrix(embed(ctx, c), find_polarization(ctx, c, 1));
  const std::complex<double> reduced = reduce_to_fundamental_domain(data.tau(0, 0));
  const std::complex<double> rho = std::polar(1.0, std::numbers::pi / 3);
  const std::complex<double> rho2 = std::polar(1.0, 2 * std::numbers::pi / 3);
  CHECK(std::min(std::abs(reduced - rho), std::abs(reduced - rho2)) < 1e-9);
  CHECK(reduce_to_fundamental_domain({0.0, 0.5}) == std::complex<double>(0.0, 2.0));
}

TEST_CASE("cyclotomic companion") {
  for (int p : oracle::kSmallPrimes) {
    const PrimeContext ctx(p);
    const ZMatrix m = cyclotomic_companion(ctx);
    CHECK(matrix_power(m, static_cast<unsigned>(p)) == ZMatrix::identity(static_cast<std::size_t>(p - 1)));
    ZMatrix sum(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(p - 1));
    ZMatrix power = ZMatrix::identity(static_cast<std::size_t>(p - 1));
    for (int k = 0; k < p; ++k) {
      for (int a = 0; a < p - 1; ++a)
        for (int b = 0; b < p - 1; ++b) sum(a, b) += power(a, b);
      power = power * m;
    }
    CHECK(sum == ZMatrix(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(p - 1)));
  }
}

TEST_CASE("an empty box is reported as exhausted") {
  const PrimeContext ctx(29);
  const CmType c(ctx, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15});
  try {
    find_polarization(ctx, c, 1);
    FAIL("expected exhaustion");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PolarizationExhausted);
    CHECK(e.exit_code() == 4);
  }
  CHECK_THROWS_AS(find_polarization(PrimeContext(5), CmType(PrimeContext(5), {1, 2}), 0), Error);
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rothyp/errors.hpp"
#include "rothyp/symfunc.hpp"

using namespace rothyp;
using rothyp::testing::make_rng;
using rothyp::testing::random_turning_profile;
using rothyp::testing::relative_error;
using rothyp::testing::sigma_bruteforce;
using rothyp::testing::uniform;

namespace {

std::vector<double> random_values(std::mt19937& rng, int m) {
  std::vector<double> v(static_cast<std::size_t>(m));
  for (auto& x : v) x = uniform(rng, -2.0, 2.0);
  return v;
}

}  // namespace

TEST_CASE("elementary symmetric functions") {
  const std::vector<double> k{1.0, 2.0, 3.0};
  CHECK(elementary_symmetric(0, k) == 1.0);
  CHECK(elementary_symmetric(1, k) == 6.0);
  CHECK(elementary_symmetric(2, k) == 11.0);
  CHECK(elementary_symmetric(3, k) == 6.0);
  CHECK(elementary_symmetric(4, k) == 0.0);
  CHECK(reduced_symmetric(0, 1, k) == 5.0);
  CHECK(reduced_symmetric(2, 2, k) == 2.0);
  CHECK_THROWS_AS(elementary_symmetric(-1, k), InvalidOrder);
  CHECK_THROWS_AS(reduced_symmetric(3, 1, k), InvalidOrder);

  auto rng = make_rng(41);
  for (int m = 1; m <= 9; ++m) {
    const auto v = random_values(rng, m);
    const auto all = elementary_symmetric_all(v);
    for (int j = 0; j <= m; ++j) {
      const double brute = sigma_bruteforce(j, v);
      CHECK(std::abs(all[static_cast<std::size_t>(j)] - brute) < 1e-12 * std::max(1.0, std::abs(brute)));
    }
  }
}

TEST_CASE("symmetric function set") {
  const std::vector<double> k{0.5, -1.0, 2.0};
  const auto s = symmetric_functions(k);
  CHECK(s.n == 4);
  CHECK(s.at(0) == 1.0);
  CHECK(s.at(1) == 1.5);
  CHECK(s.at(2) == doctest::Approx(-0.5 + 1.0 - 2.0));
  CHECK(s.at(3) == -1.0);
  CHECK(s.at(4) == 0.0);
  CHECK_THROWS_AS(s.at(-1), InvalidOrder);

  // s_1 = (n-1) H and s_{n-1} = K.
  auto rng = make_rng(42);
  for (int n = 3; n <= 7; ++n) {
    const auto spec = shape_spectrum(random_turning_profile(rng), 0.1, n);
    const auto set = symmetric_functions(spec);
    CHECK(relative_error(set.at(1), (n - 1) * spec.H) < 1e-12);
    CHECK(relative_error(set.at(n - 1), spec.K) < 1e-12);
  }
}

TEST_CASE("Newton transformations") {
  const std::vector<double> k{1.0, 2.0, 3.0};
  const auto p0 = newton_transform(0, k);
  CHECK(p0.diag == std::vector<double>{1.0, 1.0, 1.0});
  const auto p1 = newton_transform(1, std::vector<double>{2.0, 3.0, 3.0});
  CHECK(p1.diag == std::vector<double>{6.0, 5.0, 5.0});
  CHECK_THROWS_AS(newton_transform(3, k), InvalidOrder);
  CHECK_THROWS_AS(newton_transform(-1, k), InvalidOrder);

  auto rng = make_rng(43);
  for (int m = 2; m <= 7; ++m) {
    const auto v = random_values(rng, m);
    const auto s = elementary_symmetric_all(v);
    for (int kk = 0; kk <= m - 1; ++kk) {
      const auto P = newton_transform(kk, v);
      // Eigenvalue of P_k along e_i is sigma_k with k_i removed.
      for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(std::abs(P.diag[i] - reduced_symmetric(i, kk, v)) < 1e-10);
      }
      double trace = 0.0, trace_s = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        trace += P.diag[i];
        trace_s += P.diag[i] * v[i];
      }
      CHECK(std::abs(trace - (m - kk) * s[static_cast<std::size_t>(kk)]) < 1e-10);
      CHECK(std::abs(trace_s - (kk + 1) * s[static_cast<std::size_t>(kk + 1)]) < 1e-10);
      if (kk >= 1) {
        // P_k = s_k I - S P_{k-1}.
        const auto prev = newton_transform(kk - 1, v);
        for (std::size_t i = 0; i < v.size(); ++i) {
          CHECK(std::abs(P.diag[i] - (s[static_cast<std::size_t>(kk)] - v[i] * prev.diag[i])) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("printed turning-angle forms of s_m") {
  SUBCASE("top degree is K up to a constant sign") {
    auto rng = make_rng(44);
    for (int n = 3; n <= 7; ++n) {
      const auto prof = random_turning_profile(rng);
      const auto pts = prof.domain().interior_samples(25);
      const auto audit = measure_printed_sigma_flags(prof, n, pts);
      REQUIRE(audit.flags.size() == static_cast<std::size_t>(n - 1));
      CHECK(audit.flags.back().constant);
    }
  }
  SUBCASE("lower degrees differ from sigma_m by a non-constant factor") {
    auto rng = make_rng(45);
    for (int n = 4; n <= 7; ++n) {
      const auto prof = random_turning_profile(rng);
      const auto pts = prof.domain().interior_samples(25);
      const auto audit = measure_printed_sigma_flags(prof, n, pts);
      CHECK(audit.convention_mismatch);
      CHECK(audit.diagnostic.find("s_1") != std::string::npos);
      for (int m = 1; m <= n - 2; ++m) CHECK_FALSE(audit.flags[static_cast<std::size_t>(m - 1)].constant);
    }
  }
  SUBCASE("measured curvatures reproduce sigma_m") {
    auto rng = make_rng(46);
    for (int n = 3; n <= 7; ++n) {
      const auto prof = random_turning_profile(rng);
      for (double r : prof.domain().interior_samples(7)) {
        const auto a = turning_sigma(prof.turning(r), n);
        const auto b = symmetric_functions(shape_spectrum(prof, r, n));
        for (int m = 1; m <= n - 1; ++m) CHECK(std::abs(a.at(m) - b.at(m)) < 1e-10);
      }
    }
  }
  SUBCASE("straight profile has s_{n-1} = 0") {
    const auto line = ProfileCurve::line(1.0, 0.6, 0.0, 0.8, {0.0, 2.0});
    for (int n = 3; n <= 7; ++n) CHECK(std::abs(printed_sigma(line.turning(0.5), n).at(n - 1)) < 1e-15);
  }
  SUBCASE("sphere has |s_{n-1}| = rho^{-(n-1)}") {
    const double rho = 1.4;
    const auto circle = ProfileCurve::circle(rho, {0.1, 4.0});
    for (int n = 3; n <= 7; ++n) {
      const auto e = printed_sigma_closed_forms(circle, 1.1, n);
      CHECK(std::abs(e.printed.at(n - 1)) == doctest::Approx(std::pow(rho, -(n - 1))).epsilon(1e-12));
      CHECK(std::abs(e.sigma.at(n - 1)) == doctest::Approx(std::pow(rho, -(n - 1))).epsilon(1e-12));
      CHECK(e.flags.size() == static_cast<std::size_t>(n - 1));
    }
  }
  SUBCASE("non-unit-speed profile is rejected") {
    const auto slow = ProfileCurve::line(1.0, 1.0, 0.0, 1.0, {0.0, 1.0});
    CHECK_THROWS_AS(printed_sigma_closed_forms(slow, 0.5, 4), ConventionError);
    CHECK_THROWS_AS(grad_s_nm2(slow, 0.5, 4), ConventionError);
  }
}

TEST_CASE("gradient of s_{n-2}") {
  SUBCASE("cylinder and sphere have constant s_{n-2}") {
    const auto cyl = ProfileCurve::cylinder(0.7, {-1.0, 1.0});
    const auto sph = ProfileCurve::circle(1.3, {0.1, 4.0});
    for (int n = 3; n <= 7; ++n) {
      CHECK(std::abs(grad_s_nm2(cyl, 0.2, n).printed) < 1e-14);
      CHECK(std::abs(grad_s_nm2(cyl, 0.2, n).sigma) < 1e-14);
      CHECK(std::abs(grad_s_nm2(sph, 1.0, n).printed) < 1e-12);
      CHECK(std::abs(grad_s_nm2(sph, 1.0, n).sigma) < 1e-12);
    }
  }
  SUBCASE("analytic derivative against central differences of sigma_{n-2}") {
    auto rng = make_rng(47);
    for (int n = 3; n <= 7; ++n) {
      const auto prof = random_turning_profile(rng);
      auto sigma = [&](double x) { return symmetric_functions(shape_spectrum(prof, x, n)).at(n - 2); };
      for (double r : prof.domain().interior_samples(5, 0.2)) {
        const double fd = rothyp::testing::richardson_derivative(sigma, r, 1e-3);
        CHECK(std::abs(sigma_derivative(prof.turning(r), n, n - 2) - fd) < 1e-6 * std::max(1.0, std::abs(fd)));
      }
    }
  }
  SUBCASE("printed gradient carries the flag eps") {
    auto rng = make_rng(48);
    for (int n = 3; n <= 7; ++n) {
      const auto prof = random_turning_profile(rng);
      for (double r : prof.domain().interior_samples(9)) {
        const auto g = grad_s_nm2(prof, r, n);
        CHECK(g.flag == epsilon(n));
        CHECK(relative_error(g.sigma, epsilon(n) * g.printed) < 1e-10);
      }
    }
  }
  SUBCASE("gradient is along the profile direction") {
    auto rng = make_rng(49);
    for (int n = 3; n <= 6; ++n) {
      const auto prof = random_turning_profile(rng);
      const double r = 0.05;
      const auto g = grad_s_nm2(prof, r, n);
      CHECK(g.direction.size() == n);
      CHECK(std::abs(g.direction.norm() - 1.0) < 1e-14);
      // s_{n-2} is constant along the rotation orbits.
      auto p = rothyp::testing::random_chart(rng, r, n);
      const double here = symmetric_functions(shape_spectrum(prof, r, n)).at(n - 2);
      CHECK(std::abs(symmetric_functions(shape_spectrum_at(prof, p)).at(n - 2) - here) < 1e-10);
    }
  }
  SUBCASE("n = 3 meets the 1/sin R factor on a plane") {
    const auto plane = ProfileCurve::plane(1.0, {0.1, 2.0});
    CHECK_THROWS_AS(grad_s_nm2(plane, 1.0, 3), SingularFormula);
    CHECK_NOTHROW(grad_s_nm2(plane, 1.0, 4));
  }
  SUBCASE("degree bounds") {
    const auto sph = ProfileCurve::circle(1.0, {0.1, 3.0});
    CHECK_THROWS_AS(sigma_derivative(sph.turning(1.0), 4, 0), InvalidOrder);
    CHECK_THROWS_AS(sigma_derivative(sph.turning(1.0), 4, 4), InvalidOrder);
  }
}

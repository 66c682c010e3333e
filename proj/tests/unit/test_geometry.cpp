#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rothyp/conventions.hpp"
#include "rothyp/errors.hpp"
#include "rothyp/geometry.hpp"

using namespace rothyp;
using rothyp::testing::make_rng;
using rothyp::testing::random_chart;
using rothyp::testing::random_turning_profile;
using rothyp::testing::uniform;

namespace {

const double pi = std::numbers::pi;

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

ProfileCurve sphere(double rho) { return ProfileCurve::circle(rho, {0.1 * rho, pi * rho - 0.1 * rho}); }

}  // namespace

TEST_CASE("epsilon is -1 for odd n and +1 for even n") {
  CHECK(epsilon(3) == -1);
  CHECK(epsilon(4) == 1);
  CHECK(epsilon(7) == -1);
  CHECK_THROWS_AS(epsilon(2), InvalidDimension);
}

TEST_CASE("rotation matrix") {
  SUBCASE("zero angle is the identity") {
    const std::vector<double> a{0.0};
    CHECK(max_abs(rotation_matrix(a, 3) - Mat::Identity(3, 3)) == 0.0);
  }
  SUBCASE("n = 3 at a quarter turn") {
    const std::vector<double> a{pi / 2};
    Mat expected(3, 3);
    expected << 0, -1, 0, 1, 0, 0, 0, 0, 1;
    CHECK(max_abs(rotation_matrix(a, 3) - expected) < 1e-15);
  }
  SUBCASE("orthogonal with unit determinant and fixed axis") {
    auto rng = make_rng(11);
    for (int n = 3; n <= 7; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> a(static_cast<std::size_t>(n - 2));
        for (auto& x : a) x = uniform(rng, -pi, pi);
        const Mat Z = rotation_matrix(a, n);
        CHECK(max_abs(Z.transpose() * Z - Mat::Identity(n, n)) < 1e-12);
        CHECK(std::abs(Z.determinant() - 1.0) < 1e-12);
        Vec axis = Vec::Zero(n);
        axis[n - 1] = 1.0;
        CHECK((Z * axis - axis).norm() < 1e-15);
      }
    }
  }
  SUBCASE("columns are u and its normalized angular derivatives") {
    // Independent oracle: central differences of the immersion of the unit circle profile
    // at f = 1, phi = 0, normalized by the product of the trailing cosines.
    auto rng = make_rng(12);
    const auto unit = ProfileCurve::line(1.0, 0.0, 0.0, 1.0, {-1.0, 1.0});
    for (int n = 3; n <= 6; ++n) {
      auto p = random_chart(rng, 0.0, n);
      const Mat Z = rotation_matrix(p.angles, n);
      CHECK((Z.col(0) - immerse(unit, p)).norm() < 1e-12);
      for (int j = 1; j <= n - 2; ++j) {
        const double h = 1e-5;
        auto plus = p, minus = p;
        plus.angles[static_cast<std::size_t>(j - 1)] += h;
        minus.angles[static_cast<std::size_t>(j - 1)] -= h;
        Vec d = (immerse(unit, plus) - immerse(unit, minus)) / (2 * h);
        double trailing = 1.0;
        for (int l = j + 1; l <= n - 2; ++l) trailing *= std::cos(p.angles[static_cast<std::size_t>(l - 1)]);
        CHECK((Z.col(j) - d / trailing).norm() < 1e-8);
      }
    }
  }
  SUBCASE("errors") {
    const std::vector<double> none;
    CHECK_THROWS_AS(rotation_matrix(none, 2), InvalidDimension);
    const std::vector<double> two{0.1, 0.2};
    CHECK_THROWS_AS(rotation_matrix(two, 3), InvalidDimension);
  }
}

TEST_CASE("immersion") {
  SUBCASE("zero angles give the profile point") {
    const auto c = sphere(1.3);
    const Vec x = immerse(c, ChartPoint::origin(1.0, 5));
    const auto j = c.jet(1.0);
    CHECK(x[0] == doctest::Approx(j.f).epsilon(1e-15));
    CHECK(x.segment(1, 3).norm() == 0.0);
    CHECK(x[4] == doctest::Approx(j.phi).epsilon(1e-15));
  }
  SUBCASE("circle profile lies on the sphere of radius rho") {
    auto rng = make_rng(13);
    const double rho = 1.7;
    const auto c = sphere(rho);
    for (int n = 3; n <= 6; ++n) {
      for (int i = 0; i < 20; ++i) {
        const auto p = random_chart(rng, uniform(rng, 0.2, 5.0), n);
        CHECK(std::abs(immerse(c, p).norm() - rho) < 1e-12);
      }
    }
  }
  SUBCASE("product-of-cosines form agrees with the rotation form") {
    auto rng = make_rng(14);
    for (int n = 3; n <= 6; ++n) {
      const auto prof = random_turning_profile(rng);
      for (int i = 0; i < 100; ++i) {
        const auto p = random_chart(rng, uniform(rng, -0.35, 0.35), n);
        const Vec a = immerse(prof, p);
        const Vec b = immerse_by_rotation(prof, p);
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
        const auto j = prof.jet(p.r);
        CHECK(a[n - 1] == doctest::Approx(j.phi).epsilon(1e-14));
        CHECK(std::abs(a.head(n - 1).norm() - std::abs(j.f)) < 1e-12);
      }
    }
  }
  SUBCASE("outside the domain") {
    const auto c = sphere(1.0);
    CHECK_THROWS_AS(immerse(c, ChartPoint::origin(4.0, 3)), DomainError);
  }
}

TEST_CASE("adapted frame") {
  SUBCASE("horizontal line gives an axis-aligned normal") {
    const auto plane = ProfileCurve::plane(2.0, {0.5, 3.0});
    const auto frame = adapted_frame(plane, ChartPoint::origin(1.0, 3));
    CHECK(std::abs(std::abs(frame.gauss[2]) - 1.0) < 1e-15);
    CHECK(frame.gauss.head(2).norm() < 1e-15);
    CHECK(frame.epsilon == -1);
  }
  SUBCASE("sphere normal is eps times the position over rho") {
    auto rng = make_rng(15);
    const double rho = 0.8;
    const auto c = sphere(rho);
    for (int n = 3; n <= 6; ++n) {
      for (int i = 0; i < 20; ++i) {
        const auto p = random_chart(rng, uniform(rng, 0.1, 2.4), n);
        const auto frame = adapted_frame(c, p);
        CHECK((frame.gauss - epsilon(n) * immerse(c, p) / rho).norm() < 1e-12);
      }
    }
  }
  SUBCASE("frame is orthonormal and G = eps (phi' u, -f')") {
    auto rng = make_rng(16);
    for (int n = 3; n <= 6; ++n) {
      for (int i = 0; i < 30; ++i) {
        const auto prof = random_turning_profile(rng);
        const auto p = random_chart(rng, uniform(rng, -0.35, 0.35), n);
        const auto frame = adapted_frame(prof, p);
        const Mat F = frame.as_matrix();
        CHECK(max_abs(F.transpose() * F - Mat::Identity(n, n)) < 1e-10);
        const auto j = prof.jet(p.r);
        const Vec u = immerse_by_rotation(ProfileCurve::line(1.0, 0.0, 0.0, 1.0, {-1, 1}),
                                          ChartPoint{0.0, p.angles});
        Vec expected(n);
        expected.head(n - 1) = j.dphi * u.head(n - 1);
        expected[n - 1] = -j.df;
        CHECK((frame.gauss - epsilon(n) * expected).norm() < 1e-12);
      }
    }
  }
  SUBCASE("degenerate chart") {
    const auto c = sphere(1.0);
    ChartPoint p{1.0, {0.3, pi / 2}};
    CHECK_THROWS_AS(adapted_frame(c, p), DegenerateChart);
    CHECK_THROWS_AS(fundamental_forms(c, p), DegenerateChart);
  }
}

TEST_CASE("generalized cross product") {
  auto basis = [](int n, int i) {
    Vec e = Vec::Zero(n);
    e[i] = 1.0;
    return e;
  };
  SUBCASE("canonical bases") {
    std::vector<Vec> three{basis(3, 0), basis(3, 1)};
    CHECK((generalized_cross(three) - basis(3, 2)).norm() == 0.0);
    std::vector<Vec> four{basis(4, 0), basis(4, 1), basis(4, 2)};
    CHECK((generalized_cross(four) + basis(4, 3)).norm() == 0.0);
  }
  SUBCASE("matches the ordinary cross product in E^3") {
    auto rng = make_rng(17);
    for (int i = 0; i < 50; ++i) {
      Eigen::Vector3d a, b;
      for (int k = 0; k < 3; ++k) {
        a[k] = uniform(rng, -1, 1);
        b[k] = uniform(rng, -1, 1);
      }
      std::vector<Vec> in{a, b};
      CHECK((generalized_cross(in) - Vec(a.cross(b))).norm() < 1e-14);
    }
  }
  SUBCASE("orthogonal to inputs and antisymmetric") {
    auto rng = make_rng(18);
    for (int n = 3; n <= 7; ++n) {
      std::vector<Vec> in;
      for (int i = 0; i < n - 1; ++i) {
        Vec v(n);
        for (int k = 0; k < n; ++k) v[k] = uniform(rng, -1, 1);
        in.push_back(v);
      }
      const Vec c = generalized_cross(in);
      for (const auto& v : in) CHECK(std::abs(c.dot(v)) < 1e-10 * c.norm() * v.norm());
      std::swap(in[0], in[1]);
      CHECK((generalized_cross(in) + c).norm() < 1e-12 * std::max(1.0, c.norm()));
    }
  }
  SUBCASE("duplicated input gives zero") {
    Vec v(4);
    v << 1, 2, 3, 4;
    std::vector<Vec> in{v, v, basis(4, 0)};
    CHECK(generalized_cross(in).norm() < 1e-14);
  }
}

TEST_CASE("fundamental forms") {
  SUBCASE("unit-speed profile has g11 = 1 and diagonal forms") {
    auto rng = make_rng(19);
    for (int n = 3; n <= 6; ++n) {
      const auto prof = random_turning_profile(rng);
      const auto p = random_chart(rng, 0.1, n);
      const auto ff = fundamental_forms(prof, p);
      CHECK(std::abs(ff.first(0, 0) - 1.0) < 1e-12);
      Mat I = ff.first, II = ff.second;
      I.diagonal().setZero();
      II.diagonal().setZero();
      CHECK(max_abs(I) < 1e-12);
      CHECK(max_abs(II) < 1e-12);
      CHECK(ff.detI > 0.0);
    }
  }
  SUBCASE("n = 3 cylinder") {
    const double c = 1.5;
    const auto cyl = ProfileCurve::cylinder(c, {-1.0, 1.0});
    const auto ff = fundamental_forms(cyl, ChartPoint{0.2, {0.7}});
    CHECK(ff.first(0, 0) == doctest::Approx(1.0));
    CHECK(ff.first(1, 1) == doctest::Approx(c * c));
    CHECK(std::abs(ff.second(0, 0)) < 1e-15);
    CHECK(std::abs(std::abs(ff.second(1, 1)) - c) < 1e-14);
  }
  SUBCASE("diagonal entries against the displayed metric and second form") {
    auto rng = make_rng(20);
    for (int n = 3; n <= 6; ++n) {
      FlagMeter h11, hjj;
      for (int i = 0; i < 20; ++i) {
        const auto prof = random_turning_profile(rng);
        const auto p = random_chart(rng, uniform(rng, -0.3, 0.3), n);
        const auto ff = fundamental_forms(prof, p);
        const auto j = prof.jet(p.r);
        const double sp = j.speed_squared();
        const double eps = epsilon(n);
        CHECK(ff.first(0, 0) == doctest::Approx(sp).epsilon(1e-12));
        h11.add(ff.second(0, 0), eps * (j.df * j.d2phi - j.d2f * j.dphi) / std::sqrt(sp));
        for (int a = 1; a <= n - 2; ++a) {
          double cos2 = 1.0;
          for (int l = a; l < n - 2; ++l) cos2 *= std::pow(std::cos(p.angles[static_cast<std::size_t>(l)]), 2);
          CHECK(ff.first(a, a) == doctest::Approx(j.f * j.f * cos2).epsilon(1e-12));
          hjj.add(ff.second(a, a), eps * j.f * j.dphi * cos2 / std::sqrt(sp));
        }
      }
      // Measured sign of the displayed second form relative to <X_ab, G>.
      CHECK(h11.result().constant);
      CHECK(h11.result().value == -1);
      CHECK(hjj.result().constant);
      CHECK(hjj.result().value == -1);
    }
  }
  SUBCASE("det II / det I equals the product of principal curvatures") {
    auto rng = make_rng(21);
    for (int n = 3; n <= 6; ++n) {
      for (int i = 0; i < 20; ++i) {
        const auto prof = random_turning_profile(rng);
        const auto p = random_chart(rng, uniform(rng, -0.3, 0.3), n);
        const auto ff = fundamental_forms(prof, p);
        const auto s = shape_spectrum_at(prof, p);
        const Mat S = ff.first.inverse() * ff.second;
        CHECK(rothyp::testing::relative_error(ff.detII / ff.detI, s.K) < 1e-10);
        CHECK(rothyp::testing::relative_error(S.determinant(), s.K) < 1e-10);
        CHECK(rothyp::testing::relative_error(S.trace() / (n - 1), s.H) < 1e-10);
      }
    }
  }
}

TEST_CASE("shape spectrum") {
  SUBCASE("plane is flat and minimal") {
    const auto plane = ProfileCurve::plane(1.0, {0.1, 2.0});
    for (int n = 3; n <= 8; ++n) {
      const auto s = shape_spectrum(plane, 1.0, n);
      CHECK(std::abs(s.K) < 1e-12);
      CHECK(std::abs(s.H) < 1e-12);
    }
  }
  SUBCASE("cylinder is flat with H = -eps (n-2) / ((n-1) c)") {
    const double c = 0.7;
    const auto cyl = ProfileCurve::cylinder(c, {-1.0, 1.0});
    for (int n = 3; n <= 8; ++n) {
      const auto s = shape_spectrum(cyl, 0.3, n);
      CHECK(std::abs(s.K) < 1e-12);
      CHECK(rothyp::testing::relative_error(s.H, -epsilon(n) * (n - 2) / ((n - 1) * c)) < 1e-10);
    }
  }
  SUBCASE("sphere is umbilic with |k| = 1 / rho") {
    const double rho = 2.5;
    const auto c = sphere(rho);
    for (int n = 3; n <= 6; ++n) {
      const auto s = shape_spectrum(c, 3.0, n);
      CHECK(std::abs(std::abs(s.k1) - 1.0 / rho) < 1e-12);
      CHECK(std::abs(std::abs(s.kj) - 1.0 / rho) < 1e-12);
      CHECK(std::abs(s.k1 - s.kj) < 1e-12);
    }
  }
  SUBCASE("H and K relations") {
    auto rng = make_rng(22);
    for (int n = 3; n <= 6; ++n) {
      const auto s = shape_spectrum(random_turning_profile(rng), 0.2, n);
      CHECK(rothyp::testing::relative_error(s.H, (s.k1 + (n - 2) * s.kj) / (n - 1)) < 1e-10);
      CHECK(rothyp::testing::relative_error(s.K, s.k1 * std::pow(s.kj, n - 2)) < 1e-10);
      CHECK(s.principal().size() == static_cast<std::size_t>(n - 1));
    }
  }
  SUBCASE("turning-angle closed forms k1 = -eps R', kj = -eps sin R / f") {
    auto rng = make_rng(23);
    for (int n = 3; n <= 6; ++n) {
      const auto prof = random_turning_profile(rng);
      const auto t = prof.turning(0.15);
      const auto s = shape_spectrum(prof, 0.15, n);
      CHECK(s.k1 == doctest::Approx(-epsilon(n) * t.dR).epsilon(1e-12));
      CHECK(s.kj == doctest::Approx(-epsilon(n) * t.sinR() / t.f).epsilon(1e-12));
    }
  }
  SUBCASE("independent of the chart angles") {
    auto rng = make_rng(24);
    for (int n = 3; n <= 6; ++n) {
      const auto prof = random_turning_profile(rng);
      const auto base = shape_spectrum(prof, -0.1, n);
      double worst = 0.0;
      for (int i = 0; i < 50; ++i) {
        const auto s = shape_spectrum_at(prof, random_chart(rng, -0.1, n));
        worst = std::max({worst, std::abs(s.k1 - base.k1), std::abs(s.kj - base.kj)});
      }
      CHECK(worst < 1e-10);
    }
  }
  SUBCASE("singular jet") {
    ProfileJet<double> j;
    j.f = 1.0;
    CHECK_THROWS_AS(spectrum_from_jet(j, 4), SingularProfile);
  }
}

TEST_CASE("printed curvature formulas carry measured sign flags") {
  auto rng = make_rng(25);
  for (int n = 3; n <= 7; ++n) {
    FlagMeter k1, kj, H, K, k1u, kju;
    for (int i = 0; i < 20; ++i) {
      const auto prof = random_turning_profile(rng);
      const double r = uniform(rng, -0.35, 0.35);
      const auto j = prof.jet(r);
      const auto truth = shape_spectrum(prof, r, n);
      const auto general = printed_curvatures_general(j, n);
      const auto unit = printed_curvatures_unit_speed(j, n);
      k1.add(truth.k1, general.k1);
      kj.add(truth.kj, general.kj);
      H.add(truth.H, general.H);
      K.add(truth.K, general.K);
      k1u.add(truth.k1, unit.k1);
      kju.add(truth.kj, unit.kj);
    }
    CHECK(k1.result().value == -1);
    CHECK(kj.result().value == -1);
    CHECK(H.result().value == -1);
    CHECK(K.result().value == -1);
    CHECK(k1u.result().value == -1);
    CHECK(kju.result().value == 1);
    for (const auto* m : {&k1, &kj, &H, &K, &k1u, &kju}) CHECK(m->result().constant);
  }
}

TEST_CASE("flat profiles have vanishing Gauss-Kronecker curvature") {
  for (int n = 3; n <= 8; ++n) {
    for (double slope : {0.0, 0.5, -2.0}) {
      const double norm = std::sqrt(1 + slope * slope);
      const auto line = ProfileCurve::line(0.2, 1.0 / norm, 0.3, slope / norm, {0.1, 2.0});
      for (double r : line.domain().interior_samples(20)) CHECK(std::abs(shape_spectrum(line, r, n).K) < 1e-10);
    }
  }
}

TEST_CASE("minimal ODE residual vanishes together with H") {
  auto rng = make_rng(26);
  for (int n = 3; n <= 6; ++n) {
    for (int i = 0; i < 20; ++i) {
      const auto prof = random_turning_profile(rng);
      const double r = uniform(rng, -0.35, 0.35);
      const auto j = prof.jet(r);
      const double H = shape_spectrum(prof, r, n).H;
      const double scale = (n - 1) * j.f * std::pow(j.speed_squared(), 1.5);
      CHECK(std::abs(std::abs(minimal_ode_residual(j, n)) - std::abs(H) * scale) < 1e-12 * std::max(1.0, scale));
    }
    const auto catenoid = ProfileCurve::catenary_like(0.8, {-1.0, 1.0});
    if (n == 3) {
      for (double r : catenoid.domain().interior_samples(15)) {
        CHECK(std::abs(minimal_ode_residual(catenoid.jet(r), 3)) < 1e-8);
        CHECK(std::abs(shape_spectrum(catenoid, r, 3).H) < 1e-10);
      }
    }
  }
}

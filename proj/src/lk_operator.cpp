#include "rothyp/lk_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rothyp/detail/chart.hpp"
#include "rothyp/errors.hpp"
#include "rothyp/symfunc.hpp"

namespace rothyp {

namespace {

using detail::VecT;

constexpr double kMinStep = 1e-6;
constexpr double kMaxStep = 1e-3;
constexpr long double kUnderflow = 1e-12L;

struct ExtendedPoint {
  long double r;
  std::vector<long double> angles;
};

ExtendedPoint extend(const ChartPoint& p) {
  ExtendedPoint q{static_cast<long double>(p.r), {}};
  for (double a : p.angles) q.angles.push_back(static_cast<long double>(a));
  return q;
}

void require_order(int k, int n) {
  if (n < 3) throw InvalidDimension("ambient dimension must be at least 3, got " + std::to_string(n));
  if (k < 0 || k > n - 2) {
    throw InvalidOrder("L_k order " + std::to_string(k) + " outside 0.." + std::to_string(n - 2));
  }
}

VecL immersion_at(const ProfileCurve& profile, long double r, std::span<const long double> angles) {
  const auto jet = profile.jet_extended(r);
  return detail::embed<long double>(jet.f * detail::unit_direction<long double>(angles), jet.phi);
}

// Single evaluation of sum_a mu_a Hess_F(e_a, e_a) at step h, for every component of F.
VecL lk_at_step(const ProfileCurve& profile, const ExtendedPoint& p, int k, const ChartVectorField& field,
                long double h) {
  const int dim = static_cast<int>(p.angles.size()) + 1;
  const auto jet = profile.jet_extended(p.r);
  const auto geo = detail::chart_geometry<long double>(jet, p.angles, false);
  const VecL gauss = detail::adapted_frame_from_jet<long double>(jet, p.angles).gauss;

  const VecL x0 = immersion_at(profile, p.r, p.angles);
  const VecL f0 = field(p.r, p.angles);
  const auto udim = static_cast<std::size_t>(dim);
  std::vector<VecL> xa(udim), xaa(udim), fa(udim), faa(udim);

  for (int a = 0; a < dim; ++a) {
    const long double ha = h / geo.tangents[static_cast<std::size_t>(a)].norm();
    if (!(ha > kUnderflow)) throw StepUnderflow("finite-difference step collapsed below 1e-12");
    auto shifted = [&](long double delta) {
      ExtendedPoint q = p;
      if (a == 0) {
        q.r += delta;
      } else {
        q.angles[static_cast<std::size_t>(a - 1)] += delta;
      }
      return q;
    };
    const auto plus = shifted(ha);
    const auto minus = shifted(-ha);
    const VecL xp = immersion_at(profile, plus.r, plus.angles);
    const VecL xm = immersion_at(profile, minus.r, minus.angles);
    const VecL fp = field(plus.r, plus.angles);
    const VecL fm = field(minus.r, minus.angles);
    const auto ua = static_cast<std::size_t>(a);
    xa[ua] = (xp - xm) / (2 * ha);
    xaa[ua] = (xp - 2 * x0 + xm) / (ha * ha);
    fa[ua] = (fp - fm) / (2 * ha);
    faa[ua] = (fp - 2 * f0 + fm) / (ha * ha);
  }

  std::vector<long double> g(udim), curvature(udim);
  for (std::size_t a = 0; a < udim; ++a) {
    g[a] = xa[a].squaredNorm();
    curvature[a] = xaa[a].dot(gauss) / g[a];
  }

  VecL total = VecL::Zero(f0.size());
  for (std::size_t a = 0; a < udim; ++a) {
    // Weight r_a^k = sigma_k of the other principal curvatures.
    std::vector<long double> e(static_cast<std::size_t>(k) + 1, 0.0L);
    e[0] = 1.0L;
    for (std::size_t b = 0; b < udim; ++b) {
      if (b == a) continue;
      for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += curvature[b] * e[j - 1];
    }
    const long double weight = e[static_cast<std::size_t>(k)];
    VecL hess = faa[a];
    for (std::size_t c = 0; c < udim; ++c) hess -= (xaa[a].dot(xa[c]) / g[c]) * fa[c];
    total += weight * hess / g[a];
  }
  return total;
}

Vec to_double(const VecL& v) { return v.cast<double>(); }

}  // namespace

LkGaussValue split_along_normal(const Vec& value, const Vec& gauss, int k) {
  LkGaussValue out;
  out.k = k;
  out.vector = value;
  out.normal_coefficient = value.dot(gauss);
  out.normal_part = out.normal_coefficient * gauss;
  out.tangential_part = value - out.normal_part;
  return out;
}

double lk_step(const ProfileCurve& profile, const ChartPoint& p, const LkOptions& options) {
  if (options.h > 0.0) return options.h;
  const auto spectrum = shape_spectrum_at(profile, p);
  const double kappa = std::max({1.0, std::abs(spectrum.k1), std::abs(spectrum.kj)});
  return std::clamp(1e-4 / kappa, kMinStep, kMaxStep);
}

Vec lk_vector(const ProfileCurve& profile, const ChartPoint& p, int k, const ChartVectorField& field,
              const LkOptions& options) {
  require_order(k, p.dimension());
  const auto q = extend(p);
  detail::check_chart<long double>(q.angles);
  const long double h = lk_step(profile, p, options);
  const VecL coarse = lk_at_step(profile, q, k, field, h);
  if (!options.richardson) return to_double(coarse);
  const VecL fine = lk_at_step(profile, q, k, field, h / 2);
  return to_double((4 * fine - coarse) / 3);
}

double lk_scalar(const ProfileCurve& profile, const ChartPoint& p, int k, const ChartField& field,
                 const LkOptions& options) {
  ChartVectorField wrapped = [&field](long double r, std::span<const long double> angles) {
    VecL v(1);
    v[0] = field(r, angles);
    return v;
  };
  return lk_vector(profile, p, k, wrapped, options)[0];
}

ChartVectorField gauss_field(const ProfileCurve& profile) {
  return [profile](long double r, std::span<const long double> angles) -> VecL {
    return detail::adapted_frame_from_jet<long double>(profile.jet_extended(r), angles).gauss;
  };
}

ChartVectorField position_field(const ProfileCurve& profile) {
  return [profile](long double r, std::span<const long double> angles) -> VecL {
    return immersion_at(profile, r, angles);
  };
}

Vec lk_gauss_numeric(const ProfileCurve& profile, const ChartPoint& p, int k, const LkOptions& options) {
  return lk_vector(profile, p, k, gauss_field(profile), options);
}

LkGaussValue lk_gauss_closed(const ProfileCurve& profile, const ChartPoint& p) {
  const int n = p.dimension();
  require_order(n - 3, n);
  const auto gradient = grad_s_nm2(profile, p.r, n);
  const auto s = symmetric_functions(shape_spectrum_at(profile, p));
  const auto frame = adapted_frame(profile, p);
  // The printed gradient carries a sign relative to d/dr sigma_{n-2}; where it vanishes
  // the sign is immaterial and the sigma derivative (also ~0) is used.
  const double slope = gradient.flag != 0 ? gradient.flag * gradient.printed : gradient.sigma;
  const double coefficient = -(s.at(1) * s.at(n - 2) - (n - 1) * s.at(n - 1));
  const Vec value = -slope * frame.e[0] + coefficient * frame.gauss;
  return split_along_normal(value, frame.gauss, n - 3);
}

LkGaussValue lk_gauss_closed(const ProfileCurve& profile, double r, int n) {
  return lk_gauss_closed(profile, ChartPoint::origin(r, n));
}

LkGaussValue lk_gauss_identity(const ProfileCurve& profile, const ChartPoint& p, int k) {
  const int n = p.dimension();
  require_order(k, n);
  const auto t = profile.turning(p.r);
  const auto s = symmetric_functions(shape_spectrum_at(profile, p));
  const auto frame = adapted_frame(profile, p);
  const double slope = sigma_derivative(t, n, k + 1);
  const double coefficient = -(s.at(1) * s.at(k + 1) - (k + 2) * s.at(k + 2));
  const Vec value = -slope * frame.e[0] + coefficient * frame.gauss;
  return split_along_normal(value, frame.gauss, k);
}

PositionConstant lk_position_constant(const ProfileCurve& profile, const ChartPoint& p, int k,
                                      const LkOptions& options) {
  const Vec lx = lk_vector(profile, p, k, position_field(profile), options);
  const Vec gauss = adapted_frame(profile, p).gauss;
  const auto s = symmetric_functions(shape_spectrum_at(profile, p));
  PositionConstant out;
  out.k = k;
  out.c = lx.dot(gauss);
  out.residual = (lx - out.c * gauss).norm();
  out.s_k = s.at(k);
  out.s_k1 = s.at(k + 1);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out.ratio_s_k = std::abs(out.s_k) > 1e-12 ? out.c / out.s_k : nan;
  out.ratio_s_k1 = std::abs(out.s_k1) > 1e-12 ? out.c / out.s_k1 : nan;
  return out;
}

}  // namespace rothyp

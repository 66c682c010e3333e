#pragma once

#include <Eigen/Dense>

#include <functional>
#include <span>

#include "rothyp/geometry.hpp"
#include "rothyp/profile.hpp"

namespace rothyp {

using VecL = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

/// A value of L_k G split along the Gauss map.
struct LkGaussValue {
  int k = 0;
  Vec vector;
  Vec tangential_part;
  Vec normal_part;
  /// Scalar c with normal_part = c * G.
  double normal_coefficient = 0.0;
};

/// Splits `value` into its components along and orthogonal to the unit normal `gauss`.
LkGaussValue split_along_normal(const Vec& value, const Vec& gauss, int k);

/// Finite-difference controls. A step of 0 selects 1e-4 / kappa clamped to [1e-6, 1e-3],
/// kappa = max(1, max |k_i|). With `richardson` the result is (4 L(h/2) - L(h)) / 3.
struct LkOptions {
  double h = 0.0;
  bool richardson = false;
};

/// Scalar and vector fields on the chart, evaluated in extended precision.
using ChartField = std::function<long double(long double r, std::span<const long double> angles)>;
using ChartVectorField = std::function<VecL(long double r, std::span<const long double> angles)>;

/// The step actually used at p for the given options.
double lk_step(const ProfileCurve& profile, const ChartPoint& p, const LkOptions& options = {});

/// L_k F = sum_i r_i^k (e_i e_i - nabla_{e_i} e_i) F by central differences in chart
/// coordinates, with the connection term from the tangential projection of the
/// immersion's second differences. Throws InvalidOrder unless 0 <= k <= n-2,
/// DegenerateChart on a singular chart, StepUnderflow when the stencil collapses.
double lk_scalar(const ProfileCurve& profile, const ChartPoint& p, int k, const ChartField& field,
                 const LkOptions& options = {});
/// Componentwise L_k of a vector field.
Vec lk_vector(const ProfileCurve& profile, const ChartPoint& p, int k, const ChartVectorField& field,
              const LkOptions& options = {});

/// The Gauss map and the immersion as chart fields.
ChartVectorField gauss_field(const ProfileCurve& profile);
ChartVectorField position_field(const ProfileCurve& profile);

/// L_k G by finite differences.
Vec lk_gauss_numeric(const ProfileCurve& profile, const ChartPoint& p, int k, const LkOptions& options = {});

/// L_{n-3} G = -grad s_{n-2} - (s_1 s_{n-2} - (n-1) s_{n-1}) G with sigma-based s values and
/// the printed gradient times its measured sign. Unit-speed profiles only.
LkGaussValue lk_gauss_closed(const ProfileCurve& profile, double r, int n);
LkGaussValue lk_gauss_closed(const ProfileCurve& profile, const ChartPoint& p);
/// L_k G = -grad s_{k+1} - (s_1 s_{k+1} - (k+2) s_{k+2}) G for any 0 <= k <= n-2, with the
/// gradient from analytic derivatives of the principal curvatures.
LkGaussValue lk_gauss_identity(const ProfileCurve& profile, const ChartPoint& p, int k);

struct PositionConstant {
  int k = 0;
  /// c minimizing |L_k x - c G|, i.e. <L_k x, G>.
  double c = 0.0;
  /// |L_k x - c G|.
  double residual = 0.0;
  double s_k = 0.0;
  double s_k1 = 0.0;
  /// c / s_k and c / s_{k+1}; NaN when the denominator vanishes.
  double ratio_s_k = 0.0;
  double ratio_s_k1 = 0.0;
};

PositionConstant lk_position_constant(const ProfileCurve& profile, const ChartPoint& p, int k,
                                      const LkOptions& options = {});

}  // namespace rothyp

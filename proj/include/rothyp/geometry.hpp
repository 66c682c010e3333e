#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

#include "rothyp/profile.hpp"

namespace rothyp {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Orientation sign: -1 for odd n, +1 for even n.
int epsilon(int n);

/// Chart coordinates (r, theta_1, ..., theta_{n-2}); the ambient dimension is angles.size() + 2.
struct ChartPoint {
  double r = 0.0;
  std::vector<double> angles;

  int dimension() const { return static_cast<int>(angles.size()) + 2; }
  /// The point (r, 0, ..., 0) in E^n.
  static ChartPoint origin(double r, int n);
};

/// Rotation about the x_n axis, columns (u, d_theta_1 u / |.|, ..., e_n).
/// Throws InvalidDimension for n < 3.
Mat rotation_matrix(std::span<const double> angles, int n);

/// Product-of-cosines form of the immersion.
Vec immerse(const ProfileCurve& profile, const ChartPoint& p);
/// Matrix form Z(theta) * (f, 0, ..., 0, phi)^T of the same immersion.
Vec immerse_by_rotation(const ProfileCurve& profile, const ChartPoint& p);

/// Orthonormal frame {e_1, ..., e_{n-1}, G} at a chart point.
struct FrameSample {
  std::vector<Vec> e;
  Vec gauss;
  int epsilon = 1;

  /// n x n matrix with columns e_1 .. e_{n-1}, G.
  Mat as_matrix() const;
};

/// Throws DegenerateChart when some |cos theta_i| < 1e-9 (i >= 2), SingularProfile when f = 0.
FrameSample adapted_frame(const ProfileCurve& profile, const ChartPoint& p);

/// Vector product of n-1 vectors in E^n by cofactor expansion along the basis row.
Vec generalized_cross(std::span<const Vec> vectors);

struct FundamentalForms {
  Mat first;
  Mat second;
  double detI = 0.0;   // product of the diagonal of `first`
  double detII = 0.0;  // product of the diagonal of `second`
};

FundamentalForms fundamental_forms(const ProfileCurve& profile, const ChartPoint& p);

/// Principal curvatures k1 (profile direction) and kj = k2 = ... = k_{n-1}.
struct CurvatureSpectrum {
  double k1 = 0.0;
  double kj = 0.0;
  int n = 3;
  double H = 0.0;
  double K = 0.0;

  /// The multiset (k1, kj, ..., kj) of size n-1.
  std::vector<double> principal() const;
};

/// Spectrum from eigenvalues of I^{-1} II at the chart origin over r.
CurvatureSpectrum shape_spectrum(const ProfileCurve& profile, double r, int n);
/// Spectrum from eigenvalues of I^{-1} II at an arbitrary chart point.
CurvatureSpectrum shape_spectrum_at(const ProfileCurve& profile, const ChartPoint& p);
/// Spectrum of a rotational hypersurface from a local profile jet (no domain check).
CurvatureSpectrum spectrum_from_jet(const ProfileJet<double>& jet, int n);

/// Curvatures from the displayed general-parameter formulas (k1, k2, H, K).
struct PrintedCurvatures {
  double k1 = 0.0;
  double kj = 0.0;
  double H = 0.0;
  double K = 0.0;
};
PrintedCurvatures printed_curvatures_general(const ProfileJet<double>& jet, int n);
/// The unit-speed principal curvatures listed with the adapted frame (k1, kj only).
PrintedCurvatures printed_curvatures_unit_speed(const ProfileJet<double>& jet, int n);

/// f f' phi'' + (n-2) phi'^3 + [(n-2) f'^2 - f f''] phi': vanishes iff H = 0.
double minimal_ode_residual(const ProfileJet<double>& jet, int n);

}  // namespace rothyp

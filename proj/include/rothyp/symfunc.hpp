#pragma once

#include <span>
#include <string>
#include <vector>

#include "rothyp/conventions.hpp"
#include "rothyp/geometry.hpp"
#include "rothyp/profile.hpp"

namespace rothyp {

/// sigma_j(values) from the coefficients of prod (1 + k_i t). sigma_0 = 1 and
/// sigma_j = 0 for j > values.size(). Throws InvalidOrder for j < 0.
double elementary_symmetric(int j, std::span<const double> values);
/// sigma_0 .. sigma_m for m = values.size().
std::vector<double> elementary_symmetric_all(std::span<const double> values);
/// sigma_j of `values` with entry i removed. Throws InvalidOrder for a bad index or j < 0.
double reduced_symmetric(std::size_t i, int j, std::span<const double> values);

/// Unnormalized k-th mean curvatures s_1 .. s_{n-1}.
struct SymmetricFunctionSet {
  int n = 3;
  std::vector<double> s;  // s[m-1] = s_m

  /// s_0 = 1, s_m for 1 <= m <= n-1, and 0 above.
  double at(int m) const;
};

SymmetricFunctionSet symmetric_functions(const CurvatureSpectrum& spectrum);
SymmetricFunctionSet symmetric_functions(std::span<const double> principal);

/// Eigenvalues of P_k in the principal frame.
struct NewtonTransform {
  int k = 0;
  std::vector<double> diag;
};

/// P_k = sum_i (-1)^i s_{k-i} S^i on a principal-curvature multiset of size m.
/// Throws InvalidOrder unless 0 <= k <= m - 1.
NewtonTransform newton_transform(int k, std::span<const double> principal);
NewtonTransform newton_transform(int k, const CurvatureSpectrum& spectrum);

/// Printed turning-angle forms of s_1 .. s_{n-1} (binomial pattern in R' and sin R / f).
SymmetricFunctionSet printed_sigma(const TurningAngleJet& t, int n);
/// sigma_m of the measured principal curvatures k1 = -eps R', kj = -eps sin R / f.
SymmetricFunctionSet turning_sigma(const TurningAngleJet& t, int n);

struct PrintedSigmaEvaluation {
  SymmetricFunctionSet printed;
  /// sigma_m of the principal curvatures from I^{-1} II.
  SymmetricFunctionSet sigma;
  /// flags[m-1]: truth / printed ratio for degree m at this point.
  std::vector<ConventionFlag> flags;
};

/// Printed closed forms at r with per-degree flags measured against shape_spectrum.
/// Throws ConventionError for a non-unit-speed profile.
PrintedSigmaEvaluation printed_sigma_closed_forms(const ProfileCurve& profile, double r, int n);

struct PrintedSigmaAudit {
  int n = 3;
  std::vector<ConventionFlag> flags;  // per degree m = 1 .. n-1
  bool convention_mismatch = false;
  std::string diagnostic;
};

/// Measures delta_m over `points` and checks that each is a constant sign.
PrintedSigmaAudit measure_printed_sigma_flags(const ProfileCurve& profile, int n, std::span<const double> points,
                                 double constancy_tolerance = 1e-8);

struct GradientSample {
  /// The printed s'_{n-2}.
  double printed = 0.0;
  /// d/dr of sigma_{n-2}(k1, kj, ..., kj), differentiated analytically.
  double sigma = 0.0;
  /// sigma / printed, snapped to +-1 (0 if the ratio is not a sign or printed vanishes).
  int flag = 0;
  /// Direction of the gradient: e_1 at the chart origin.
  Vec direction;
};

/// Throws SingularFormula when n = 3 and sin R = 0, ConventionError for non-unit speed.
GradientSample grad_s_nm2(const ProfileCurve& profile, double r, int n);

/// The printed s'_{n-2} for turning-angle data. Same error contract as grad_s_nm2.
double grad_s_nm2_printed(const TurningAngleJet& t, int n);
/// d/dr sigma_m(k1, kj, ..., kj) for the measured curvatures, 1 <= m <= n-1.
double sigma_derivative(const TurningAngleJet& t, int n, int m);

}  // namespace rothyp

#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace rothyp {

enum class ProfileFamily { Line, Circle, Cylinder, Plane, Cone, TurningAngle, CatenaryLike };

std::string_view to_string(ProfileFamily family);
/// Throws DomainError for an unknown name.
ProfileFamily family_from_string(std::string_view name);

/// Open parameter interval (lo, hi).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double r) const { return r > lo && r < hi; }
  double width() const { return hi - lo; }
  /// Evenly spaced interior points, each at least `margin * width()` from the ends.
  std::vector<double> interior_samples(int count, double margin = 0.05) const;
};

/// Value and first three derivatives of f and phi at one profile parameter.
template <class T>
struct ProfileJet {
  T f{}, df{}, d2f{}, d3f{};
  T phi{}, dphi{}, d2phi{}, d3phi{};

  T speed_squared() const { return df * df + dphi * dphi; }
};

/// Turning angle data of a unit-speed profile: f' = cos R, phi' = sin R.
struct TurningAngleJet {
  double R = 0.0;
  double dR = 0.0;
  double d2R = 0.0;
  double f = 0.0;

  double sinR() const;
  double cosR() const;
};

using ParamMap = std::map<std::string, double>;

/// The generating plane curve gamma(r) = (f(r), 0, ..., 0, phi(r)).
///
/// Immutable and cheap to copy. Every family has analytic derivatives to order three;
/// the TurningAngle family integrates cos R and sin R by composite 61-point Kronrod
/// quadrature from its anchor r0, with R given as a polynomial plus a finite Fourier
/// series in t = r - r0.
class ProfileCurve {
 public:
  /// f = f0 + df*r, phi = phi0 + dphi*r. Unit speed iff df^2 + dphi^2 = 1.
  static ProfileCurve line(double f0, double df, double phi0, double dphi, Interval domain);
  /// f = rho sin(r/rho), phi = phi0 - rho cos(r/rho).
  static ProfileCurve circle(double rho, Interval domain, double phi0 = 0.0);
  /// f = c, phi = phi0 + r.
  static ProfileCurve cylinder(double c, Interval domain, double phi0 = 0.0);
  /// f = f0 + r, phi = c.
  static ProfileCurve plane(double c, Interval domain, double f0 = 0.0);
  /// f = f0 + r cos(alpha), phi = phi0 + r sin(alpha).
  static ProfileCurve cone(double alpha, double f0, Interval domain, double phi0 = 0.0);
  /// R(r) = sum_k poly[k] t^k + sum_j (cos_coeffs[j] cos((j+1) w t) + sin_coeffs[j] sin((j+1) w t)).
  static ProfileCurve turning_angle(std::vector<double> poly, std::vector<double> cos_coeffs,
                                    std::vector<double> sin_coeffs, double w, double r0,
                                    double f0, double phi0, Interval domain);
  /// Unit-speed catenary: f = sqrt(a^2 + r^2), phi = phi0 + a asinh(r/a).
  static ProfileCurve catenary_like(double a, Interval domain, double phi0 = 0.0);

  /// Builds a profile from named parameters; unknown or missing names throw DomainError.
  static ProfileCurve from_params(ProfileFamily family, const ParamMap& params, Interval domain);
  /// Parameter names accepted by `from_params` for the family (TurningAngle accepts c0..c9, a1..a9, b1..b9).
  static std::vector<std::string> parameter_names(ProfileFamily family);

  ProfileFamily family() const;
  /// Canonical parameter map (round-trips through `from_params`).
  const ParamMap& params() const;
  Interval domain() const;
  bool unit_speed() const;

  /// Throws DomainError unless domain().contains(r).
  ProfileJet<double> jet(double r) const;
  /// Same jet in extended precision, for finite-difference oracles.
  ProfileJet<long double> jet_extended(long double r) const;
  /// Throws ConventionError for non-unit-speed profiles.
  TurningAngleJet turning(double r) const;

  struct Impl;

 private:
  explicit ProfileCurve(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

}  // namespace rothyp

#pragma once

#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "rothyp/profile.hpp"

namespace rothyp {

struct HypergeometricValue {
  double value = 0.0;
  int terms = 0;
  /// Bound on the neglected tail once the terms decrease monotonically.
  double tail_bound = 0.0;
};

/// 2F1(a, b; c; z) by its power series, summed until a term falls below 1e-15 of the
/// partial sum or 1e5 terms. Throws NonConvergence for |z| >= 1 or when the budget runs
/// out, DomainError when c is a nonpositive integer.
HypergeometricValue gauss_hypergeometric(double a, double b, double c, double z);

struct MinimalGridPoint {
  double r = 0.0;
  double f = 0.0;
  double phi = 0.0;
  /// dphi / df.
  double slope = 0.0;
  double H = 0.0;
  double K = 0.0;
  /// f f' phi'' + (n-2) phi'^3 + [(n-2) f'^2 - f f''] phi' in the arc-length parameter.
  double ode_residual = 0.0;
  /// Closed-form phi (catenoid for n = 3); NaN where the series is not used.
  double phi_closed = std::numeric_limits<double>::quiet_NaN();
  /// Unit-speed jet of the profile at this point (third derivatives not filled).
  ProfileJet<double> jet;
};

struct MinimalProfileSolution {
  int n = 3;
  double c1 = 0.0;
  double c2 = 0.0;
  int branch = 1;
  std::vector<MinimalGridPoint> grid;
  /// Reachable f interval after truncating near the turning point.
  double f_lo = 0.0;
  double f_hi = 0.0;
  bool truncated = false;
  /// True when every grid point has a closed-form comparison value.
  bool hypergeometric_form_available = false;
  /// max |phi - phi_closed| divided by max |phi_closed| over the grid.
  double closed_form_error = 0.0;

  void write_csv(std::ostream& out) const;
};

/// Minimal rotational profile: integrates the graph form p' = -(n-2) p (1 + p^2) / f with
/// p = dphi/df from the first integral p = -branch / sqrt(c1 f^{2(n-2)} - 1), anchored to the
/// closed form at the larger end of the range. c1 = +inf gives the plane phi = c2.
/// A range reaching the turning point f_t = c1^{-1/(2(n-2))} is truncated at
/// c1 f^{2(n-2)} = 1 + 1e-4.
MinimalProfileSolution solve_minimal_profile(int n, double f0, double f1, double c1, double c2 = 0.0,
                                             int branch = 1, int points = 201);

/// Closed form phi(f): the hypergeometric expression for n >= 4 and the catenoid for n = 3.
double minimal_phi_closed(int n, double f, double c1, double c2, int branch);

enum class FlatKind { Horizontal, Affine };

/// phi = c1 (f = r) or phi = c1 f + c2 (f = r / sqrt(1 + c1^2), unit speed), on `domain`.
ProfileCurve flat_profile(FlatKind kind, double c1, double c2, Interval domain);

struct Fixture {
  std::string name;
  ProfileCurve profile;
  /// Expected case name as printed by to_string(EigenCase).
  std::string expected;
};

/// plane, cylinder, cone, sphere and catenoid-like profiles with their expected verdicts.
std::vector<Fixture> fixture_profiles(int n);

}  // namespace rothyp

#include "rothyp/profile_solvers.hpp"

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <numbers>

#include "rothyp/errors.hpp"
#include "rothyp/geometry.hpp"

namespace rothyp {

namespace {

constexpr double kTurningMargin = 1e-4;
constexpr double kOdeTolerance = 1e-10;

using State = std::array<double, 3>;  // phi, p = dphi/df, r

ProfileJet<double> unit_speed_jet(int n, double f, double phi, double p) {
  const double q = 1.0 + p * p;
  const double dp = -(n - 2) * p * q / f;
  ProfileJet<double> j;
  j.f = f;
  j.phi = phi;
  j.df = 1.0 / std::sqrt(q);
  j.dphi = p / std::sqrt(q);
  j.d2f = -p * dp / (q * q);
  j.d2phi = dp / (q * q);
  return j;
}

}  // namespace

double minimal_phi_closed(int n, double f, double c1, double c2, int branch) {
  if (n < 3) throw InvalidDimension("ambient dimension must be at least 3, got " + std::to_string(n));
  const double root = std::sqrt(c1);
  if (n == 3) return -branch * std::acosh(root * f) / root + c2;
  const double b = (n - 3) / (2.0 * (n - 2));
  const double z = std::pow(f, 4 - 2 * n) / c1;
  const auto F = gauss_hypergeometric(0.5, b, b + 1.0, z);
  return branch * F.value / ((n - 3) * root * std::pow(f, n - 3)) + c2;
}

MinimalProfileSolution solve_minimal_profile(int n, double f0, double f1, double c1, double c2, int branch,
                                             int points) {
  if (n < 3) throw InvalidDimension("ambient dimension must be at least 3, got " + std::to_string(n));
  if (!(f0 > 0.0) || !(f1 > f0)) throw DomainError("minimal profile needs 0 < f0 < f1");
  if (branch != 1 && branch != -1) throw DomainError("branch sign must be +1 or -1");
  if (!(c1 > 0.0)) throw DomainError("c1 must be positive");
  if (points < 2) throw DomainError("need at least two grid points");

  MinimalProfileSolution sol;
  sol.n = n;
  sol.c1 = c1;
  sol.c2 = c2;
  sol.branch = branch;
  const int m = n - 2;

  if (std::isinf(c1)) {
    // The first integral degenerates to p = 0: the horizontal plane.
    sol.f_lo = f0;
    sol.f_hi = f1;
    sol.hypergeometric_form_available = true;
    for (int i = 0; i < points; ++i) {
      const double f = f0 + (f1 - f0) * i / (points - 1);
      MinimalGridPoint g;
      g.r = f - f0;
      g.f = f;
      g.phi = c2;
      g.phi_closed = c2;
      g.jet = unit_speed_jet(n, f, c2, 0.0);
      sol.grid.push_back(g);
    }
    return sol;
  }

  const double f_turn = std::pow((1.0 + kTurningMargin) / c1, 1.0 / (2.0 * m));
  sol.f_lo = f0;
  if (f0 < f_turn) {
    sol.f_lo = f_turn;
    sol.truncated = true;
  }
  sol.f_hi = f1;
  if (!(sol.f_hi > sol.f_lo)) {
    throw DomainError("range lies beyond the turning point f = " + std::to_string(f_turn));
  }

  auto slope_at = [&](double f) { return -branch / std::sqrt(c1 * std::pow(f, 2 * m) - 1.0); };
  auto rhs = [n](const State& y, State& dy, double f) {
    const double p = y[1];
    const double q = 1.0 + p * p;
    dy[0] = p;
    dy[1] = -(n - 2) * p * q / f;
    dy[2] = std::sqrt(q);
  };

  // Anchor at the large-f end, where the series converges fastest, and integrate down.
  double anchor_phi = c2;
  try {
    anchor_phi = minimal_phi_closed(n, sol.f_hi, c1, c2, branch);
  } catch (const NonConvergence&) {
    anchor_phi = c2;
  }
  State y{anchor_phi, slope_at(sol.f_hi), 0.0};

  std::vector<double> fs(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    fs[static_cast<std::size_t>(points - 1 - i)] = sol.f_lo + (sol.f_hi - sol.f_lo) * i / (points - 1);
  }
  fs.front() = sol.f_hi;
  fs.back() = sol.f_lo;
  std::vector<State> states;
  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_dense_output(kOdeTolerance, kOdeTolerance, odeint::runge_kutta_dopri5<State>());
  odeint::integrate_times(stepper, rhs, y, fs.begin(), fs.end(), -(sol.f_hi - sol.f_lo) / points,
                          [&states](const State& s, double) { states.push_back(s); });

  const double r_lo = states.back()[2];
  sol.hypergeometric_form_available = true;
  double max_closed = 0.0;
  double max_diff = 0.0;
  for (int i = points - 1; i >= 0; --i) {
    const auto& s = states[static_cast<std::size_t>(i)];
    MinimalGridPoint g;
    g.f = fs[static_cast<std::size_t>(i)];
    g.phi = s[0];
    g.slope = s[1];
    g.r = s[2] - r_lo;
    g.jet = unit_speed_jet(n, g.f, g.phi, g.slope);
    const auto spectrum = spectrum_from_jet(g.jet, n);
    g.H = spectrum.H;
    g.K = spectrum.K;
    g.ode_residual = minimal_ode_residual(g.jet, n);
    try {
      g.phi_closed = minimal_phi_closed(n, g.f, c1, c2, branch);
      max_closed = std::max(max_closed, std::abs(g.phi_closed));
      max_diff = std::max(max_diff, std::abs(g.phi - g.phi_closed));
    } catch (const NonConvergence&) {
      sol.hypergeometric_form_available = false;
    }
    sol.grid.push_back(g);
  }
  sol.closed_form_error = max_closed > 0.0 ? max_diff / max_closed : max_diff;
  return sol;
}

void MinimalProfileSolution::write_csv(std::ostream& out) const {
  out << "r,f,phi,H,K\n";
  out.precision(17);
  for (const auto& g : grid) out << g.r << ',' << g.f << ',' << g.phi << ',' << g.H << ',' << g.K << '\n';
}

ProfileCurve flat_profile(FlatKind kind, double c1, double c2, Interval domain) {
  if (!std::isfinite(c1) || !std::isfinite(c2)) throw DomainError("flat profile parameters must be finite");
  if (kind == FlatKind::Horizontal) return ProfileCurve::plane(c1, domain);
  const double norm = std::sqrt(1.0 + c1 * c1);
  return ProfileCurve::line(0.0, 1.0 / norm, c2, c1 / norm, domain);
}

std::vector<Fixture> fixture_profiles(int n) {
  if (n < 3) throw InvalidDimension("ambient dimension must be at least 3, got " + std::to_string(n));
  const double pi = std::numbers::pi;
  std::vector<Fixture> out;
  out.push_back({"plane", ProfileCurve::plane(1.0, {0.1, 2.0}), "Hyperplane"});
  out.push_back({"cylinder", ProfileCurve::cylinder(1.0, {-1.0, 1.0}), "CircularHypercylinder"});
  out.push_back({"cone", ProfileCurve::cone(pi / 4, 0.5, {0.1, 2.0}), "RightCircularHypercone"});
  out.push_back({"sphere", ProfileCurve::circle(1.0, {0.1, pi - 0.1}), "Hypersphere"});
  out.push_back({"catenoid", ProfileCurve::catenary_like(1.0, {-1.0, 1.0}), "NotEigen"});
  return out;
}

}  // namespace rothyp

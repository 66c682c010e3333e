#include "rothyp/symfunc.hpp"

#include <boost/math/special_functions/binomial.hpp>

#include <cmath>
#include <sstream>

#include "rothyp/detail/chart.hpp"
#include "rothyp/errors.hpp"

namespace rothyp {

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return boost::math::binomial_coefficient<double>(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

void require_dimension(int n) {
  if (n < 3) throw InvalidDimension("ambient dimension must be at least 3, got " + std::to_string(n));
}

void require_turning_order(int n, int m) {
  if (m < 1 || m > n - 1) {
    throw InvalidOrder("symmetric function degree " + std::to_string(m) + " outside 1.." +
                       std::to_string(n - 1));
  }
}

}  // namespace

std::vector<double> elementary_symmetric_all(std::span<const double> values) {
  // Coefficients of prod (1 + k_i t), updated from the top so each k_i enters once.
  std::vector<double> e(values.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += values[i] * e[j - 1];
  }
  return e;
}

double elementary_symmetric(int j, std::span<const double> values) {
  if (j < 0) throw InvalidOrder("elementary symmetric order must be nonnegative, got " + std::to_string(j));
  if (static_cast<std::size_t>(j) > values.size()) return 0.0;
  return elementary_symmetric_all(values)[static_cast<std::size_t>(j)];
}

double reduced_symmetric(std::size_t i, int j, std::span<const double> values) {
  if (i >= values.size()) {
    throw InvalidOrder("excluded index " + std::to_string(i) + " out of range for " +
                       std::to_string(values.size()) + " values");
  }
  std::vector<double> rest;
  rest.reserve(values.size() - 1);
  for (std::size_t l = 0; l < values.size(); ++l) {
    if (l != i) rest.push_back(values[l]);
  }
  return elementary_symmetric(j, rest);
}

double SymmetricFunctionSet::at(int m) const {
  if (m < 0) throw InvalidOrder("negative symmetric function degree");
  if (m == 0) return 1.0;
  if (m > static_cast<int>(s.size())) return 0.0;
  return s[static_cast<std::size_t>(m - 1)];
}

SymmetricFunctionSet symmetric_functions(std::span<const double> principal) {
  const auto e = elementary_symmetric_all(principal);
  SymmetricFunctionSet set;
  set.n = static_cast<int>(principal.size()) + 1;
  set.s.assign(e.begin() + 1, e.end());
  return set;
}

SymmetricFunctionSet symmetric_functions(const CurvatureSpectrum& spectrum) {
  const auto k = spectrum.principal();
  return symmetric_functions(k);
}

NewtonTransform newton_transform(int k, std::span<const double> principal) {
  const int m = static_cast<int>(principal.size());
  if (k < 0 || k > m - 1) {
    throw InvalidOrder("Newton transformation order " + std::to_string(k) + " outside 0.." +
                       std::to_string(m - 1));
  }
  const auto s = elementary_symmetric_all(principal);
  NewtonTransform t;
  t.k = k;
  t.diag.resize(principal.size());
  for (std::size_t a = 0; a < principal.size(); ++a) {
    double sum = 0.0;
    double power = 1.0;
    for (int i = 0; i <= k; ++i) {
      const double term = s[static_cast<std::size_t>(k - i)] * power;
      sum += (i % 2 == 0) ? term : -term;
      power *= principal[a];
    }
    t.diag[a] = sum;
  }
  return t;
}

NewtonTransform newton_transform(int k, const CurvatureSpectrum& spectrum) {
  const auto principal = spectrum.principal();
  return newton_transform(k, principal);
}

SymmetricFunctionSet printed_sigma(const TurningAngleJet& t, int n) {
  require_dimension(n);
  const double eps = detail::epsilon_of(n);
  const int N = n - 2;
  const double q = t.sinR() / t.f;
  SymmetricFunctionSet set;
  set.n = n;
  for (int m = 1; m <= n - 1; ++m) {
    const double value = binomial(N, m - 1) * t.dR * std::pow(q, m - 1) - binomial(N, m) * std::pow(q, m);
    set.s.push_back(eps * value);
  }
  return set;
}

SymmetricFunctionSet turning_sigma(const TurningAngleJet& t, int n) {
  require_dimension(n);
  const double eps = detail::epsilon_of(n);
  std::vector<double> k(static_cast<std::size_t>(n - 1), -eps * t.sinR() / t.f);
  k[0] = -eps * t.dR;
  return symmetric_functions(k);
}

PrintedSigmaEvaluation printed_sigma_closed_forms(const ProfileCurve& profile, double r, int n) {
  require_dimension(n);
  const auto t = profile.turning(r);
  PrintedSigmaEvaluation out;
  out.printed = printed_sigma(t, n);
  out.sigma = symmetric_functions(shape_spectrum(profile, r, n));
  for (int m = 1; m <= n - 1; ++m) {
    FlagMeter meter;
    meter.add(out.sigma.at(m), out.printed.at(m));
    out.flags.push_back(meter.result());
  }
  return out;
}

PrintedSigmaAudit measure_printed_sigma_flags(const ProfileCurve& profile, int n, std::span<const double> points,
                                 double constancy_tolerance) {
  require_dimension(n);
  std::vector<FlagMeter> meters(static_cast<std::size_t>(n - 1), FlagMeter(constancy_tolerance));
  for (double r : points) {
    const auto t = profile.turning(r);
    const auto printed = printed_sigma(t, n);
    const auto sigma = symmetric_functions(shape_spectrum(profile, r, n));
    for (int m = 1; m <= n - 1; ++m) meters[static_cast<std::size_t>(m - 1)].add(sigma.at(m), printed.at(m));
  }
  PrintedSigmaAudit audit;
  audit.n = n;
  std::ostringstream why;
  for (int m = 1; m <= n - 1; ++m) {
    const auto flag = meters[static_cast<std::size_t>(m - 1)].result();
    if (!flag.constant) {
      audit.convention_mismatch = true;
      why << "s_" << m << ": ratio " << flag.reference_ratio << " at the reference point, max deviation "
          << flag.max_deviation << "; ";
    }
    audit.flags.push_back(flag);
  }
  if (audit.convention_mismatch) {
    audit.diagnostic = "printed form differs from sigma_m by a non-constant factor: " + why.str();
  }
  return audit;
}

double grad_s_nm2_printed(const TurningAngleJet& t, int n) {
  require_dimension(n);
  const double eps = detail::epsilon_of(n);
  const double s = t.sinR();
  const double c = t.cosR();
  const double f = t.f;
  if (n == 3 && s == 0.0) throw SingularFormula("s'_{n-2} has a factor 1/sin R at n = 3 and sin R = 0");
  const double bracket = f * f * t.d2R * s + (n - 3) * f * f * t.dR * t.dR * c -
                         (n - 4) * f * t.dR * s * c - s * s * c;
  return eps * (n - 2) * bracket * std::pow(s, n - 4) / std::pow(f, n - 1);
}

double sigma_derivative(const TurningAngleJet& t, int n, int m) {
  require_dimension(n);
  require_turning_order(n, m);
  const double eps = detail::epsilon_of(n);
  const int N = n - 2;
  const double s = t.sinR();
  const double c = t.cosR();
  const double k1 = -eps * t.dR;
  const double kj = -eps * s / t.f;
  const double dk1 = -eps * t.d2R;
  const double dkj = -eps * (t.dR * c * t.f - s * c) / (t.f * t.f);
  // sigma_m = C(N, m-1) k1 kj^{m-1} + C(N, m) kj^m.
  double d = binomial(N, m - 1) * dk1 * std::pow(kj, m - 1);
  if (m >= 2) d += binomial(N, m - 1) * (m - 1) * k1 * std::pow(kj, m - 2) * dkj;
  d += binomial(N, m) * m * std::pow(kj, m - 1) * dkj;
  return d;
}

GradientSample grad_s_nm2(const ProfileCurve& profile, double r, int n) {
  require_dimension(n);
  const auto t = profile.turning(r);
  GradientSample g;
  g.printed = grad_s_nm2_printed(t, n);
  g.sigma = sigma_derivative(t, n, n - 2);
  const double scale = std::max(std::abs(g.printed), std::abs(g.sigma));
  if (scale > 1e-12) {
    const double ratio = g.sigma / g.printed;
    if (std::abs(ratio - 1.0) < 1e-6) g.flag = 1;
    if (std::abs(ratio + 1.0) < 1e-6) g.flag = -1;
  }
  g.direction = adapted_frame(profile, ChartPoint::origin(r, n)).e[0];
  return g;
}

}  // namespace rothyp

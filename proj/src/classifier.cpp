#include "rothyp/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "rothyp/detail/chart.hpp"
#include "rothyp/errors.hpp"
#include "rothyp/lk_operator.hpp"
#include "rothyp/symfunc.hpp"

namespace rothyp {

namespace {

constexpr double kRankThreshold = 1e-10;
constexpr double kRegularDeterminant = 1e-8;
constexpr int kMinimumRadii = 40;

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double max_abs = 0.0;

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    max_abs = std::max(max_abs, std::abs(v));
  }
  double spread() const { return hi - lo; }
  /// Spread relative to the largest magnitude (0 for an identically zero quantity).
  double relative_spread() const { return max_abs > 0.0 ? spread() / max_abs : 0.0; }
  double mean() const { return 0.5 * (lo + hi); }
};

}  // namespace

std::string_view to_string(EigenCase c) {
  switch (c) {
    case EigenCase::Hyperplane:
      return "Hyperplane";
    case EigenCase::RightCircularHypercone:
      return "RightCircularHypercone";
    case EigenCase::CircularHypercylinder:
      return "CircularHypercylinder";
    case EigenCase::Hypersphere:
      return "Hypersphere";
    case EigenCase::NotEigen:
      return "NotEigen";
  }
  return "unknown";
}

unsigned seed_from_environment(unsigned fallback) {
  const char* value = std::getenv("ROTHYP_SEED");
  if (value == nullptr || *value == '\0') return fallback;
  return static_cast<unsigned>(std::strtoul(value, nullptr, 10));
}

EigenMatrixCandidate fit_eigen_matrix(const std::vector<GaussSample>& samples, FitPolicy policy,
                                      double pattern_tolerance) {
  if (samples.empty()) throw UnderdeterminedFit("no samples to fit");
  const auto n = samples.front().gauss.size();
  const auto m = static_cast<Eigen::Index>(samples.size());
  if (m < n * (n + 1)) {
    throw UnderdeterminedFit("need at least n(n+1) = " + std::to_string(n * (n + 1)) + " samples, got " +
                             std::to_string(m));
  }
  Mat X(m, n), Y(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    if (s.gauss.size() != n || s.lg.size() != n) throw InvalidDimension("samples of mixed dimension");
    X.row(i) = s.gauss.transpose();
    Y.row(i) = s.lg.transpose();
  }

  Eigen::JacobiSVD<Mat> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(kRankThreshold);
  EigenMatrixCandidate c;
  c.rank = static_cast<int>(svd.rank());
  const Vec sv = svd.singularValues();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (sv[j] <= kRankThreshold * sv[0]) c.deficient_directions.push_back(svd.matrixV().col(j));
  }
  if (c.rank < n && policy == FitPolicy::Strict) {
    std::ostringstream msg;
    msg << "sample Gauss vectors span rank " << c.rank << " < " << n << "; deficient directions:";
    for (const auto& d : c.deficient_directions) msg << " [" << d.transpose() << "]";
    throw UnderdeterminedFit(msg.str());
  }
  c.A = svd.solve(Y).transpose();

  double res2 = 0.0, lg2 = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    res2 += (Y.row(i) - X.row(i) * c.A.transpose()).squaredNorm();
    lg2 += Y.row(i).squaredNorm();
  }
  c.residual = std::sqrt(res2 / static_cast<double>(m));
  const double lg_rms = std::sqrt(lg2 / static_cast<double>(m));
  c.relative_residual = lg_rms > 0.0 ? c.residual / lg_rms : 0.0;

  double eta = 0.0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) eta += c.A(i, i);
  c.eta = eta / static_cast<double>(n - 1);
  c.phiA = c.A(n - 1, n - 1);
  c.lambda = c.phiA - c.eta;

  const double scale = std::max(c.A.cwiseAbs().maxCoeff(), 1e-300);
  double defect = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j) defect = std::max(defect, std::abs(c.A(i, j)));
    }
    if (i + 1 < n) defect = std::max(defect, std::abs(c.A(i, i) - c.eta));
  }
  c.diagonal_pattern = defect <= pattern_tolerance * scale || c.A.cwiseAbs().maxCoeff() == 0.0;
  return c;
}

Mat hypersphere_matrix(double rho, int n) {
  if (!(rho > 0.0)) throw DomainError("hypersphere radius must be positive");
  if (n < 3) throw InvalidDimension("ambient dimension must be at least 3, got " + std::to_string(n));
  return detail::epsilon_of(n) * std::pow(rho, -n) * Mat::Identity(n, n);
}

EigenResidualDecomposition eigen_residual_decomposition(const ProfileCurve& profile, int n,
                                                        const EigenMatrixCandidate& candidate,
                                                        const std::vector<double>& radii) {
  const double eps = detail::epsilon_of(n);
  EigenResidualDecomposition d;
  for (double r : radii) {
    const auto t = profile.turning(r);
    const auto s = symmetric_functions(shape_spectrum(profile, r, n));
    const double slope = sigma_derivative(t, n, n - 2);
    const double q = s.at(1) * s.at(n - 2) - (n - 1) * s.at(n - 1);
    const double sn = t.sinR();
    const double cs = t.cosR();
    const double lam = candidate.lambda;
    d.tangential = std::max(d.tangential, std::abs(slope - eps * lam * sn * cs));
    d.normal = std::max(d.normal, std::abs(q - (lam * sn * sn - candidate.phiA)));
    d.tangential_printed = std::max(d.tangential_printed, std::abs(slope - lam * sn * cs));
    d.normal_printed = std::max(d.normal_printed, std::abs(q - eps * (lam * sn * sn + candidate.phiA)));
  }
  return d;
}

std::vector<GaussSample> sample_gauss_equation(const ProfileCurve& profile, int n,
                                               const ClassifierOptions& options) {
  const auto radii = profile.domain().interior_samples(std::max(options.samples, kMinimumRadii));
  std::mt19937 rng(seed_from_environment(options.seed));
  std::uniform_real_distribution<double> first(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> rest(-1.3, 1.3);
  std::vector<GaussSample> out;
  for (double r : radii) {
    for (int a = 0; a < std::max(options.angle_sets, 1); ++a) {
      ChartPoint p{r, std::vector<double>(static_cast<std::size_t>(n - 2))};
      for (std::size_t i = 0; i < p.angles.size(); ++i) p.angles[i] = i == 0 ? first(rng) : rest(rng);
      GaussSample s;
      s.r = r;
      s.gauss = adapted_frame(profile, p).gauss;
      s.lg = options.numeric_operator ? lk_gauss_numeric(profile, p, n - 3)
                                      : lk_gauss_identity(profile, p, n - 3).vector;
      out.push_back(std::move(s));
    }
  }
  return out;
}

ClassificationVerdict classify(const ProfileCurve& profile, int n, const ClassifierOptions& options) {
  const auto& tol = options.tolerances;
  const auto samples = sample_gauss_equation(profile, n, options);
  ClassificationVerdict v;
  v.candidate = fit_eigen_matrix(samples, FitPolicy::MinimumNorm, std::max(tol.fit, 1e-6));
  const double det = v.candidate.A.determinant();
  auto& diag = v.diagnostics;
  diag["fit_residual"] = v.candidate.residual;
  diag["fit_relative_residual"] = v.candidate.relative_residual;
  diag["det_A"] = det;
  diag["rank"] = v.candidate.rank;

  Range H, K, f, R, kj, snm2, f_over_sin;
  double umbilic_defect = 0.0;
  const auto radii = profile.domain().interior_samples(std::max(options.samples, kMinimumRadii));
  for (double r : radii) {
    const auto spectrum = shape_spectrum(profile, r, n);
    const auto t = profile.turning(r);
    H.add(spectrum.H);
    K.add(spectrum.K);
    f.add(t.f);
    R.add(t.R);
    kj.add(spectrum.kj);
    snm2.add(symmetric_functions(spectrum).at(n - 2));
    f_over_sin.add(std::abs(t.sinR()) > 1e-12 ? t.f / t.sinR() : std::numeric_limits<double>::infinity());
    umbilic_defect = std::max(umbilic_defect, std::abs(spectrum.k1 - spectrum.kj));
  }
  diag["K_max"] = K.max_abs;
  diag["H_max"] = H.max_abs;
  diag["H_variation"] = H.relative_spread();
  diag["K_variation"] = K.relative_spread();
  diag["f_variation"] = f.relative_spread();
  diag["R_variation"] = R.spread();
  diag["s_nm2_variation"] = snm2.relative_spread();

  const bool eigen = v.candidate.relative_residual <= tol.fit;
  v.regular = eigen && std::abs(det) > kRegularDeterminant;
  if (!eigen) {
    v.verdict = EigenCase::NotEigen;
    return v;
  }
  if (K.max_abs < tol.flat && H.max_abs < tol.minimal) {
    v.verdict = EigenCase::Hyperplane;
    return v;
  }
  if (K.max_abs < tol.flat) {
    const bool h_constant = H.max_abs >= tol.minimal && H.relative_spread() < tol.constancy;
    if (f.relative_spread() < tol.constancy && h_constant) {
      v.verdict = EigenCase::CircularHypercylinder;
      diag["cylinder_radius"] = f.mean();
      return v;
    }
    const double angle = R.mean();
    const bool oblique = std::abs(std::sin(angle)) > tol.constancy && std::abs(std::cos(angle)) > tol.constancy;
    if (R.spread() < tol.constancy && oblique && f.spread() > 0.0) {
      v.verdict = EigenCase::RightCircularHypercone;
      diag["cone_angle"] = angle;
      return v;
    }
    throw Unclassifiable("eigen-equation fits (relative residual " + std::to_string(v.candidate.relative_residual) +
                         ") and K vanishes, but the profile is neither a vertical nor an oblique line");
  }
  const bool hk_constant = H.max_abs >= tol.minimal && H.relative_spread() < tol.constancy &&
                           K.relative_spread() < tol.constancy;
  if (hk_constant && std::isfinite(f_over_sin.max_abs) && f_over_sin.relative_spread() < tol.constancy) {
    double inv_sum = 0.0;
    for (double r : radii) inv_sum += 1.0 / std::abs(shape_spectrum(profile, r, n).kj);
    const double rho = inv_sum / static_cast<double>(radii.size());
    diag["sphere_radius"] = rho;
    diag["umbilic_defect"] = umbilic_defect;
    double k1_check = 0.0;
    for (double r : radii) k1_check = std::max(k1_check, std::abs(std::abs(shape_spectrum(profile, r, n).k1) * rho - 1.0));
    if (k1_check > 1e-6) {
      throw Unclassifiable("sphere candidate with |k1 rho| - 1 = " + std::to_string(k1_check));
    }
    v.verdict = EigenCase::Hypersphere;
    return v;
  }
  throw Unclassifiable("eigen-equation fits (relative residual " + std::to_string(v.candidate.relative_residual) +
                       ") but H, K and the profile match no case of the classification");
}

}  // namespace rothyp

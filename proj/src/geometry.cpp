#include "rothyp/geometry.hpp"

#include <cmath>

#include "rothyp/detail/chart.hpp"
#include "rothyp/errors.hpp"

namespace rothyp {

namespace {

void require_dimension(int n) {
  if (n < 3) throw InvalidDimension("ambient dimension must be at least 3, got " + std::to_string(n));
}

void require_chart(const ChartPoint& p) {
  for (double a : p.angles) {
    if (!std::isfinite(a)) throw DomainError("chart angles must be finite");
  }
}

}  // namespace

int epsilon(int n) {
  require_dimension(n);
  return detail::epsilon_of(n);
}

ChartPoint ChartPoint::origin(double r, int n) {
  require_dimension(n);
  return ChartPoint{r, std::vector<double>(static_cast<std::size_t>(n - 2), 0.0)};
}

Mat rotation_matrix(std::span<const double> angles, int n) {
  require_dimension(n);
  const int m = n - 2;
  if (static_cast<int>(angles.size()) != m) {
    throw InvalidDimension("rotation matrix in E^" + std::to_string(n) + " needs " +
                           std::to_string(m) + " angles");
  }
  // C[i], S[i] for i = 1..m; S[0] = 1 closes the first row into the general pattern.
  std::vector<double> C(static_cast<std::size_t>(m + 1), 1.0), S(static_cast<std::size_t>(m + 1), 1.0);
  for (int i = 1; i <= m; ++i) {
    C[static_cast<std::size_t>(i)] = std::cos(angles[static_cast<std::size_t>(i - 1)]);
    S[static_cast<std::size_t>(i)] = std::sin(angles[static_cast<std::size_t>(i - 1)]);
  }
  auto cos_product = [&](int from, int to) {
    double p = 1.0;
    for (int k = from; k <= to; ++k) p *= C[static_cast<std::size_t>(k)];
    return p;
  };

  Mat Z = Mat::Zero(n, n);
  for (int i = 0; i <= m; ++i) {
    const double Si = S[static_cast<std::size_t>(i)];
    Z(i, 0) = Si * cos_product(i + 1, m);
    for (int j = 1; j <= m; ++j) {
      if (j == i) {
        Z(i, j) = C[static_cast<std::size_t>(i)];
      } else if (j > i) {
        Z(i, j) = -Si * cos_product(i + 1, j - 1) * S[static_cast<std::size_t>(j)];
      }
    }
  }
  Z(n - 1, n - 1) = 1.0;
  return Z;
}

Vec immerse(const ProfileCurve& profile, const ChartPoint& p) {
  require_dimension(p.dimension());
  require_chart(p);
  const auto jet = profile.jet(p.r);
  const auto u = detail::unit_direction<double>(p.angles);
  return detail::embed<double>(jet.f * u, jet.phi);
}

Vec immerse_by_rotation(const ProfileCurve& profile, const ChartPoint& p) {
  const int n = p.dimension();
  require_chart(p);
  const Mat Z = rotation_matrix(p.angles, n);
  const auto jet = profile.jet(p.r);
  Vec gamma = Vec::Zero(n);
  gamma[0] = jet.f;
  gamma[n - 1] = jet.phi;
  return Z * gamma;
}

Mat FrameSample::as_matrix() const {
  const auto n = gauss.size();
  Mat m(n, n);
  for (std::size_t i = 0; i < e.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = e[i];
  m.col(n - 1) = gauss;
  return m;
}

FrameSample adapted_frame(const ProfileCurve& profile, const ChartPoint& p) {
  const int n = p.dimension();
  require_dimension(n);
  require_chart(p);
  const auto frame = detail::adapted_frame_from_jet<double>(profile.jet(p.r), p.angles);
  return FrameSample{frame.e, frame.gauss, detail::epsilon_of(n)};
}

Vec generalized_cross(std::span<const Vec> vectors) {
  return detail::generalized_cross<double>(std::vector<Vec>(vectors.begin(), vectors.end()));
}

FundamentalForms fundamental_forms(const ProfileCurve& profile, const ChartPoint& p) {
  const int n = p.dimension();
  require_dimension(n);
  require_chart(p);
  const auto jet = profile.jet(p.r);
  const auto frame = detail::adapted_frame_from_jet<double>(jet, p.angles);
  const auto geo = detail::chart_geometry<double>(jet, p.angles, true);
  const int dim = n - 1;
  FundamentalForms forms;
  forms.first.resize(dim, dim);
  forms.second.resize(dim, dim);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const auto ua = static_cast<std::size_t>(a);
      const auto ub = static_cast<std::size_t>(b);
      forms.first(a, b) = geo.tangents[ua].dot(geo.tangents[ub]);
      forms.second(a, b) = geo.second[ua][ub].dot(frame.gauss);
    }
  }
  forms.detI = forms.first.diagonal().prod();
  forms.detII = forms.second.diagonal().prod();
  return forms;
}

std::vector<double> CurvatureSpectrum::principal() const {
  std::vector<double> k(static_cast<std::size_t>(n - 1), kj);
  k[0] = k1;
  return k;
}

namespace {

CurvatureSpectrum spectrum_from_forms(const FundamentalForms& forms, int n) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> solver(forms.second, forms.first);
  if (solver.info() != Eigen::Success) throw SingularProfile("first fundamental form is not positive definite");
  const Vec values = solver.eigenvalues();
  const Mat vectors = solver.eigenvectors();
  Eigen::Index profile_index = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double weight = std::abs(vectors(0, i)) / vectors.col(i).norm();
    if (weight > best) {
      best = weight;
      profile_index = i;
    }
  }
  CurvatureSpectrum s;
  s.n = n;
  s.k1 = values[profile_index];
  double sum = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (i != profile_index) sum += values[i];
  }
  s.kj = sum / static_cast<double>(n - 2);
  s.H = (s.k1 + (n - 2) * s.kj) / (n - 1);
  s.K = s.k1 * std::pow(s.kj, n - 2);
  return s;
}

}  // namespace

CurvatureSpectrum shape_spectrum_at(const ProfileCurve& profile, const ChartPoint& p) {
  const auto jet = profile.jet(p.r);
  if (!(jet.speed_squared() > 0.0)) throw SingularProfile("f'^2 + phi'^2 vanishes");
  return spectrum_from_forms(fundamental_forms(profile, p), p.dimension());
}

CurvatureSpectrum shape_spectrum(const ProfileCurve& profile, double r, int n) {
  return shape_spectrum_at(profile, ChartPoint::origin(r, n));
}

CurvatureSpectrum spectrum_from_jet(const ProfileJet<double>& jet, int n) {
  require_dimension(n);
  if (!(jet.speed_squared() > 0.0)) throw SingularProfile("f'^2 + phi'^2 vanishes");
  const std::vector<double> angles(static_cast<std::size_t>(n - 2), 0.0);
  const auto frame = detail::adapted_frame_from_jet<double>(jet, angles);
  const auto geo = detail::chart_geometry<double>(jet, angles, true);
  FundamentalForms forms;
  forms.first = Mat::Zero(n - 1, n - 1);
  forms.second = Mat::Zero(n - 1, n - 1);
  for (int a = 0; a < n - 1; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    forms.first(a, a) = geo.tangents[ua].squaredNorm();
    forms.second(a, a) = geo.second[ua][ua].dot(frame.gauss);
  }
  return spectrum_from_forms(forms, n);
}

PrintedCurvatures printed_curvatures_general(const ProfileJet<double>& j, int n) {
  require_dimension(n);
  const double eps = detail::epsilon_of(n);
  const double sp = j.speed_squared();
  const double wronskian = j.df * j.d2phi - j.d2f * j.dphi;
  PrintedCurvatures c;
  c.k1 = eps * wronskian / std::pow(sp, 1.5);
  c.kj = eps * j.dphi / (j.f * std::sqrt(sp));
  c.H = eps * minimal_ode_residual(j, n) / ((n - 1) * j.f * std::pow(sp, 1.5));
  c.K = eps * wronskian * std::pow(j.dphi, n - 2) / (std::pow(j.f, n - 2) * std::pow(sp, 0.5 * n));
  return c;
}

PrintedCurvatures printed_curvatures_unit_speed(const ProfileJet<double>& j, int n) {
  require_dimension(n);
  const double eps = detail::epsilon_of(n);
  PrintedCurvatures c;
  c.k1 = -eps * (j.d2f * j.dphi - j.df * j.d2phi);
  c.kj = -eps * j.dphi / j.f;
  c.H = (c.k1 + (n - 2) * c.kj) / (n - 1);
  c.K = c.k1 * std::pow(c.kj, n - 2);
  return c;
}

double minimal_ode_residual(const ProfileJet<double>& j, int n) {
  return j.f * j.df * j.d2phi + (n - 2) * j.dphi * j.dphi * j.dphi +
         ((n - 2) * j.df * j.df - j.f * j.d2f) * j.dphi;
}

}  // namespace rothyp

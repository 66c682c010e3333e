#pragma once

// Scalar-generic kinematics of the rotational immersion. Instantiated with double for the
// analytic path and with long double for the finite-difference oracles.

#include <Eigen/Dense>

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "rothyp/errors.hpp"
#include "rothyp/profile.hpp"

namespace rothyp::detail {

template <class T>
using VecT = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <class T>
using MatT = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double kChartDegeneracy = 1e-9;

inline int epsilon_of(int n) { return n % 2 == 0 ? 1 : -1; }

/// Partial derivative of the unit direction u(theta) in E^{n-1}, where
/// u_0 = prod_l C_l and u_k = S_k prod_{l>k} C_l. `orders[l-1]` in {0,1,2} is the
/// derivative order with respect to theta_l.
template <class T>
VecT<T> direction_derivative(std::span<const T> angles, std::span<const int> orders) {
  const int m = static_cast<int>(angles.size());
  std::vector<T> c(static_cast<std::size_t>(m)), s(static_cast<std::size_t>(m));
  for (int l = 0; l < m; ++l) {
    c[static_cast<std::size_t>(l)] = std::cos(angles[static_cast<std::size_t>(l)]);
    s[static_cast<std::size_t>(l)] = std::sin(angles[static_cast<std::size_t>(l)]);
  }
  VecT<T> u(m + 1);
  for (int k = 0; k <= m; ++k) {
    T value(1);
    for (int l = 1; l <= m; ++l) {
      const auto li = static_cast<std::size_t>(l - 1);
      const int d = orders[li];
      const bool involved = k == 0 || l >= k;
      if (!involved) {
        if (d != 0) {
          value = T(0);
          break;
        }
        continue;
      }
      const bool sine = k >= 1 && l == k;
      T factor;
      if (sine) {
        factor = d == 0 ? s[li] : (d == 1 ? c[li] : -s[li]);
      } else {
        factor = d == 0 ? c[li] : (d == 1 ? -s[li] : -c[li]);
      }
      value *= factor;
    }
    u[k] = value;
  }
  return u;
}

template <class T>
VecT<T> unit_direction(std::span<const T> angles) {
  std::vector<int> orders(angles.size(), 0);
  return direction_derivative<T>(angles, orders);
}

/// Position, coordinate tangents and second partials of the immersion at one chart point.
/// Index 0 is the profile parameter r, index j >= 1 is theta_j.
template <class T>
struct ChartGeometry {
  int n = 0;
  VecT<T> position;
  std::vector<VecT<T>> tangents;
  std::vector<std::vector<VecT<T>>> second;
};

template <class T>
VecT<T> embed(const VecT<T>& planar, T last) {
  VecT<T> v(planar.size() + 1);
  v.head(planar.size()) = planar;
  v[planar.size()] = last;
  return v;
}

template <class T>
ChartGeometry<T> chart_geometry(const ProfileJet<T>& jet, std::span<const T> angles,
                                bool with_second) {
  const int m = static_cast<int>(angles.size());
  ChartGeometry<T> g;
  g.n = m + 2;
  const VecT<T> u = unit_direction<T>(angles);
  g.position = embed<T>(jet.f * u, jet.phi);

  std::vector<VecT<T>> du(static_cast<std::size_t>(m));
  std::vector<int> orders(static_cast<std::size_t>(m), 0);
  for (int j = 0; j < m; ++j) {
    orders[static_cast<std::size_t>(j)] = 1;
    du[static_cast<std::size_t>(j)] = direction_derivative<T>(angles, orders);
    orders[static_cast<std::size_t>(j)] = 0;
  }

  g.tangents.push_back(embed<T>(jet.df * u, jet.dphi));
  for (int j = 0; j < m; ++j) g.tangents.push_back(embed<T>(jet.f * du[static_cast<std::size_t>(j)], T(0)));

  if (!with_second) return g;
  const int dim = m + 1;
  g.second.assign(static_cast<std::size_t>(dim), std::vector<VecT<T>>(static_cast<std::size_t>(dim)));
  g.second[0][0] = embed<T>(jet.d2f * u, jet.d2phi);
  for (int j = 0; j < m; ++j) {
    VecT<T> mixed = embed<T>(jet.df * du[static_cast<std::size_t>(j)], T(0));
    g.second[0][static_cast<std::size_t>(j + 1)] = mixed;
    g.second[static_cast<std::size_t>(j + 1)][0] = mixed;
    for (int i = 0; i <= j; ++i) {
      orders[static_cast<std::size_t>(i)] += 1;
      orders[static_cast<std::size_t>(j)] += 1;
      VecT<T> v = embed<T>(jet.f * direction_derivative<T>(angles, orders), T(0));
      orders[static_cast<std::size_t>(i)] = 0;
      orders[static_cast<std::size_t>(j)] = 0;
      g.second[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] = v;
      g.second[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(i + 1)] = v;
    }
  }
  return g;
}

/// Determinant-expansion vector product of n-1 vectors in E^n: component k is the
/// cofactor of the k-th basis vector in the first row.
template <class T>
VecT<T> generalized_cross(const std::vector<VecT<T>>& vectors) {
  const int rows = static_cast<int>(vectors.size());
  const int n = rows + 1;
  MatT<T> m(rows, n);
  for (int i = 0; i < rows; ++i) {
    if (vectors[static_cast<std::size_t>(i)].size() != n) {
      throw InvalidDimension("generalized cross product needs n-1 vectors of length n");
    }
    m.row(i) = vectors[static_cast<std::size_t>(i)].transpose();
  }
  VecT<T> out(n);
  MatT<T> minor(rows, rows);
  for (int k = 0; k < n; ++k) {
    if (k > 0) minor.leftCols(k) = m.leftCols(k);
    if (k < n - 1) minor.rightCols(n - 1 - k) = m.rightCols(n - 1 - k);
    const T det = rows == 0 ? T(1) : minor.determinant();
    out[k] = (k % 2 == 0) ? det : -det;
  }
  return out;
}

/// The metric factor f * prod_{l > j} cos(theta_l) of the theta_j direction (signed).
template <class T>
T angular_metric_factor(T f, std::span<const T> angles, int j) {
  T factor = f;
  for (std::size_t l = static_cast<std::size_t>(j); l < angles.size(); ++l) factor *= std::cos(angles[l]);
  return factor;
}

template <class T>
void check_chart(std::span<const T> angles) {
  for (std::size_t l = 1; l < angles.size(); ++l) {
    if (std::abs(static_cast<double>(std::cos(angles[l]))) < kChartDegeneracy) {
      throw DegenerateChart("cos(theta_" + std::to_string(l + 1) + ") vanishes at this chart point");
    }
  }
}

template <class T>
struct FrameT {
  std::vector<VecT<T>> e;
  VecT<T> gauss;
};

/// e_1 = X_r / |X_r|, e_{j+1} = X_theta_j / (signed metric factor), G = e_1 x ... x e_{n-1}.
template <class T>
FrameT<T> adapted_frame_from_jet(const ProfileJet<T>& jet, std::span<const T> angles) {
  check_chart<T>(angles);
  const T speed = std::sqrt(jet.speed_squared());
  if (!(static_cast<double>(speed) > 0.0)) throw SingularProfile("profile speed vanishes");
  if (jet.f == T(0)) throw SingularProfile("f vanishes: chart meets the rotation axis");
  const auto geo = chart_geometry<T>(jet, angles, false);
  FrameT<T> frame;
  frame.e.push_back(geo.tangents[0] / speed);
  for (std::size_t j = 1; j < geo.tangents.size(); ++j) {
    frame.e.push_back(geo.tangents[j] / angular_metric_factor<T>(jet.f, angles, static_cast<int>(j)));
  }
  frame.gauss = generalized_cross<T>(frame.e);
  frame.gauss /= frame.gauss.norm();
  return frame;
}

}  // namespace rothyp::detail

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rothyp/geometry.hpp"
#include "rothyp/profile.hpp"

namespace rothyp {

/// One observation (G, L_{n-3} G) at a chart point.
struct GaussSample {
  Vec gauss;
  Vec lg;
  double r = 0.0;
};

enum class FitPolicy {
  /// Rank-deficient sample sets throw UnderdeterminedFit.
  Strict,
  /// Rank-deficient sample sets return the minimum-norm solution and list the null directions.
  MinimumNorm,
};

struct EigenMatrixCandidate {
  Mat A;
  /// RMS of |L G - A G| over the samples.
  double residual = 0.0;
  /// residual divided by the RMS of |L G| (0 when every L G vanishes).
  double relative_residual = 0.0;
  double eta = 0.0;
  double phiA = 0.0;
  double lambda = 0.0;
  /// A has the pattern diag(eta, ..., eta, phiA) within tolerance.
  bool diagonal_pattern = false;
  int rank = 0;
  /// Unit vectors spanning the null space of the sample matrix (empty at full rank).
  std::vector<Vec> deficient_directions;
};

/// Least-squares A minimizing sum |L G - A G|^2. Needs at least n(n+1) samples.
EigenMatrixCandidate fit_eigen_matrix(const std::vector<GaussSample>& samples,
                                      FitPolicy policy = FitPolicy::Strict, double pattern_tolerance = 1e-6);

/// eps(n) rho^{-n} I_n. Throws DomainError for rho <= 0.
Mat hypersphere_matrix(double rho, int n);

struct EigenResidualDecomposition {
  /// max |s'_{n-2} - eps lambda sin R cos R| over samples (derived with the frame's G).
  double tangential = 0.0;
  /// max |s_1 s_{n-2} - (n-1) s_{n-1} - (lambda sin^2 R - phiA)|.
  double normal = 0.0;
  /// The same two equations in their printed form: s'_{n-2} = lambda sin R cos R and
  /// s_1 s_{n-2} - (n-1) s_{n-1} = eps (lambda sin^2 R + phiA).
  double tangential_printed = 0.0;
  double normal_printed = 0.0;
};

/// Evaluates both scalar eigen-equations at each sample radius with sigma-based s values.
EigenResidualDecomposition eigen_residual_decomposition(const ProfileCurve& profile, int n,
                                                        const EigenMatrixCandidate& candidate,
                                                        const std::vector<double>& radii);

enum class EigenCase { Hyperplane, RightCircularHypercone, CircularHypercylinder, Hypersphere, NotEigen };

std::string_view to_string(EigenCase c);

struct ClassifierTolerances {
  double fit = 1e-6;
  double flat = 1e-8;
  double minimal = 1e-8;
  double constancy = 1e-7;
};

struct ClassifierOptions {
  ClassifierTolerances tolerances;
  int samples = 64;
  int angle_sets = 4;
  /// Seed for the random chart angles; ROTHYP_SEED overrides it when set.
  unsigned seed = 0;
  /// Use the finite-difference operator instead of the closed identity for L G.
  bool numeric_operator = false;
};

struct ClassificationVerdict {
  EigenCase verdict = EigenCase::NotEigen;
  EigenMatrixCandidate candidate;
  std::map<std::string, double> diagnostics;
  /// Residual within tolerance and |det A| > 1e-8.
  bool regular = false;
};

/// Decision tree NotEigen -> Hyperplane -> {Cylinder, Cone} -> Hypersphere.
/// Throws Unclassifiable when the fit succeeds but no geometric branch matches.
ClassificationVerdict classify(const ProfileCurve& profile, int n, const ClassifierOptions& options = {});

/// Samples (G, L_{n-3} G) over the profile domain and seeded chart angles.
std::vector<GaussSample> sample_gauss_equation(const ProfileCurve& profile, int n,
                                               const ClassifierOptions& options = {});

/// Seed from ROTHYP_SEED, or `fallback` when unset.
unsigned seed_from_environment(unsigned fallback = 0);

}  // namespace rothyp

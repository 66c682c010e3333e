#include <cmath>
#include <string>

#include "rothyp/errors.hpp"
#include "rothyp/profile_solvers.hpp"

namespace rothyp {

namespace {
constexpr double kRelativeStop = 1e-15;
constexpr int kMaxTerms = 100000;
}  // namespace

HypergeometricValue gauss_hypergeometric(double a, double b, double c, double z) {
  if (c <= 0.0 && c == std::floor(c)) {
    throw DomainError("2F1 undefined for nonpositive integer c = " + std::to_string(c));
  }
  if (!(std::abs(z) < 1.0)) {
    throw NonConvergence("2F1 series needs |z| < 1, got z = " + std::to_string(z));
  }
  HypergeometricValue out;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double ratio = (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    term *= ratio;
    sum += term;
    out.terms = k + 2;
    if (term == 0.0) break;
    if (std::abs(term) < kRelativeStop * std::abs(sum)) {
      // Once k is past the parameters the term ratio increases towards |z|, so a
      // geometric series with ratio max(|ratio|, |z|) bounds what is left.
      const double q = std::max(std::abs(ratio), std::abs(z));
      out.tail_bound = std::abs(term) * q / (1.0 - q);
      out.value = sum;
      return out;
    }
  }
  if (term == 0.0) {
    out.value = sum;
    return out;
  }
  throw NonConvergence("2F1 series did not reach relative 1e-15 within 1e5 terms at z = " + std::to_string(z));
}

}  // namespace rothyp

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <string>
#include <vector>

namespace rothyp {

using BigInt = boost::multiprecision::cpp_int;

/// The four printed integer polynomials a, b, c, d of the elimination proof.
struct AbcdConstants {
  BigInt a, b, c, d;
};

/// Raw polynomial evaluation, valid for every integer n (used for the factor checks).
AbcdConstants abcd_polynomials(long n);
/// d(n) evaluated from its printed factored form -3(n-7)(n-3)(n-1)(n^4 - 24n^3 + ...).
BigInt d_factored(long n);
/// The same polynomial expanded in powers of n.
BigInt d_expanded(long n);
/// Throws InvalidDimension for n < 3.
AbcdConstants abcd_constants(long n);

struct GothicConstants {
  BigInt d, e, f;  // fraktur d, e, f
  BigInt a, b, c;  // fraktur a, b, c
};

/// The quartic and quintic multipliers in the fraktur a, b, c definitions.
BigInt gothic_a_multiplier(long n);
BigInt gothic_b_multiplier(long n);
BigInt gothic_c_multiplier(long n);

/// Throws InvalidDimension for n < 3.
GothicConstants gothic_constants(long n);

struct ProofAuditReport {
  long n = 3;
  AbcdConstants abcd;
  GothicConstants gothic;
  std::array<BigInt, 4> betas;
  BigInt beta_sum;
  bool nonvanishing = false;
};

/// Throws InvalidDimension for n < 3.
ProofAuditReport beta_sum(long n);

/// Printed coefficient functions A, B, C, D of R (floating point).
struct RPrimeCoefficients {
  double A = 0.0, B = 0.0, C = 0.0, D = 0.0;
};
RPrimeCoefficients rprime_coefficients(int n, double R, double lambda, double phiA);
/// R' = (A f^{n-1} + B) / (C f^n + D f). Throws SingularFormula when the denominator vanishes.
double rprime_candidate(const RPrimeCoefficients& c, int n, double f);

struct EliminationCoefficients {
  double t3 = 0.0;  // t_{3(n-1)}
  double t2 = 0.0;  // t_{2(n-1)}
  double t1 = 0.0;  // t_{n-1}
  double t0 = 0.0;
};
EliminationCoefficients elimination_coefficients(int n, double R, double lambda, double phiA);
/// t_0 with the common factor pulled out: (n-2) sin^{n-3} R [D^2 sin^2 R + (n-3) B D sin R + B^2].
double elimination_t0_factored(int n, double R, double lambda, double phiA);
/// t_3 f^{3(n-1)} + t_2 f^{2(n-1)} + t_1 f^{n-1} + t_0.
double elimination_residual(const EliminationCoefficients& t, int n, double f);

}  // namespace rothyp

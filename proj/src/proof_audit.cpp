#include "rothyp/proof_audit.hpp"

#include <cmath>
#include <initializer_list>

#include "rothyp/errors.hpp"

namespace rothyp {

namespace {

// Horner evaluation; coefficients from the highest degree down.
BigInt horner(std::initializer_list<long> coefficients, long n) {
  BigInt x = n;
  BigInt acc = 0;
  for (long c : coefficients) acc = acc * x + c;
  return acc;
}

void require_dimension(long n) {
  if (n < 3) throw InvalidDimension("proof constants need n >= 3, got " + std::to_string(n));
}

BigInt pow_big(const BigInt& base, unsigned e) {
  BigInt out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

AbcdConstants abcd_polynomials(long n) {
  AbcdConstants k;
  k.a = horner({2, -44, 325, -807, -796, 6906, -10227, 4545}, n);
  k.b = horner({10, -273, 3089, -18843, 67223, -140907, 162003, -81929, 5851}, n);
  k.c = horner({3, -104, 1549, -13028, 68261, -230910, 502291, -670392, 486104, -137246}, n);
  k.d = d_factored(n);
  return k;
}

BigInt d_factored(long n) {
  const BigInt x = n;
  return BigInt(-3) * (x - 7) * (x - 3) * (x - 1) * gothic_c_multiplier(n);
}

BigInt d_expanded(long n) { return horner({-3, 105, -1467, 10569, -42273, 93651, -105249, 44667}, n); }

AbcdConstants abcd_constants(long n) {
  require_dimension(n);
  return abcd_polynomials(n);
}

BigInt gothic_a_multiplier(long n) { return horner({2, -29, 129, -219, 105}, n); }
BigInt gothic_b_multiplier(long n) { return horner({3, -56, 398, -1380, 2367, -1604}, n); }
BigInt gothic_c_multiplier(long n) { return horner({1, -24, 194, -624, 709}, n); }

GothicConstants gothic_constants(long n) {
  require_dimension(n);
  const auto k = abcd_polynomials(n);
  const BigInt np1_sq = BigInt(n + 1) * (n + 1);
  GothicConstants g;
  g.d = horner({3, -56, 398, -1380, 2367, -1604}, n);
  g.e = horner({-2, 29, -129, 219, -105}, n);
  g.f = horner({1, -24, 194, -624, 709}, n);
  g.a = k.a * gothic_a_multiplier(n) + k.b * np1_sq;
  g.b = k.a * gothic_b_multiplier(n) + k.c * np1_sq;
  g.c = k.a * gothic_c_multiplier(n) + k.d * np1_sq;
  return g;
}

ProofAuditReport beta_sum(long n) {
  require_dimension(n);
  ProofAuditReport rep;
  rep.n = n;
  rep.abcd = abcd_constants(n);
  rep.gothic = gothic_constants(n);
  const auto& g = rep.gothic;
  const BigInt lead = pow_big(BigInt(n - 2), 15);
  const BigInt P = g.a * g.d + g.b * g.e;  // ad + be
  const BigInt Q = g.a * g.f + g.c * g.e;  // af + ce
  rep.betas[0] = lead * BigInt(n + 1) * (n + 1) * Q * Q * Q;
  rep.betas[1] = -lead * g.e * P * Q * Q;
  rep.betas[2] = -lead * g.d * P * P * Q;
  rep.betas[3] = lead * g.f * P * P * P;
  rep.beta_sum = rep.betas[0] + rep.betas[1] + rep.betas[2] + rep.betas[3];
  rep.nonvanishing = rep.beta_sum != 0;
  return rep;
}

RPrimeCoefficients rprime_coefficients(int n, double R, double lambda, double phiA) {
  if (n < 3) throw InvalidDimension("proof coefficients need n >= 3");
  const double s = std::sin(R);
  const double c = std::cos(R);
  RPrimeCoefficients k;
  k.A = ((n * n - 7 * n + 14) * lambda * s * s * s + (n * n - 8 * n + 17) * phiA * s) * c;
  k.B = -(n - 7.0) * (n - 3) * (n - 2) * std::pow(s, n) * c;
  k.C = -(lambda * (n + 1) * s * s + (n - 3) * phiA) * c;
  k.D = (n - 2.0) * (std::pow(n - 3.0, 3) - 4.0 * (n * n - 6 * n + 10)) * std::pow(s, n - 1) * c;
  return k;
}

double rprime_candidate(const RPrimeCoefficients& c, int n, double f) {
  const double den = c.C * std::pow(f, n) + c.D * f;
  if (den == 0.0) throw SingularFormula("R' candidate has a vanishing denominator C f^n + D f");
  return (c.A * std::pow(f, n - 1) + c.B) / den;
}

EliminationCoefficients elimination_coefficients(int n, double R, double lambda, double phiA) {
  const auto k = rprime_coefficients(n, R, lambda, phiA);
  const double s = std::sin(R);
  const double w = phiA + lambda * s * s;
  const double s1 = std::pow(s, n - 1);
  const double s2 = std::pow(s, n - 2);
  const double s3 = std::pow(s, n - 3);
  const double m = n - 2.0;
  EliminationCoefficients t;
  t.t3 = -w * k.C * k.C;
  t.t2 = m * k.C * k.C * s1 + (n - 3) * m * k.A * k.C * s2 + m * k.A * k.A * s3 - 2 * w * k.C * k.D;
  t.t1 = 2 * m * k.C * k.D * s1 + (n - 3) * m * (k.A * k.D + k.B * k.C) * s2 + 2 * m * k.A * s3 - w * k.D * k.D;
  t.t0 = m * k.D * k.D * s1 + (n - 3) * m * k.B * k.D * s2 + m * k.B * k.B * s3;
  return t;
}

double elimination_t0_factored(int n, double R, double lambda, double phiA) {
  const auto k = rprime_coefficients(n, R, lambda, phiA);
  const double s = std::sin(R);
  return (n - 2.0) * std::pow(s, n - 3) * (k.D * k.D * s * s + (n - 3) * k.B * k.D * s + k.B * k.B);
}

double elimination_residual(const EliminationCoefficients& t, int n, double f) {
  const double x = std::pow(f, n - 1);
  return ((t.t3 * x + t.t2) * x + t.t1) * x + t.t0;
}

}  // namespace rothyp

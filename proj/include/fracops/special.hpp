#pragma once

#include <complex>
#include <vector>

namespace fracops {

using Complex = std::complex<double>;

// Gamma function for real or complex argument. Lanczos approximation
// (g = 7, 9 coefficients) with the reflection formula for Re(s) < 0.5;
// relative accuracy is ~1e-13 for |s| <= 20 away from the poles.
// Throws std::domain_error at the poles (real non-positive integers) and
// std::overflow_error once Re(s) exceeds the representable factorial range.
Complex gamma(Complex s);

// Euler beta function B(s1, s2) = Gamma(s1) Gamma(s2) / Gamma(s1 + s2).
// Requires Re(s1) > 0 and Re(s2) > 0; throws std::domain_error otherwise.
Complex beta(Complex s1, Complex s2);

// Euler-Mascheroni constant gamma_E = 0.5772156649015328606...
double euler_mascheroni();

// First and second derivatives of Gamma at 1:
//   Gamma'(1)  = -gamma_E
//   Gamma''(1) = gamma_E^2 + pi^2/6
double gamma_prime_at_1();
double gamma_second_at_1();

// Taylor coefficients of phi(eps) = exp(eps * log_a) / Gamma(1 + eps)
// about eps = 0, in the form phi(eps) ~= sum_n c[n] eps^n / n!.
// Closed forms: c0 = 1, c1 = gamma_E + log_a,
// c2 = gamma_E^2 - pi^2/6 + 2 gamma_E log_a + log_a^2.
struct ExpansionCoefficients {
  double log_a = 0.0;
  std::vector<double> c;
};

// n_terms is the highest power of eps retained (1 or 2). n_terms = 3 is
// accepted but the series is still truncated after the eps^2 coefficient,
// since no closed form beyond that order is in scope. Anything outside
// {1, 2, 3} throws std::invalid_argument.
ExpansionCoefficients phi_expansion(double log_a, int n_terms);

// sum_n c[n] eps^n / n!
double phi_reconstruct(const ExpansionCoefficients& coeffs, double eps);

// |phi(eps) - reconstruction| with phi evaluated through gamma().
double phi_reconstruction_error(const ExpansionCoefficients& coeffs, double eps);

}  // namespace fracops

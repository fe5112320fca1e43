#include "fracops/special.hpp"

#include <cmath>
#include <stdexcept>

namespace fracops {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

// Core approximation, valid for Re(z) >= 0.5.
Complex lanczos(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  Complex t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t)) *
         std::exp(-t) * x;
}

bool is_real_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 &&
         s.real() == std::floor(s.real());
}

}  // namespace

Complex gamma(Complex s) {
  if (is_real_nonpositive_integer(s))
    throw std::domain_error("gamma pole at non-positive integer argument");
  // Gamma(172) already exceeds the double range.
  if (s.real() > 171.7)
    throw std::overflow_error("gamma overflow: Re(s) beyond factorial range");
  Complex value;
  if (s.real() < 0.5) {
    // Reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s).
    value = kPi / (std::sin(kPi * s) * lanczos(1.0 - s));
  } else {
    value = lanczos(s);
  }
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw std::overflow_error("gamma overflow for the given argument");
  return value;
}

Complex beta(Complex s1, Complex s2) {
  if (s1.real() <= 0.0 || s2.real() <= 0.0)
    throw std::domain_error("beta requires Re(s1) > 0 and Re(s2) > 0");
  return gamma(s1) * gamma(s2) / gamma(s1 + s2);
}

double euler_mascheroni() { return kEulerGamma; }

double gamma_prime_at_1() { return -kEulerGamma; }

double gamma_second_at_1() {
  return kEulerGamma * kEulerGamma + kPi * kPi / 6.0;
}

ExpansionCoefficients phi_expansion(double log_a, int n_terms) {
  if (n_terms < 1 || n_terms > 3)
    throw std::invalid_argument("unsupported expansion order: n_terms must be 1, 2 or 3");
  const double g = kEulerGamma;
  ExpansionCoefficients out;
  out.log_a = log_a;
  out.c.push_back(1.0);
  out.c.push_back(g + log_a);
  if (n_terms >= 2)
    out.c.push_back(g * g - kPi * kPi / 6.0 + 2.0 * g * log_a + log_a * log_a);
  return out;
}

double phi_reconstruct(const ExpansionCoefficients& coeffs, double eps) {
  double sum = 0.0;
  double term = 1.0;  // eps^n / n!
  for (std::size_t n = 0; n < coeffs.c.size(); ++n) {
    if (n > 0) term *= eps / static_cast<double>(n);
    sum += coeffs.c[n] * term;
  }
  return sum;
}

double phi_reconstruction_error(const ExpansionCoefficients& coeffs, double eps) {
  double exact = std::exp(eps * coeffs.log_a) / gamma(Complex(1.0 + eps)).real();
  return std::abs(exact - phi_reconstruct(coeffs, eps));
}

}  // namespace fracops

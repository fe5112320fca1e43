#pragma once

// Independent numerical oracles for the test suite. These deliberately avoid
// the library's own machinery (Lanczos gamma, tanh-sinh rules): gamma comes
// from trapezoidal quadrature of its integral definition, and the singular
// unit integrals from a midpoint rule under a smoothstep substitution whose
// derivative vanishes to 8th order at both endpoints.

#include <cmath>
#include <complex>
#include <cstdint>

namespace oracles {

using Complex = std::complex<double>;

// Gamma(z) = int exp(z w - e^w) dw over the real line (t = e^w). The
// integrand decays like e^{Re(z) w} on the left and double-exponentially on
// the right, so the trapezoid rule on [-200, 9] converges to machine
// precision for Re(z) >= 0.1.
inline Complex gamma_integral(Complex z) {
  const double lo = -200.0, hi = 9.0, h = 0.01;
  const int n = static_cast<int>((hi - lo) / h);
  Complex sum{0.0, 0.0};
  for (int i = 0; i <= n; ++i) {
    const double w = lo + h * i;
    const Complex term = std::exp(z * w - std::exp(w));
    sum += (i == 0 || i == n) ? 0.5 * term : term;
  }
  return h * sum;
}

// gamma' (1) = int w exp(w - e^w) dw = -euler_gamma.
inline double euler_gamma_integral() {
  const double lo = -200.0, hi = 9.0, h = 0.01;
  const int n = static_cast<int>((hi - lo) / h);
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double w = lo + h * i;
    const double term = w * std::exp(w - std::exp(w));
    sum += (i == 0 || i == n) ? 0.5 * term : term;
  }
  return -h * sum;
}

// Smoothstep S(t) = I_t(9,9) (regularized incomplete beta): S' vanishes to
// 8th order at t = 0 and t = 1, so a plain midpoint rule applied after the
// substitution u = S(t) integrates u^alpha (1-u)^beta accurately for any
// exponents with real part > -1. 1/B(9,9) = 218790.
inline double smoothstep(double t) {
  double sum = 0.0;
  const double binom[9] = {1, -8, 28, -56, 70, -56, 28, -8, 1};
  for (int j = 0; j < 9; ++j)
    sum += binom[j] * std::pow(t, 9 + j) / (9 + j);
  return 218790.0 * sum;
}

inline double smoothstep_deriv(double t) {
  return 218790.0 * std::pow(t * (1.0 - t), 8.0);
}

// int_0^1 u^alpha (1-u)^beta du, Re(alpha) > -1, Re(beta) > -1. S(1-t) =
// 1-S(t), so whichever of u and 1-u is small is always evaluated through the
// cancellation-free small-t branch of the polynomial.
inline Complex unit_integral(Complex alpha, Complex beta, int panels = 200000) {
  Complex sum{0.0, 0.0};
  for (int i = 0; i < panels; ++i) {
    const double t = (i + 0.5) / panels;
    double u, omu;
    if (t <= 0.5) {
      u = smoothstep(t);
      omu = 1.0 - u;
    } else {
      omu = smoothstep(1.0 - t);
      u = 1.0 - omu;
    }
    const double w = smoothstep_deriv(t);
    if (u <= 0.0 || omu <= 0.0 || w == 0.0) continue;
    sum += w * std::exp(alpha * std::log(Complex(u)) +
                        beta * std::log(Complex(omu)));
  }
  return sum / static_cast<double>(panels);
}

// int_a^x (x-y)^{s-1} (y-a)^p dy = L^{p+s} int_0^1 u^p (1-u)^{s-1} du,
// the raw (un-normalized) power-law convolution.
inline Complex power_kernel_integral(double p, Complex s, double a, double x,
                                     int panels = 200000) {
  const double L = x - a;
  const Complex scale = std::exp((p + s) * std::log(Complex(L)));
  return scale * unit_integral(Complex(p), s - 1.0, panels);
}

// int_0^1 u^{s1-1} (1-u)^{s2-1} du = B(s1, s2).
inline Complex beta_integral(Complex s1, Complex s2, int panels = 200000) {
  return unit_integral(s1 - 1.0, s2 - 1.0, panels);
}

// Portable uniform draw in [0,1) from the standard-pinned mt19937 sequence
// (distribution classes are implementation-defined; this is not).
template <typename Rng>
double uniform01(Rng& rng) {
  const std::uint64_t hi = rng() >> 5;   // 27 bits
  const std::uint64_t lo = rng() >> 6;   // 26 bits
  return (hi * 67108864.0 + lo) / 9007199254740992.0;  // 2^53
}

}  // namespace oracles

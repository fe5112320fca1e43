#pragma once

#include "fracops/funcspace.hpp"

namespace fracops {

struct QuadratureConfig {
  // Nodes per quadrature panel.
  int nodes = 64;
  // Depth k of the integration-by-parts identity used to lift the kernel
  // exponent; -1 selects the smallest k with Re(s) + k >= 1 that the target
  // function supports.
  int regularization_k = -1;
  // Truncation horizon for lower bound a = -infinity.
  double tail_T = 40.0;
};

struct OperatorResult {
  std::vector<Complex> values;
  // Max node-doubling discrepancy over the grid (plus the analytic tail
  // truncation bound when a = -infinity).
  double err_estimate = 0.0;
};

// J^s f(x) = (1/Gamma(s)) int_a^x (x-y)^{s-1} f(y) dy for Re(s) > 0;
// s = 0 is the identity. Throws std::domain_error for Re(s) < 0 (use the
// unified operator), purely imaginary s, or x <= a.
Complex frac_integral(const CausalFunction& f, Complex s, double x,
                      const QuadratureConfig& cfg = {});

// Elementwise frac_integral over the grid; err_estimate compares the
// cfg.nodes run against a run with twice the nodes.
OperatorResult frac_integral_grid(const CausalFunction& f, Complex s,
                                  const Grid& grid,
                                  const QuadratureConfig& cfg = {});

// Integration-by-parts form at explicit depth k:
//   (1/Gamma(s+k)) int_a^x (x-y)^{s+k-1} f^(k)(y) dy
//     + sum_{m=1..k} (x-a)^{s+m-1} / Gamma(s+m) * f^(m-1)(a+)
// Equal to frac_integral(f, s, x) for every admissible k.
Complex boundary_corrected(const CausalFunction& f, Complex s, int k, double x,
                           const QuadratureConfig& cfg = {});

// n-fold nested application of J^1 by Gauss-Legendre panels; an independent
// reference path for integer orders.
Complex iterated_integral(const CausalFunction& f, int n, double x,
                          const QuadratureConfig& cfg = {});

// Analytic bound on the neglected tail beyond tail_T when a = -infinity
// (zero for finite lower bounds).
double tail_truncation_bound(const CausalFunction& f, Complex s, double x,
                             const QuadratureConfig& cfg = {});

namespace detail {

// Shared engine: J^s applied to the deriv_base-th derivative of f, evaluated
// with integration-by-parts depth k_reg (-1 = auto). Both the integral and
// derivative operators reduce to this form.
Complex j_core(const CausalFunction& f, Complex s, int k_reg, int deriv_base,
               double x, const QuadratureConfig& cfg);

int auto_regularization_k(const CausalFunction& f, Complex s, int deriv_base);

}  // namespace detail

}  // namespace fracops

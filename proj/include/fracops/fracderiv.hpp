#pragma once

#include <utility>

#include "fracops/fracint.hpp"

namespace fracops {

// D^s comes in two shapes built from the same pieces: differentiate first
// and integrate the remainder (right), or integrate first and differentiate
// the smooth result (left). The right form is the default.
enum class DerivativeVariant { left, right };

// D^s f(x) for Re(s) > 0 with k = floor(Re(s)) + 1:
//   right: (1/Gamma(k-s)) int_a^x (x-y)^{k-s-1} f^(k)(y) dy
//   left:  k-th central finite difference (h = 1e-4 max(1,|x|)) of
//          y -> J^{k-s} f(y)
Complex frac_derivative(const CausalFunction& f, Complex s, double x,
                        DerivativeVariant variant = DerivativeVariant::right,
                        const QuadratureConfig& cfg = {});

// s = E + s1 with E = floor(Re(s)) and 0 <= Re(s1) < 1 for Re(s) > 1;
// the identity split (0, s) otherwise. The imaginary part stays in s1.
std::pair<int, Complex> split_order(Complex s);

// D^{s1} applied to the analytic E-th derivative of f, with (E, s1) from
// split_order; agrees with the direct right-variant evaluation.
Complex frac_derivative_split(const CausalFunction& f, Complex s, double x,
                              const QuadratureConfig& cfg = {});

// Sign dispatch: Re(s) > 0 applies J^s, s = 0 is the identity, and
// Re(s) < 0 applies the right derivative of order -s.
Complex unified_apply(const CausalFunction& f, Complex s, double x,
                      const QuadratureConfig& cfg = {});

}  // namespace fracops

#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <vector>

namespace fracops {

using Complex = std::complex<double>;

// A causal function on ]a, +inf[: identically zero for x <= a when a is
// finite. The catalogue covers (x-a)^p powers, polynomials in (x-a),
// constants, e^x (which carries a = -inf), and scaled sums of these.
// Instances are immutable value objects and cheap to copy.
class CausalFunction {
 public:
  static CausalFunction power(double a, double p);
  static CausalFunction polynomial(double a, std::vector<Complex> coeffs);
  static CausalFunction exponential();
  static CausalFunction constant(double a, Complex c);

  double lower_bound() const;  // -infinity for the exponential kind
  bool lower_bound_infinite() const;

  Complex eval(double x) const;
  // Analytic k-th derivative at x (k = 0 is eval). Zero for x <= a.
  Complex derivative(int k, double x) const;
  // All catalogue kinds are smooth on ]a, +inf[.
  int deriv_order_available() const;

  // Limit of the k-th derivative as x -> a+ (finite a only);
  // nullopt when that limit diverges (non-integer powers below order k).
  std::optional<Complex> initial_value(int k) const;

  // Smallest local exponent of (x-a) with a nonzero coefficient in the
  // k_deriv-th derivative near a; +infinity when that derivative has no
  // algebraic behaviour at a (it vanishes identically, or the function is of
  // the exponential kind). Governs which derivative orders stay integrable
  // at the endpoint.
  double left_exponent(int k_deriv = 0) const;

  // k-th derivative evaluated at x = a + offset, offset > 0, computed from
  // the offset directly so values near a carry no cancellation error.
  Complex derivative_at_offset(int k, double offset) const;

 private:
  struct Impl;
  explicit CausalFunction(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;

  friend CausalFunction operator*(Complex scale, const CausalFunction& f);
  friend CausalFunction operator+(const CausalFunction& f, const CausalFunction& g);
};

// Scaled sums; both operands of + must share the same lower bound.
CausalFunction operator*(Complex scale, const CausalFunction& f);
CausalFunction operator+(const CausalFunction& f, const CausalFunction& g);

// Free-function aliases for the factory set.
CausalFunction make_power(double a, double p);
CausalFunction make_polynomial(double a, std::vector<Complex> coeffs);
CausalFunction make_exponential();
CausalFunction make_constant(double a, Complex c);

// k-th analytic derivative of f at x.
Complex derivative(const CausalFunction& f, int k, double x);

// Uniform evaluation abscissae.
struct Grid {
  Grid(double x0, double x1, int n);
  double x0;
  double x1;
  int n;
  std::vector<double> points() const;
};

}  // namespace fracops

#include "fracops/funcspace.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace fracops {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// p (p-1) ... (p-k+1); exactly zero for integer p < k.
double falling_factorial(double p, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= p - i;
  return out;
}

bool is_integer(double p) { return p == std::floor(p); }

}  // namespace

struct Term {
  enum class Kind { power, polynomial, exponential, constant };
  Kind kind;
  Complex scale{1.0, 0.0};
  double p = 0.0;                // power
  std::vector<Complex> coeffs;   // polynomial, over (x-a)^j
  Complex c{0.0, 0.0};           // constant
};

struct CausalFunction::Impl {
  double a = 0.0;
  bool a_infinite = false;
  std::vector<Term> terms;
};

CausalFunction::CausalFunction(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

CausalFunction CausalFunction::power(double a, double p) {
  if (!(p >= 0.0))
    throw std::domain_error("power kind requires exponent p >= 0");
  if (!std::isfinite(a))
    throw std::domain_error("power kind requires a finite lower bound");
  auto impl = std::make_shared<Impl>();
  impl->a = a;
  Term t;
  t.kind = Term::Kind::power;
  t.p = p;
  impl->terms.push_back(t);
  return CausalFunction(impl);
}

CausalFunction CausalFunction::polynomial(double a, std::vector<Complex> coeffs) {
  if (!std::isfinite(a))
    throw std::domain_error("polynomial kind requires a finite lower bound");
  auto impl = std::make_shared<Impl>();
  impl->a = a;
  Term t;
  t.kind = Term::Kind::polynomial;
  t.coeffs = std::move(coeffs);
  impl->terms.push_back(t);
  return CausalFunction(impl);
}

CausalFunction CausalFunction::exponential() {
  auto impl = std::make_shared<Impl>();
  impl->a = -kInf;
  impl->a_infinite = true;
  Term t;
  t.kind = Term::Kind::exponential;
  impl->terms.push_back(t);
  return CausalFunction(impl);
}

CausalFunction CausalFunction::constant(double a, Complex c) {
  if (!std::isfinite(a))
    throw std::domain_error("constant kind requires a finite lower bound");
  auto impl = std::make_shared<Impl>();
  impl->a = a;
  Term t;
  t.kind = Term::Kind::constant;
  t.c = c;
  impl->terms.push_back(t);
  return CausalFunction(impl);
}

double CausalFunction::lower_bound() const { return impl_->a; }

bool CausalFunction::lower_bound_infinite() const { return impl_->a_infinite; }

int CausalFunction::deriv_order_available() const {
  return std::numeric_limits<int>::max();
}

Complex CausalFunction::derivative_at_offset(int k, double offset) const {
  if (impl_->a_infinite)
    throw std::logic_error("offset evaluation requires a finite lower bound");
  Complex sum{0.0, 0.0};
  for (const Term& t : impl_->terms) {
    switch (t.kind) {
      case Term::Kind::power: {
        const double ff = falling_factorial(t.p, k);
        if (ff != 0.0) sum += t.scale * (ff * std::pow(offset, t.p - k));
        break;
      }
      case Term::Kind::polynomial: {
        Complex acc{0.0, 0.0};
        for (int j = static_cast<int>(t.coeffs.size()) - 1; j >= k; --j)
          acc = acc * offset + t.coeffs[j] * falling_factorial(j, k);
        sum += t.scale * acc;
        break;
      }
      case Term::Kind::constant:
        if (k == 0) sum += t.scale * t.c;
        break;
      case Term::Kind::exponential:
        throw std::logic_error("offset evaluation requires a finite lower bound");
    }
  }
  return sum;
}

Complex CausalFunction::derivative(int k, double x) const {
  if (k < 0) throw std::invalid_argument("derivative order must be >= 0");
  if (impl_->a_infinite) {
    Complex sum{0.0, 0.0};
    for (const Term& t : impl_->terms) sum += t.scale * std::exp(x);
    return sum;
  }
  if (x <= impl_->a) return Complex{0.0, 0.0};
  return derivative_at_offset(k, x - impl_->a);
}

Complex CausalFunction::eval(double x) const { return derivative(0, x); }

std::optional<Complex> CausalFunction::initial_value(int k) const {
  if (impl_->a_infinite) return Complex{0.0, 0.0};  // limit at -infinity
  Complex sum{0.0, 0.0};
  for (const Term& t : impl_->terms) {
    if (t.scale == Complex{0.0, 0.0}) continue;
    switch (t.kind) {
      case Term::Kind::power:
        if (is_integer(t.p)) {
          if (k == static_cast<int>(t.p))
            sum += t.scale * falling_factorial(t.p, k);  // = p!
        } else {
          if (k > t.p) return std::nullopt;  // divergent limit
          // k < p: the limit is zero.
        }
        break;
      case Term::Kind::polynomial:
        if (k < static_cast<int>(t.coeffs.size()))
          sum += t.scale * t.coeffs[k] * falling_factorial(k, k);
        break;
      case Term::Kind::constant:
        if (k == 0) sum += t.scale * t.c;
        break;
      case Term::Kind::exponential:
        break;  // unreachable: exponential terms imply a_infinite
    }
  }
  return sum;
}

double CausalFunction::left_exponent(int k_deriv) const {
  if (impl_->a_infinite) return kInf;
  double ex = kInf;  // terms annihilated by differentiation contribute nothing
  for (const Term& t : impl_->terms) {
    if (t.scale == Complex{0.0, 0.0}) continue;
    switch (t.kind) {
      case Term::Kind::power:
        if (!(is_integer(t.p) && k_deriv > t.p))
          ex = std::min(ex, t.p - k_deriv);
        break;
      case Term::Kind::polynomial:
        for (std::size_t j = k_deriv; j < t.coeffs.size(); ++j) {
          if (t.coeffs[j] != Complex{0.0, 0.0}) {
            ex = std::min(ex, static_cast<double>(j) - k_deriv);
            break;
          }
        }
        break;
      case Term::Kind::constant:
        if (k_deriv == 0 && t.c != Complex{0.0, 0.0}) ex = std::min(ex, 0.0);
        break;
      case Term::Kind::exponential:
        break;
    }
  }
  return ex;
}

CausalFunction operator*(Complex scale, const CausalFunction& f) {
  auto impl = std::make_shared<CausalFunction::Impl>(*f.impl_);
  for (Term& t : impl->terms) t.scale *= scale;
  return CausalFunction(impl);
}

CausalFunction operator+(const CausalFunction& f, const CausalFunction& g) {
  const bool same_inf = f.impl_->a_infinite == g.impl_->a_infinite;
  const bool same_a = f.impl_->a_infinite || f.impl_->a == g.impl_->a;
  if (!same_inf || !same_a)
    throw std::invalid_argument("summands must share the same lower bound");
  auto impl = std::make_shared<CausalFunction::Impl>(*f.impl_);
  impl->terms.insert(impl->terms.end(), g.impl_->terms.begin(),
                     g.impl_->terms.end());
  return CausalFunction(impl);
}

CausalFunction make_power(double a, double p) { return CausalFunction::power(a, p); }

CausalFunction make_polynomial(double a, std::vector<Complex> coeffs) {
  return CausalFunction::polynomial(a, std::move(coeffs));
}

CausalFunction make_exponential() { return CausalFunction::exponential(); }

CausalFunction make_constant(double a, Complex c) {
  return CausalFunction::constant(a, c);
}

Complex derivative(const CausalFunction& f, int k, double x) {
  return f.derivative(k, x);
}

Grid::Grid(double x0_, double x1_, int n_) : x0(x0_), x1(x1_), n(n_) {
  if (n < 2) throw std::invalid_argument("grid needs n >= 2 points");
  if (!(x0 <= x1)) throw std::invalid_argument("grid needs x0 <= x1");
}

std::vector<double> Grid::points() const {
  std::vector<double> pts(n);
  const double step = (x1 - x0) / (n - 1);
  for (int i = 0; i < n; ++i) pts[i] = x0 + step * i;
  return pts;
}

}  // namespace fracops

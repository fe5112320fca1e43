#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "fracops/verify.hpp"

using fracops::CausalFunction;
using fracops::Complex;
using fracops::Convention;
using fracops::Grid;
using fracops::QuadratureConfig;
using fracops::VerificationReport;

namespace {

double rel(Complex got, Complex want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("closed-form power transform") {
  CHECK(rel(fracops::closed_form_power(1.0, 1.0, 0.0, 2.0), 2.0) <= 1e-15);
  CHECK(rel(fracops::closed_form_power(0.5, 0.0, 0.0, 1.0),
            1.1283791670955126) <= 1e-15);
  // negative order: the derivative continuation
  CHECK(rel(fracops::closed_form_power(-0.5, 1.0, 0.0, 1.0),
            1.1283791670955126) <= 1e-15);
  // shifted lower bound
  CHECK(rel(fracops::closed_form_power(0.5, 0.0, 1.0, 2.0),
            1.1283791670955126) <= 1e-15);
  CHECK_THROWS_AS((void)fracops::closed_form_power(0.5, -0.5, 0.0, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS((void)fracops::closed_form_power(0.5, 1.0, 0.0, 0.0),
                  std::domain_error);
}

TEST_CASE("semigroup check on the composition law") {
  const QuadratureConfig cfg;
  const Grid grid(0.25, 2.0, 5);
  const CausalFunction f = fracops::make_power(0.0, 1.0);
  for (auto [s1, s2] :
       {std::pair<Complex, Complex>{0.5, 0.5}, {0.3, 0.9}, {1.5, 0.7},
        {Complex(0.5, 0.25), Complex(0.5, -0.25)}}) {
    const auto rep = fracops::check_semigroup(f, s1, s2, grid, cfg, 1e-8);
    CHECK(rep.passed);
    CHECK(rep.residual <= 1e-8);
    CHECK(rep.tolerance == 1e-8);
  }
}

TEST_CASE("small-order limit check converges at first order") {
  const QuadratureConfig cfg;
  const Grid grid(0.25, 1.5, 4);
  const auto rep = fracops::check_limits(fracops::make_power(0.0, 2.0), grid, cfg);
  CHECK(rep.passed);
  // details: {r(1e-1), r(1e-2), r(1e-3), ratio} per limit family
  REQUIRE(rep.details.size() == 20);
  for (std::size_t i = 3; i < rep.details.size(); i += 4) {
    CHECK(rep.details[i] >= 6.0);
    CHECK(rep.details[i] <= 14.0);
  }
  // residuals themselves shrink with eps
  for (std::size_t i = 0; i < rep.details.size(); i += 4) {
    CHECK(rep.details[i + 2] < rep.details[i + 1]);
    CHECK(rep.details[i + 1] < rep.details[i]);
  }
}

TEST_CASE("limit check rejects functions violating its preconditions") {
  const QuadratureConfig cfg;
  const Grid grid(0.25, 1.5, 4);
  // f(a+) != 0, and f'(a+) unbounded, both break the hypotheses; the check
  // reports failure instead of throwing
  const auto c = fracops::check_limits(fracops::make_constant(0.0, 1.0), grid, cfg);
  CHECK(!c.passed);
  const auto h = fracops::check_limits(fracops::make_power(0.0, 0.5), grid, cfg);
  CHECK(!h.passed);
}

TEST_CASE("derivative limit counterexample plateaus at the boundary slope") {
  const QuadratureConfig cfg;
  const auto rep =
      fracops::check_derivative_limit_counterexample(Grid(0.25, 1.5, 4), cfg);
  CHECK(rep.passed);
  REQUIRE(rep.details.size() == 2);
  // both eps rows sit near |f'(a)| = 1 instead of decaying
  CHECK(std::abs(rep.details[0] - 1.0) <= 0.2);
  CHECK(std::abs(rep.details[1] - 1.0) <= 0.2);
}

TEST_CASE("nested integral interchange") {
  const QuadratureConfig cfg;
  // x/Gamma(s1)Gamma(s2) convolution both ways: closed form for p = 1,
  // s1 = s2 = 1 is x^3/6
  const auto r1 = fracops::check_dirichlet(fracops::make_power(0.0, 1.0), 1.0,
                                           1.0, 1.0, cfg, 1e-7);
  CHECK(r1.passed);
  REQUIRE(r1.details.size() >= 2);
  CHECK(std::abs(r1.details[0] - 1.0 / 6.0) <= 1e-6);
  CHECK(std::abs(r1.details[1] - 1.0 / 6.0) <= 1e-6);

  // constant under (1/2, 3/2): J^2 1 = x^2/2 at x = 1
  const auto r2 = fracops::check_dirichlet(fracops::make_power(0.0, 0.0), 0.5,
                                           1.5, 1.0, cfg, 1e-7);
  CHECK(r2.passed);
  CHECK(std::abs(r2.details[0] - 0.5) <= 1e-6);

  const auto r3 = fracops::check_dirichlet(
      fracops::make_polynomial(0.5, {0.0, 0.1, 0.2}), 0.7, 0.9, 1.8, cfg, 1e-7);
  CHECK(r3.passed);
  CHECK(r3.residual <= 1e-7);
}

TEST_CASE("convention dispatch") {
  const QuadratureConfig cfg;

  // unbounded-support convention fixes the exponential: J^{1/2} e^x = e^x
  CHECK(rel(fracops::compare_conventions(fracops::make_exponential(), 0.5,
                                         Convention::liouville(), 0.0, cfg),
            1.0) <= 1e-8);

  // zero-based convention agrees bitwise with the general one at a = 0 on
  // the integral side (the derivative side differs in variant by design)
  const CausalFunction p1 = fracops::make_power(0.0, 1.0);
  const Complex r =
      fracops::compare_conventions(p1, 0.5, Convention::riemann(), 1.5, cfg);
  const Complex g =
      fracops::compare_conventions(p1, 0.5, Convention::general(0.0), 1.5, cfg);
  CHECK(r == g);
  const Complex rd =
      fracops::compare_conventions(p1, -0.5, Convention::riemann(), 1.5, cfg);
  const Complex gd =
      fracops::compare_conventions(p1, -0.5, Convention::general(0.0), 1.5, cfg);
  CHECK(std::abs(rd - gd) <= 1e-5 * std::abs(gd));

  // derivative of a constant separates the variants: integrate-first keeps
  // the boundary power, differentiate-first kills it
  const CausalFunction c = fracops::make_constant(0.0, 1.0);
  const Complex rl =
      fracops::compare_conventions(c, -0.5, Convention::riemann(), 1.0, cfg);
  const Complex cp =
      fracops::compare_conventions(c, -0.5, Convention::caputo(), 1.0, cfg);
  CHECK(rel(rl, 0.5641895835477563) <= 1e-6);
  CHECK(std::abs(cp) <= 1e-14);

  // order zero is the identity under every convention
  CHECK(fracops::compare_conventions(p1, 0.0, Convention::riemann(), 1.5, cfg) ==
        p1.eval(1.5));

  // incompatible lower bound
  CHECK_THROWS_AS((void)fracops::compare_conventions(
                      p1, 0.5, Convention::liouville(), 1.0, cfg),
                  std::domain_error);
  CHECK_THROWS_AS((void)fracops::compare_conventions(
                      fracops::make_exponential(), 0.5, Convention::riemann(),
                      1.0, cfg),
                  std::domain_error);
  CHECK_THROWS_AS((void)fracops::compare_conventions(
                      p1, 0.5, Convention::general(0.3), 1.0, cfg),
                  std::domain_error);

  // names round-trip for the CLI layer
  CHECK(Convention::liouville().name() == "liouville");
  CHECK(Convention::riemann().name() == "riemann");
  CHECK(Convention::caputo().name() == "caputo");
  CHECK(Convention::liouville_caputo().name() == "liouville_caputo");
}

TEST_CASE("linearity check across scalar fields") {
  const QuadratureConfig cfg;
  const Grid grid(0.25, 2.0, 5);
  const CausalFunction f = fracops::make_power(0.0, 1.0);
  const CausalFunction g = fracops::make_power(0.0, 2.0);
  CHECK(fracops::check_linearity(f, g, 0.5, 2.0, -1.0, grid, cfg, 1e-12).passed);
  CHECK(fracops::check_linearity(f, g, 0.5, Complex(0.0, 1.0), 1.0, grid, cfg,
                                 1e-12)
            .passed);
  CHECK(fracops::check_linearity(f, g, -0.5, 2.0, -1.0, grid, cfg, 1e-9).passed);
}

TEST_CASE("suite registry and full run") {
  const auto& names = fracops::suite_names();
  REQUIRE(names.size() == 7);
  CHECK(names.front() == "all");
  for (const std::string& expected :
       {"semigroup", "limits", "linearity", "dirichlet", "constants",
        "expansion"}) {
    CHECK(std::count(names.begin(), names.end(), expected) == 1);
  }

  const auto all = fracops::run_suite("all");
  CHECK(all.size() == 27);
  for (const auto& rep : all) {
    CAPTURE(rep.property_name);
    CHECK(rep.passed);
    CHECK(rep.residual <= rep.tolerance);
  }

  // single group runs only its own reports
  const auto lin = fracops::run_suite("linearity");
  CHECK(lin.size() == 3);
  for (const auto& rep : lin)
    CHECK(rep.property_name.rfind("linearity", 0) == 0);

  CHECK_THROWS_AS((void)fracops::run_suite("nonsense"), std::invalid_argument);
}

TEST_CASE("report formatting is stable") {
  VerificationReport rep;
  rep.property_name = "demo.case";
  rep.residual = -0.0;  // normalized away
  rep.tolerance = 1e-8;
  rep.passed = true;
  CHECK(fracops::format_report(rep) == "demo.case,0,1e-08,true");
  rep.residual = 0.5;
  rep.passed = false;
  CHECK(fracops::format_report(rep) == "demo.case,0.5,1e-08,false");
}

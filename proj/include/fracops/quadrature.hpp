#pragma once

#include <vector>

namespace fracops {

// One abscissa of a rule on the unit interval. one_minus_u is tabulated
// separately so endpoint factors like (1-u)^alpha can be formed without
// cancellation when u is close to 1.
struct UnitNode {
  double u;
  double one_minus_u;
  double w;
};

// tanh-sinh (double-exponential) rule on (0,1). Integrates functions with
// integrable algebraic endpoint singularities to near machine precision at
// modest node counts; all abscissae are strictly interior.
const std::vector<UnitNode>& tanh_sinh_rule(int n);

// Gauss-Legendre rule mapped to [0,1], for smooth integrands.
const std::vector<UnitNode>& gauss_legendre_rule(int n);

}  // namespace fracops

#include "fracops/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fracops {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Truncation point of the tanh-sinh transform. At |t| = 4.5 the node weights
// have decayed to ~1e-62, deep enough that the exponent range seen by the
// operator kernels is fully resolved while node doubling stays monotone.
constexpr double kTmax = 4.5;

std::vector<UnitNode> build_tanh_sinh(int n) {
  if (n < 4) throw std::invalid_argument("quadrature rule needs at least 4 nodes");
  const int m = (n - 1) / 2;
  const double h = kTmax / m;
  std::vector<UnitNode> nodes;
  nodes.reserve(2 * m + 1);
  for (int i = -m; i <= m; ++i) {
    const double t = h * i;
    const double st = 0.5 * kPi * std::sinh(t);
    // u = (1 + tanh(st)) / 2 and 1-u, each written in its stable form.
    const double u = 1.0 / (1.0 + std::exp(-2.0 * st));
    const double umc = 1.0 / (1.0 + std::exp(2.0 * st));
    const double ch = std::cosh(st);
    const double w = h * 0.25 * kPi * std::cosh(t) / (ch * ch);
    if (u <= 0.0 || umc <= 0.0 || !(w > 0.0) || !std::isfinite(w)) continue;
    nodes.push_back({u, umc, w});
  }
  return nodes;
}

std::vector<UnitNode> build_gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("quadrature rule needs at least 1 node");
  std::vector<UnitNode> nodes(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = {0.5 * (1.0 + x), 0.5 * (1.0 - x), 0.5 * w};
  }
  return nodes;
}

template <typename Builder>
const std::vector<UnitNode>& cached_rule(int n, Builder build,
                                         std::map<int, std::vector<UnitNode>>& cache,
                                         std::mutex& mtx) {
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build(n)).first;
  return it->second;
}

}  // namespace

const std::vector<UnitNode>& tanh_sinh_rule(int n) {
  static std::map<int, std::vector<UnitNode>> cache;
  static std::mutex mtx;
  return cached_rule(n, build_tanh_sinh, cache, mtx);
}

const std::vector<UnitNode>& gauss_legendre_rule(int n) {
  static std::map<int, std::vector<UnitNode>> cache;
  static std::mutex mtx;
  return cached_rule(n, build_gauss_legendre, cache, mtx);
}

}  // namespace fracops

#include "esv/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace esv {

namespace {

// Orthonormal Hermite values p_0..p_{n-1} at x, with the derivative of p_n.
struct HermiteEval {
  double sum_sq;  // Σ_{k<n} p_k(x)²
  double pn;
  double dpn;
};

HermiteEval hermite_eval(double x, int n) {
  double prev = 0.0, cur = std::pow(std::numbers::pi, -0.25), sum_sq = 0.0;
  for (int k = 0; k < n; ++k) {
    sum_sq += cur * cur;
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return {sum_sq, cur, std::sqrt(2.0 * n) * prev};
}

}  // namespace

QuadratureRule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: need at least one node");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  QuadratureRule rule;
  for (int k = 0; k < n; ++k) {
    // Newton polish, then Christoffel weights: the eigenvector route loses the
    // relative accuracy of the tiny outer weights
    double x = solver.eigenvalues()(k);
    for (int it = 0; it < 3; ++it) {
      const auto h = hermite_eval(x, n);
      x -= h.pn / h.dpn;
    }
    rule.nodes.push_back(x);
    rule.weights.push_back(1.0 / hermite_eval(x, n).sum_sq);
  }
  return rule;
}

}  // namespace esv

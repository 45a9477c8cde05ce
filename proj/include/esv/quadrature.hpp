#pragma once

#include <vector>

namespace esv {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for ∫ f(x) e^{-x²} dx (Golub-Welsch), nodes ascending.
QuadratureRule gauss_hermite(int n);

}  // namespace esv

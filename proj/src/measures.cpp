#include "esv/measures.hpp"

#include "detail.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace esv {

namespace {

void require_unit(double norm2, const char* what) {
  if (std::abs(norm2 - 1.0) > 1e-6)
    throw NumericError(std::string(what) + ": state is not normalized (" + std::to_string(norm2) + ")");
}

void require_bipartition(const ModeLayout& L, const ModeSet& side, const char* what) {
  detail::checked_modes(L, side, what);
  if (side.empty() || side.size() >= L.modes())
    throw std::invalid_argument(std::string(what) + ": side must be a proper non-empty subset");
}

}  // namespace

double log_negativity(const DensityMatrix& state, const ModeSet& side) {
  require_bipartition(state.layout(), side, "log_negativity");
  require_unit(state.trace().real(), "log_negativity");
  const auto ev = eigs_hermitian(partial_transpose(state, side));
  return std::max(0.0, std::log2(detail::trace_norm(ev)));
}

double log_negativity(const FockVector& state, const ModeSet& side) {
  require_bipartition(state.layout(), side, "log_negativity");
  require_unit(state.amps().squaredNorm(), "log_negativity");
  const Matrix c = bipartite_coefficients(state, side);
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Matrix>(c).singularValues();
  return std::max(0.0, 2.0 * std::log2(sv.sum()));
}

double eof_pure(const FockVector& state, const ModeSet& side) {
  require_bipartition(state.layout(), side, "eof_pure");
  require_unit(state.amps().squaredNorm(), "eof_pure");
  const Matrix c = bipartite_coefficients(state, side);
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Matrix>(c).singularValues();
  std::vector<double> p(static_cast<std::size_t>(sv.size()));
  for (Index k = 0; k < sv.size(); ++k) p[k] = sv(k) * sv(k);
  return std::max(0.0, detail::entropy_bits(p));
}

double two_qubit_negativity(const DensityMatrix& rho) {
  if (!(rho.layout() == ModeLayout{2, 2}))
    throw std::invalid_argument("two_qubit_negativity: expected a [2, 2] layout");
  return log_negativity(rho, {1});
}

}  // namespace esv

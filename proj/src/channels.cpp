#include "esv/channels.hpp"

#include "esv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace esv {

namespace {

using std::numbers::pi;

void require_single_mode(const DensityMatrix& rho, const char* what) {
  if (rho.layout().modes() != 1) throw std::invalid_argument(std::string(what) + ": single-mode input required");
}

// e^{|α|²/2} <m|D(α)|n>, a polynomial in α and α*.
Matrix scaled_displacement(cplx alpha, int n) {
  Matrix d(n, n);
  d(0, 0) = 1.0;
  for (int m = 1; m < n; ++m) d(m, 0) = alpha / std::sqrt(double(m)) * d(m - 1, 0);
  for (int c = 1; c < n; ++c) {
    const double rc = std::sqrt(double(c));
    d(0, c) = -std::conj(alpha) / rc * d(0, c - 1);
    for (int m = 1; m < n; ++m)
      d(m, c) = -std::conj(alpha) / rc * d(m, c - 1) + std::sqrt(double(m) / c) * d(m - 1, c - 1);
  }
  return d;
}

Matrix thermal_sum(const Matrix& rho, double sigma, int nodes) {
  const int n = static_cast<int>(rho.rows());
  const double lambda = 1.0 + 1.0 / sigma;
  const double scale = 1.0 / std::sqrt(lambda);
  const auto rule = gauss_hermite(nodes);
  Matrix acc = Matrix::Zero(n, n);
  for (int i = 0; i < nodes; ++i)
    for (int j = 0; j < nodes; ++j) {
      const cplx alpha(rule.nodes[i] * scale, rule.nodes[j] * scale);
      const Matrix p = scaled_displacement(alpha, n);
      acc.noalias() += (rule.weights[i] * rule.weights[j]) * (p * rho * p.adjoint());
    }
  return acc / (pi * sigma * lambda);
}

// Σ_j N(φ + 2πj; 0, σ)
double wrapped_gaussian(double phi, double sigma) {
  const int span = 2 + static_cast<int>(std::ceil(8.0 * std::sqrt(sigma) / (2 * pi)));
  double g = 0.0;
  for (int j = -span; j <= span; ++j) {
    const double x = phi + 2 * pi * j;
    g += std::exp(-x * x / (2 * sigma));
  }
  return g / std::sqrt(2 * pi * sigma);
}

// Damping factors c_k = ∫ g(φ) e^{ikφ} dφ for k = 0..kmax with m trapezoid nodes.
std::vector<double> phase_factors(double sigma, int kmax, int m) {
  std::vector<double> c(kmax + 1, 0.0);
  for (int l = 0; l < m; ++l) {
    const double phi = -pi + 2 * pi * l / m;
    const double w = 2 * pi / m * wrapped_gaussian(phi, sigma);
    for (int k = 0; k <= kmax; ++k) c[k] += w * std::cos(k * phi);
  }
  return c;
}

}  // namespace

DensityMatrix thermal_channel(const DensityMatrix& rho, const NoiseSpec& spec,
                              const TruncationPolicy& policy) {
  require_single_mode(rho, "thermal_channel");
  const double sigma = spec.sigma_tn;
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("thermal_channel: sigma_tn must be >= 0");
  if (sigma == 0.0) return rho;
  int nodes = spec.nodes > 0 ? spec.nodes : 24;
  if (nodes < 8) throw std::invalid_argument("thermal_channel: at least 8 nodes required");
  // matrix elements are polynomials of degree < 4·dim per quadrature axis
  const int cap = std::max(64, 2 * static_cast<int>(rho.mat().rows()) + 8);
  Matrix prev = thermal_sum(rho.mat(), sigma, nodes);
  for (;;) {
    if (nodes >= cap)
      throw NumericError("thermal_channel: quadrature did not converge within " + std::to_string(cap) + " nodes");
    nodes = std::min(cap, nodes + 8);
    Matrix next = thermal_sum(rho.mat(), sigma, nodes);
    const double diff = (next - prev).cwiseAbs().maxCoeff();
    prev = std::move(next);
    if (diff < 1e-9) break;
  }
  DensityMatrix out(rho.layout(), (prev + prev.adjoint()) / 2.0);
  const double deficit = rho.trace().real() - out.trace().real();
  policy.check(std::max(deficit, tail_mass(out)), "thermal_channel");
  return out;
}

DensityMatrix phase_channel(const DensityMatrix& rho, const NoiseSpec& spec) {
  require_single_mode(rho, "phase_channel");
  const double sigma = spec.sigma_pn;
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("phase_channel: sigma_pn must be >= 0");
  if (sigma == 0.0) return rho;
  const int n = static_cast<int>(rho.mat().rows());
  int m = spec.nodes > 0 ? spec.nodes : 32;
  if (m < 8) throw std::invalid_argument("phase_channel: at least 8 nodes required");
  m = std::max(m, n);
  std::vector<double> c = phase_factors(sigma, n - 1, m);
  for (;;) {
    if (m >= (1 << 16)) throw NumericError("phase_channel: quadrature did not converge");
    m *= 2;
    std::vector<double> next = phase_factors(sigma, n - 1, m);
    double diff = 0.0;
    for (int k = 0; k < n; ++k) diff = std::max(diff, std::abs(next[k] - c[k]));
    c = std::move(next);
    if (diff < 1e-12) break;
  }
  Matrix out = rho.mat();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out(i, j) *= c[std::abs(i - j)];
  return DensityMatrix(rho.layout(), std::move(out));
}

DensityMatrix bs_loss(const DensityMatrix& rho, double transmissivity, const TruncationPolicy& policy) {
  require_single_mode(rho, "bs_loss");
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0))
    throw std::invalid_argument("bs_loss: transmissivity must lie in [0, 1]");
  const int n = rho.layout().dim(0);
  const DensityMatrix ancilla(vacuum(ModeLayout{n}));
  const double theta = std::acos(std::sqrt(transmissivity));
  const DensityMatrix mixed = apply_beamsplitter(0, 1, tensor(rho, ancilla), policy, theta);
  return partial_trace(mixed, {0});
}

DensityMatrix bs_loss(const FockVector& psi, double transmissivity, const TruncationPolicy& policy) {
  if (psi.layout().modes() != 1) throw std::invalid_argument("bs_loss: single-mode input required");
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0))
    throw std::invalid_argument("bs_loss: transmissivity must lie in [0, 1]");
  const int n = psi.layout().dim(0);
  const double theta = std::acos(std::sqrt(transmissivity));
  const FockVector mixed = apply_beamsplitter(0, 1, tensor(psi, vacuum(ModeLayout{n})), policy, theta);
  return partial_trace(mixed, {0});
}

DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseSpec& spec, const TruncationPolicy& policy) {
  switch (spec.kind) {
    case NoiseKind::thermal: return thermal_channel(rho, spec, policy);
    case NoiseKind::phase: return phase_channel(rho, spec);
    case NoiseKind::bs_loss: return bs_loss(rho, spec.transmissivity, policy);
  }
  throw std::invalid_argument("apply_noise: unknown kind");
}

}  // namespace esv

#include "esv/states.hpp"

#include "detail.hpp"

#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

namespace esv {

namespace {

void require_cutoff(int cutoff, int minimum, const char* what) {
  if (cutoff < minimum)
    throw std::invalid_argument(std::string(what) + ": cutoff must be at least " + std::to_string(minimum));
}

Vector squeezed_amplitudes(double s, int cutoff) {
  Vector v = Vector::Zero(cutoff);
  const double t = -0.5 * std::tanh(s);
  double c = 1.0 / std::sqrt(std::cosh(s));
  for (int n = 0; 2 * n < cutoff; ++n) {
    v(2 * n) = c;
    c *= t * std::sqrt(double(2 * n + 1) * (2 * n + 2)) / (n + 1);
  }
  return v;
}

double truncation_tail(const FockVector& v) {
  return std::max(1.0 - v.amps().squaredNorm(), tail_mass(v));
}

FockVector normalized(const ModeLayout& L, Vector amps, const char* what) {
  const double n = amps.norm();
  if (!(n > 1e-12)) throw NumericError(std::string(what) + ": superposition is the null vector");
  return FockVector(L, detail::fix_global_phase(amps / n));
}

}  // namespace

FockVector squeezed_vacuum(const SqueezeSpec& spec, const TruncationPolicy& policy) {
  require_cutoff(spec.cutoff, 2, "squeezed_vacuum");
  if (!std::isfinite(spec.s)) throw std::invalid_argument("squeezed_vacuum: non-finite s");
  if (policy.strict && std::abs(spec.s) > 3.0)
    throw TruncationError("squeezed_vacuum: |s| > 3 is outside the strict-mode range");
  FockVector v(ModeLayout{spec.cutoff}, squeezed_amplitudes(spec.s, spec.cutoff));
  policy.check(truncation_tail(v), "squeezed_vacuum");
  return v;
}

FockVector esv_pure(const EsvSpec& spec, const TruncationPolicy& policy) {
  if (1.0 + std::cos(spec.phi) / std::cosh(2 * spec.s) < 1e-14)
    throw NumericError("esv_pure: s = 0, phi = pi gives the null vector");
  const FockVector p = squeezed_vacuum({.s = spec.s, .cutoff = spec.cutoff}, policy);
  const FockVector m = squeezed_vacuum({.s = -spec.s, .cutoff = spec.cutoff}, policy);
  Vector amps = tensor(p, m).amps() + std::polar(1.0, spec.phi) * tensor(m, p).amps();
  return normalized(ModeLayout{spec.cutoff, spec.cutoff}, std::move(amps), "esv_pure");
}

DensityMatrix esv_mixed(const DensityMatrix& rho_a, const DensityMatrix& rho_b, double phi) {
  for (const auto* r : {&rho_a, &rho_b}) {
    if (r->layout().modes() != 1) throw std::invalid_argument("esv_mixed: inputs must be single-mode");
    if (r->hermiticity_error() > 1e-10) throw NumericError("esv_mixed: input is not Hermitian");
    if (eigs_hermitian(*r).back() < -1e-8) throw NumericError("esv_mixed: input is not positive");
  }
  if (!(rho_a.layout() == rho_b.layout()))
    throw std::invalid_argument("esv_mixed: inputs must share the cutoff");
  const DensityMatrix joint = tensor(rho_a, rho_b);
  const auto& L = joint.layout();
  static constexpr cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx e = std::polar(1.0, phi);
  Vector t(L.total());
  for (Index i = 0; i < L.total(); ++i) t(i) = ipow[L.digit(i, 1) % 4] + e * ipow[L.digit(i, 0) % 4];
  Matrix m = t.asDiagonal() * joint.mat() * t.conjugate().asDiagonal();
  const double tr = m.trace().real();
  if (!(tr > 1e-14)) throw NumericError("esv_mixed: conditional map annihilates the input");
  return DensityMatrix(L, m / tr);
}

FockVector phi_basis(double s, Sign sign, int cutoff, const TruncationPolicy& policy) {
  const FockVector p = squeezed_vacuum({.s = s, .cutoff = cutoff}, policy);
  const FockVector m = squeezed_vacuum({.s = -s, .cutoff = cutoff}, policy);
  Vector amps = sign == Sign::plus ? Vector(p.amps() + m.amps()) : Vector(p.amps() - m.amps());
  // the cancelled levels are exact zeros in exact arithmetic
  for (Index n = 0; n < amps.size(); ++n)
    if (n % 4 != (sign == Sign::plus ? 0 : 2)) amps(n) = 0.0;
  return normalized(ModeLayout{cutoff}, std::move(amps), "phi_basis");
}

FockVector displaced_squeezed(cplx alpha, double s, int cutoff, const TruncationPolicy& policy) {
  require_cutoff(cutoff, 2, "displaced_squeezed");
  const double guard = std::sqrt(double(cutoff)) - 1.0;
  if (std::abs(alpha) > std::max(guard, 0.5) * 1.5)
    throw TruncationError("displaced_squeezed: |alpha| too large for the cutoff");
  const int internal = 2 * cutoff + 40;
  const Vector sq = squeezed_amplitudes(s, internal);
  Vector amps = gate_matrix(SingleModeGate::displace(alpha), cutoff, internal) * sq;
  FockVector v(ModeLayout{cutoff}, detail::fix_global_phase(std::move(amps)));
  policy.check(truncation_tail(v), "displaced_squeezed");
  return v;
}

double displaced_overlap(cplx alpha, cplx beta, double r) {
  const double c = std::cosh(2 * r);
  return std::exp(-std::norm(beta - alpha) / c) / c;
}

FockVector two_mode_squeezed_vacuum(double s, int cutoff, const TruncationPolicy& policy) {
  require_cutoff(cutoff, 2, "two_mode_squeezed_vacuum");
  const ModeLayout L{cutoff, cutoff};
  Vector amps = Vector::Zero(L.total());
  const double t = std::tanh(s);
  double c = 1.0 / std::cosh(s);
  for (int n = 0; n < cutoff; ++n, c *= t) amps(n * cutoff + n) = c;
  FockVector v(L, std::move(amps));
  policy.check(truncation_tail(v), "two_mode_squeezed_vacuum");
  return v;
}

FockVector esv_generalized(const DisplacedSqueezedSpec& spec, double phi,
                           const TruncationPolicy& policy) {
  const FockVector ap = displaced_squeezed(spec.alpha, spec.s, spec.cutoff, policy);
  const FockVector bm = displaced_squeezed(spec.beta, -spec.s, spec.cutoff, policy);
  Vector amps = tensor(ap, bm).amps() + std::polar(1.0, phi) * tensor(bm, ap).amps();
  return normalized(ModeLayout{spec.cutoff, spec.cutoff}, std::move(amps), "esv_generalized");
}

FockVector esv_effective_qubits(double s, double phi) {
  const double o = 1.0 / std::sqrt(std::cosh(2 * s));
  const double a = std::sqrt((1.0 + o) / 2.0);
  const double b = std::sqrt(std::max(0.0, (1.0 - o) / 2.0));
  Vector p(2), m(2);
  p << a, b;
  m << a, -b;
  Vector pm = Eigen::kroneckerProduct(p, m).eval();
  Vector mp = Eigen::kroneckerProduct(m, p).eval();
  return normalized(ModeLayout{2, 2}, pm + std::polar(1.0, phi) * mp, "esv_effective_qubits");
}

}  // namespace esv

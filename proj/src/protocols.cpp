#include "esv/protocols.hpp"

#include "detail.hpp"

#include <cmath>
#include <numbers>

namespace esv {

namespace {

using std::numbers::pi;

Projection project(const FockVector& state, std::pair<std::size_t, std::size_t> modes, bool keep_odd_odd) {
  const auto& L = state.layout();
  if (modes.first >= L.modes() || modes.second >= L.modes() || modes.first == modes.second)
    throw std::invalid_argument("odd_odd_projector: modes must be distinct and in range");
  Vector v = state.amps();
  for (Index i = 0; i < L.total(); ++i) {
    const bool odd_odd = (L.digit(i, modes.first) % 2 == 1) && (L.digit(i, modes.second) % 2 == 1);
    if (odd_odd != keep_odd_odd) v(i) = 0.0;
  }
  const double p = v.squaredNorm();
  return {FockVector(L, std::move(v)), p};
}

// Projects the qubit mode 0 on (|0> ± |1>)/√2 and returns the remaining modes.
Conditional measure_ancilla(const FockVector& joint, Sign outcome) {
  const Matrix c = bipartite_coefficients(joint, {0});  // 2 × rest
  const double sgn = outcome == Sign::plus ? 1.0 : -1.0;
  Vector rest = (c.row(0) + sgn * c.row(1)).transpose() / std::sqrt(2.0);
  const double p = rest.squaredNorm();
  if (!(p > 1e-14)) throw NumericError("generation scheme: conditional state is null");
  std::vector<int> dims(joint.layout().dims().begin() + 1, joint.layout().dims().end());
  return {FockVector(ModeLayout(dims), detail::fix_global_phase(rest / std::sqrt(p))), p};
}

FockVector ancilla_state(const QubitAmplitudes& q) {
  Vector v(2);
  v << q.a0, q.a1;
  return FockVector(ModeLayout{2}, std::move(v));
}

// exp(iγ n_c n_t) with n_c the ancilla (mode 0) occupation or its complement.
FockVector controlled_phase(const FockVector& state, std::size_t target, double gamma, bool on_one) {
  const auto& L = state.layout();
  Vector v = state.amps();
  for (Index i = 0; i < L.total(); ++i) {
    const int control = L.digit(i, 0) == (on_one ? 1 : 0) ? 1 : 0;
    v(i) *= std::polar(1.0, gamma * control * L.digit(i, target));
  }
  return FockVector(L, std::move(v));
}

}  // namespace

void QubitAmplitudes::validate() const {
  if (std::abs(std::norm(a0) + std::norm(a1) - 1.0) > 1e-12)
    throw std::invalid_argument("QubitAmplitudes: |a0|^2 + |a1|^2 must equal 1");
}

Projection odd_odd_projector(const FockVector& state, std::pair<std::size_t, std::size_t> modes) {
  return project(state, modes, true);
}

Projection odd_odd_complement(const FockVector& state, std::pair<std::size_t, std::size_t> modes) {
  return project(state, modes, false);
}

FockVector esv_phi_pair(double s, double phi, int cutoff, const TruncationPolicy& policy) {
  const FockVector psi = esv_pure({.s = s, .phi = phi, .cutoff = cutoff}, policy);
  return apply_single_mode(SingleModeGate::phase(pi / 2), 1, psi, policy);
}

ProtocolResult entanglement_swap(double s, int cutoff, const TruncationPolicy& policy) {
  if (!(s > 0.0)) throw NumericError("entanglement_swap: s must be positive");
  const FockVector psi = esv_pure({.s = s, .phi = pi, .cutoff = cutoff}, policy);
  const FockVector phi = esv_phi_pair(s, pi, cutoff, policy);
  const FockVector joint = apply_beamsplitter(1, 2, tensor(psi, phi), policy);
  const Projection heralded = odd_odd_projector(joint, {1, 2});
  if (!(heralded.probability > 1e-14)) throw NumericError("entanglement_swap: heralding probability is zero");
  const DensityMatrix out = partial_trace(heralded.state, {0, 3});
  return {heralded.probability, fidelity(phi, out)};
}

ProtocolResult teleport(const QubitAmplitudes& input, double s, int cutoff, const TruncationPolicy& policy) {
  input.validate();
  if (!(s > 0.0)) throw NumericError("teleport: s must be positive");
  const FockVector p = squeezed_vacuum({.s = s, .cutoff = cutoff}, policy);
  const FockVector m = squeezed_vacuum({.s = -s, .cutoff = cutoff}, policy);
  Vector in = input.a0 * p.amps() + input.a1 * m.amps();
  if (!(in.norm() > 1e-12)) throw NumericError("teleport: input state is null");
  const FockVector psi_in(ModeLayout{cutoff}, in / in.norm());
  const FockVector resource = esv_phi_pair(s, pi, cutoff, policy);
  const FockVector joint = apply_beamsplitter(0, 1, tensor(psi_in, resource), policy);
  const Projection heralded = odd_odd_projector(joint, {0, 1});
  if (!(heralded.probability > 1e-14)) throw NumericError("teleport: heralding probability is zero");
  DensityMatrix out = partial_trace(heralded.state, {2});
  out = apply_single_mode(SingleModeGate::phase(pi / 2), 0, out, policy);
  return {heralded.probability, fidelity(psi_in, out)};
}

Conditional generate_scheme_a(double s, const QubitAmplitudes& ancilla, Sign outcome, int cutoff,
                              KerrSpec kerr, const TruncationPolicy& policy) {
  ancilla.validate();
  const FockVector p = squeezed_vacuum({.s = s, .cutoff = cutoff}, policy);
  FockVector joint = tensor(tensor(ancilla_state(ancilla), p), p);  // [ancilla, m1, m2]
  joint = controlled_phase(joint, 1, kerr.gamma, true);
  joint = controlled_phase(joint, 2, kerr.gamma, false);
  return measure_ancilla(joint, outcome);
}

Conditional generate_scheme_b(double s, const QubitAmplitudes& ancilla, Sign outcome, int cutoff,
                              KerrSpec kerr, const TruncationPolicy& policy) {
  ancilla.validate();
  const FockVector tmsv = two_mode_squeezed_vacuum(s, cutoff, policy);
  FockVector joint = tensor(ancilla_state(ancilla), tmsv);  // [ancilla, m1, m2]
  joint = controlled_phase(joint, 1, kerr.gamma, true);
  joint = apply_beamsplitter(1, 2, joint, policy);
  return measure_ancilla(joint, outcome);
}

}  // namespace esv

// Entanglement swapping, teleportation and the two ancilla-based generation
// schemes for ESV states.

#pragma once

#include "esv/fock.hpp"
#include "esv/states.hpp"

#include <utility>

namespace esv {

struct QubitAmplitudes {
  cplx a0 = 1.0;
  cplx a1 = 0.0;

  /// Throws std::invalid_argument unless |a0|²+|a1|² = 1 within 1e-12.
  void validate() const;
};

/// Cross-Kerr phase γ of Θ_γ = exp(iγ n_1 n_2).
struct KerrSpec {
  double gamma = 0.0;
};

struct Projection {
  FockVector state;  // unnormalized
  double probability;
};

struct ProtocolResult {
  double probability;
  double fidelity;
};

struct Conditional {
  FockVector state;  // normalized
  double probability;
};

/// Keeps the amplitudes with an odd photon number in both listed modes.
Projection odd_odd_projector(const FockVector& state, std::pair<std::size_t, std::size_t> modes);
/// The complementary projection (at least one of the two modes even).
Projection odd_odd_complement(const FockVector& state, std::pair<std::size_t, std::size_t> modes);

/// N(|s+,s+> + e^{iφ}|s-,s->), i.e. |Ψ(φ)> with mode b rotated by π/2.
FockVector esv_phi_pair(double s, double phi, int cutoff, const TruncationPolicy& policy = {});

/// |Ψ(π)>_{01} ⊗ |Φ(π)>_{23}, balanced BS on modes (1, 2), odd-odd heralding on
/// (1, 2). Returns the heralding probability and the fidelity of the reduced
/// state of modes (0, 3) with |Φ(π)>.
ProtocolResult entanglement_swap(double s, int cutoff, const TruncationPolicy& policy = {});

/// Input a0|s+> + a1|s-> (normalized) on mode 0, resource |Φ(π)> on modes
/// (1, 2), BS on (0, 1), odd-odd heralding on (0, 1), then R(π/2) on mode 2.
/// Returns the heralding probability and the fidelity of mode 2 with the input.
ProtocolResult teleport(const QubitAmplitudes& input, double s, int cutoff,
                        const TruncationPolicy& policy = {});

/// Ancilla a0|0>+a1|1> and |s+,s+>; ancilla-controlled phase flips
/// exp(iγ n_anc n_1) and exp(iγ (1-n_anc) n_2); ancilla measured in |±>.
/// With γ = π/2 the conditional two-mode state is ∝ a0|s+,s-> ± a1|s-,s+>.
Conditional generate_scheme_a(double s, const QubitAmplitudes& ancilla, Sign outcome, int cutoff,
                              KerrSpec kerr = {std::numbers::pi / 2}, const TruncationPolicy& policy = {});

/// Ancilla a0|0>+a1|1> and the two-mode squeezed vacuum; controlled phase
/// exp(iγ n_anc n_1); balanced BS on the modes; ancilla measured in |±>.
/// With γ = π the conditional state matches scheme a.
Conditional generate_scheme_b(double s, const QubitAmplitudes& ancilla, Sign outcome, int cutoff,
                              KerrSpec kerr = {std::numbers::pi}, const TruncationPolicy& policy = {});

}  // namespace esv

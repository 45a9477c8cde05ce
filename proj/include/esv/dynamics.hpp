// Resonant Jaynes-Cummings coupling of ground-state qubits to the two modes
// and the entanglement transferred to the qubits.

#pragma once

#include "esv/fock.hpp"

namespace esv {

/// Closed-form evolution under H = g(σ+ a + σ- a†) for τ = g t, acting on the
/// pair (qubit_mode, field_mode) of a larger state. The qubit mode must have
/// dimension 2 (|g> = level 0, |e> = level 1):
///   |g,n> → cos(τ√n)|g,n> - i sin(τ√n)|e,n-1>
///   |e,n> → cos(τ√(n+1))|e,n> - i sin(τ√(n+1))|g,n+1>
/// The |e, top> level couples to a level outside the cutoff; its weight is
/// reported through `policy`.
FockVector jc_evolve_pair(const FockVector& state, std::size_t qubit_mode, std::size_t field_mode,
                          double tau, const TruncationPolicy& policy = {});
DensityMatrix jc_evolve_pair(const DensityMatrix& state, std::size_t qubit_mode,
                             std::size_t field_mode, double tau, const TruncationPolicy& policy = {});

/// Two-qubit state after coupling a ground-state qubit to each mode of a
/// two-mode state for time τ and tracing the modes out. Layout [2, 2].
DensityMatrix two_qubit_state(const FockVector& modes, double tau, const TruncationPolicy& policy = {});
DensityMatrix two_qubit_state(const DensityMatrix& modes, double tau, const TruncationPolicy& policy = {});

/// two_qubit_negativity of two_qubit_state.
double entangling_power(const FockVector& modes, double tau, const TruncationPolicy& policy = {});
double entangling_power(const DensityMatrix& modes, double tau, const TruncationPolicy& policy = {});

}  // namespace esv

// Entanglement quantifiers.

#pragma once

#include "esv/fock.hpp"

namespace esv {

/// log2 ||ρ^{T_side}||_1, clamped at 0. `side` lists the modes of one party.
double log_negativity(const DensityMatrix& state, const ModeSet& side = {1});
/// Pure-state route via Schmidt coefficients: 2 log2 Σ_k σ_k (σ = singular values).
double log_negativity(const FockVector& state, const ModeSet& side = {1});

/// Von Neumann entropy (bits) of the reduced state on `side`.
double eof_pure(const FockVector& state, const ModeSet& side = {0});

/// log_negativity specialized to a [2, 2] layout.
double two_qubit_negativity(const DensityMatrix& rho);

}  // namespace esv

// Single-mode noise channels applied to squeezed inputs before the ESV is built.

#pragma once

#include "esv/fock.hpp"

namespace esv {

enum class NoiseKind { thermal, phase, bs_loss };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::thermal;
  double sigma_tn = 0.0;        // thermal: variance of the complex displacement, <|α|²> = σ
  double sigma_pn = 0.0;        // phase: variance of the phase angle (rad²)
  double transmissivity = 1.0;  // bs_loss: cos²θ
  int nodes = 0;                // starting node count; 0 picks the kind's default
};

/// ∫ e^{-|α|²/σ}/(πσ) D(α)ρD†(α) d²α by tensor Gauss-Hermite quadrature with
/// the displacement's own Gaussian factor absorbed into the weight. Nodes grow
/// from 24 (or spec.nodes) in steps of 8 until successive results agree to
/// 1e-9; NumericError if 64 nodes per axis do not suffice. Population pushed
/// past the cutoff is reported through `policy`.
DensityMatrix thermal_channel(const DensityMatrix& rho, const NoiseSpec& spec,
                              const TruncationPolicy& policy = {});

/// ∫ e^{-φ²/2σ}/√(2πσ) R(φ)ρR†(φ) dφ, by the periodic trapezoid rule on the
/// wrapped Gaussian. Node count starts at 32 (or spec.nodes) and doubles until
/// successive results agree to 1e-12.
DensityMatrix phase_channel(const DensityMatrix& rho, const NoiseSpec& spec);

/// Mixes the mode with vacuum on a beam splitter of the given transmissivity
/// and traces out the ancilla.
DensityMatrix bs_loss(const DensityMatrix& rho, double transmissivity,
                      const TruncationPolicy& policy = {});
DensityMatrix bs_loss(const FockVector& psi, double transmissivity,
                      const TruncationPolicy& policy = {});

/// Dispatches on spec.kind.
DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseSpec& spec,
                          const TruncationPolicy& policy = {});

}  // namespace esv

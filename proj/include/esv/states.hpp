// Constructors for squeezed vacua, entangled squeezed vacuum (ESV) states,
// displaced squeezed states and the two-mode squeezed vacuum.
//
// |s±> denotes the single-mode squeezed vacuum with parameter ±s.

#pragma once

#include "esv/fock.hpp"

namespace esv {

struct SqueezeSpec {
  double s = 0.0;
  int cutoff = 30;
};

struct EsvSpec {
  double s = 0.0;
  double phi = 0.0;
  int cutoff = 30;
};

struct DisplacedSqueezedSpec {
  cplx alpha = 0.0;
  cplx beta = 0.0;
  double s = 0.0;
  int cutoff = 40;
};

enum class Sign { plus, minus };

/// (cosh s)^{-1/2} Σ_n √(2n)!/n! (-tanh(s)/2)^n |2n>, not renormalized after truncation.
FockVector squeezed_vacuum(const SqueezeSpec& spec, const TruncationPolicy& policy = {});

/// |Ψ(φ)> = N(|s+>|s->+e^{iφ}|s->|s+>) with N = 1/√(2[1+cosφ/cosh2s]).
/// Throws NumericError at the null point s = 0, φ = π.
FockVector esv_pure(const EsvSpec& spec, const TruncationPolicy& policy = {});

/// T(ρ_a ⊗ ρ_b)T† / Tr[...] with T = 1⊗R_b(π/2) + e^{iφ} R_a(π/2)⊗1.
DensityMatrix esv_mixed(const DensityMatrix& rho_a, const DensityMatrix& rho_b, double phi);

/// Normalized |s+> ± |s->; supported on n ≡ 0 (plus) or n ≡ 2 (minus) mod 4.
FockVector phi_basis(double s, Sign sign, int cutoff, const TruncationPolicy& policy = {});

/// D(α)|s+>, built at an enlarged internal cutoff and truncated.
FockVector displaced_squeezed(cplx alpha, double s, int cutoff, const TruncationPolicy& policy = {});

/// |<α+|β->|^2 = exp(-|β-α|^2/cosh2r)/cosh2r, with |α+> = D(α)|r+>, |β-> = D(β)|r->.
double displaced_overlap(cplx alpha, cplx beta, double r);

/// (cosh s)^{-1} Σ_n (tanh s)^n |n,n>.
FockVector two_mode_squeezed_vacuum(double s, int cutoff, const TruncationPolicy& policy = {});

/// N'(|α+,β-> + e^{iφ}|β-,α+>).
FockVector esv_generalized(const DisplacedSqueezedSpec& spec, double phi,
                           const TruncationPolicy& policy = {});

/// |Ψ(φ)> mapped by an exact local isometry of span{|s+>,|s->} onto two
/// qubits: |s±> → a|0> ± b|1>, a² = (1+o)/2, b² = (1-o)/2, o = <s+|s->.
/// Entanglement is unchanged; no truncation is involved, so any s works.
FockVector esv_effective_qubits(double s, double phi);

}  // namespace esv

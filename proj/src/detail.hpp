// Internal helpers shared by the library translation units.
#pragma once

#include "esv/fock.hpp"

#include <string>
#include <vector>

namespace esv::detail {

/// For every flat index of `layout`, the flat index restricted to `modes`
/// (in the sub-layout of those modes) and to the complement.
struct IndexSplit {
  ModeLayout inside;
  ModeLayout outside;
  std::vector<Index> in;   // flat -> index within `inside`
  std::vector<Index> out;  // flat -> index within `outside`
  ModeSet complement;
};

IndexSplit split_index(const ModeLayout& layout, const ModeSet& modes);

/// Validates a mode set against a layout: in range, no duplicates. Returns it sorted.
ModeSet checked_modes(const ModeLayout& layout, const ModeSet& modes, const char* what);

/// Global phase convention: the largest-magnitude amplitude (first in flat
/// order on ties) is made real and positive.
Vector fix_global_phase(Vector amps);

/// Determinant of a Hermitian matrix by pivoted LU. Throws NumericError if the
/// imaginary residue exceeds 1e-10 * (1 + |det|).
double hermitian_determinant(const Matrix& m);

/// Sum of |λ| over eigenvalues with |λ| above the 1e-11 floor.
double trace_norm(const std::vector<double>& eigenvalues);

/// -Σ λ log2 λ over eigenvalues above the 1e-11 floor.
double entropy_bits(const std::vector<double>& eigenvalues);

constexpr double kEigenFloor = 1e-11;

}  // namespace esv::detail

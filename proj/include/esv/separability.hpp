// Moment-matrix entanglement tests on two-mode states (modes 0 = a, 1 = b).

#pragma once

#include "esv/fock.hpp"

#include <compare>
#include <vector>

namespace esv {

/// Multi-index (i1, i2, i3, i4) labelling the operator a†^i1 a^i2 b†^i3 b^i4.
struct MomentIndex {
  int i1 = 0, i2 = 0, i3 = 0, i4 = 0;

  int weight() const { return i1 + i2 + i3 + i4; }
  int operator[](int k) const;  // 1-based component access
  bool operator==(const MomentIndex&) const = default;
};

/// i < j iff |i| < |j|, or the weights agree and at the highest position k
/// where they differ i_k < j_k.
std::strong_ordering multiindex_compare(const MomentIndex& i, const MomentIndex& j);

/// All multi-indices with |i| <= max_weight, ascending.
std::vector<MomentIndex> multiindices(int max_weight);

constexpr int kMaxMomentWeight = 4;

/// Strictly increasing 1-based row labels of a principal minor.
class MinorSelector {
 public:
  explicit MinorSelector(std::vector<int> rows);
  const std::vector<int>& rows() const { return rows_; }

 private:
  std::vector<int> rows_;
};

/// The moment-matrix row labelled r (1-based) in the multi-index order.
MomentIndex moment_row(int r);

/// M_ij(ρ^PT) = <a†^i1 a^i2 b†^j3 b^j4 a†^j2 a^j1 b†^i4 b^i3>, evaluated on ρ itself.
cplx moment_matrix_entry(const DensityMatrix& state, const MomentIndex& i, const MomentIndex& j,
                         const TruncationPolicy& policy = {});
cplx moment_matrix_entry(const FockVector& state, const MomentIndex& i, const MomentIndex& j,
                         const TruncationPolicy& policy = {});

/// Same entry from the explicit partial transpose:
/// Tr[ρ^{T_b} a†^i1 a^i2 b†^i3 b^i4 a†^j2 a^j1 b†^j4 b^j3].
cplx moment_matrix_entry_explicit(const DensityMatrix& state, const MomentIndex& i,
                                  const MomentIndex& j, const TruncationPolicy& policy = {});

/// Principal minor of the PT moment matrix.
Matrix moment_minor(const DensityMatrix& state, const MinorSelector& selector,
                    const TruncationPolicy& policy = {});
Matrix moment_minor(const FockVector& state, const MinorSelector& selector,
                    const TruncationPolicy& policy = {});

double minor_determinant(const DensityMatrix& state, const MinorSelector& selector,
                         const TruncationPolicy& policy = {});
double minor_determinant(const FockVector& state, const MinorSelector& selector,
                         const TruncationPolicy& policy = {});

double simon_det(const DensityMatrix& state, const TruncationPolicy& policy = {});
double simon_det(const FockVector& state, const TruncationPolicy& policy = {});
double duan_det(const DensityMatrix& state, const TruncationPolicy& policy = {});
double duan_det(const FockVector& state, const TruncationPolicy& policy = {});

/// The 5×5 fourth-order matrix with first row (1, <a†b>, <a†b†>, <ab>, <ab†>),
/// row-major operator table
///   1      a†b      a†b†      ab      ab†
///   ab†    aa†bb†   aa†b†b†   aabb†   aab†b†
///   ab     aa†bb    aa†b†b    aabb    aab†b
///   a†b†   a†a†bb†  a†a†b†b†  a†abb†  a†ab†b†
///   a†b    a†a†bb   a†a†b†b   a†abb   a†ab†b
/// evaluated on the state.
Matrix esv_criterion_matrix(const DensityMatrix& state, const TruncationPolicy& policy = {});
Matrix esv_criterion_matrix(const FockVector& state, const TruncationPolicy& policy = {});
double esv_criterion_det(const DensityMatrix& state, const TruncationPolicy& policy = {});
double esv_criterion_det(const FockVector& state, const TruncationPolicy& policy = {});

}  // namespace esv

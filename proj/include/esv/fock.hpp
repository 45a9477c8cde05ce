// Truncated Fock-space tensor algebra: layouts, pure and mixed multi-mode
// states, single- and two-mode gates, reductions and spectral helpers.
//
// Index convention: mode 0 is the most significant digit of the flat
// index, so tensor(x, y) is the Kronecker product x ⊗ y.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace esv {

using cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;
using ModeSet = std::vector<std::size_t>;

/// Base for errors raised by numeric guards (truncation, residues, null states).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TruncationError : public GuardError {
 public:
  using GuardError::GuardError;
};

class NumericError : public GuardError {
 public:
  using GuardError::GuardError;
};

/// Controls what happens when the truncated Fock basis loses too much weight.
///
/// The tail diagnostic of an operation is the population that either left the
/// truncated space or sits in the top 10% of Fock levels of an affected mode.
/// In strict mode a tail above `threshold` throws TruncationError; otherwise
/// the optional `on_warning` sink is told and the result is returned as is.
struct TruncationPolicy {
  bool strict = false;
  double threshold = 1e-8;
  std::function<void(std::string_view)> on_warning;

  void check(double tail, std::string_view what) const;
};

/// Ordered per-mode cutoffs. Mode m holds levels |0>..|dim(m)-1>.
class ModeLayout {
 public:
  ModeLayout() = default;
  explicit ModeLayout(std::vector<int> dims);
  ModeLayout(std::initializer_list<int> dims) : ModeLayout(std::vector<int>(dims)) {}

  std::size_t modes() const { return dims_.size(); }
  int dim(std::size_t mode) const { return dims_.at(mode); }
  const std::vector<int>& dims() const { return dims_; }
  Index total() const { return total_; }
  Index stride(std::size_t mode) const { return strides_.at(mode); }

  int digit(Index flat, std::size_t mode) const {
    return static_cast<int>((flat / strides_[mode]) % dims_[mode]);
  }
  Index flat(std::span<const int> levels) const;

  ModeLayout concat(const ModeLayout& other) const;
  ModeLayout subset(const ModeSet& modes) const;

  bool operator==(const ModeLayout& other) const { return dims_ == other.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<Index> strides_;
  Index total_ = 1;
};

class FockVector {
 public:
  FockVector(ModeLayout layout, Vector amps);

  const ModeLayout& layout() const { return layout_; }
  const Vector& amps() const { return amps_; }
  cplx amp(std::initializer_list<int> levels) const {
    return amps_(layout_.flat(std::span<const int>(levels.begin(), levels.size())));
  }
  double norm() const { return amps_.norm(); }

 private:
  ModeLayout layout_;
  Vector amps_;
};

class DensityMatrix {
 public:
  DensityMatrix(ModeLayout layout, Matrix mat);
  /// Projector |v><v| (not renormalized).
  explicit DensityMatrix(const FockVector& v);

  const ModeLayout& layout() const { return layout_; }
  const Matrix& mat() const { return mat_; }
  cplx trace() const { return mat_.trace(); }
  /// Largest elementwise deviation from Hermiticity.
  double hermiticity_error() const;

 private:
  ModeLayout layout_;
  Matrix mat_;
};

FockVector vacuum(const ModeLayout& layout);

/// Population in the top 10% of Fock levels of one mode.
double tail_mass(const FockVector& v, std::size_t mode);
double tail_mass(const DensityMatrix& rho, std::size_t mode);
/// Largest single-mode tail over all modes.
double tail_mass(const FockVector& v);
double tail_mass(const DensityMatrix& rho);

// ---------------------------------------------------------------- gates

/// Single-mode gate. Conventions:
///   squeeze(s)   S(s) = exp[(s/2)(a^2 - a†^2)], so S(s)|0> has amplitudes
///                proportional to (-tanh(s)/2)^n on |2n>;
///   displace(α)  D(α) = exp(α a† - α* a);
///   phase(θ)     R(θ) = exp(iθ a†a).
struct SingleModeGate {
  enum class Kind { squeeze, displace, phase };
  Kind kind;
  cplx param;

  static SingleModeGate squeeze(double s) { return {Kind::squeeze, s}; }
  static SingleModeGate displace(cplx alpha) { return {Kind::displace, alpha}; }
  static SingleModeGate phase(double theta) { return {Kind::phase, theta}; }
};

/// Block of the gate's exact infinite matrix seen by `cols` input levels,
/// with `rows` output levels.
Matrix gate_matrix(const SingleModeGate& gate, int rows, int cols);

FockVector apply_single_mode(const SingleModeGate& gate, std::size_t mode, const FockVector& state,
                             const TruncationPolicy& policy = {});
DensityMatrix apply_single_mode(const SingleModeGate& gate, std::size_t mode,
                                const DensityMatrix& state, const TruncationPolicy& policy = {});

/// Applies an arbitrary operator (dim × dim) to one mode; no truncation bookkeeping.
Vector apply_mode_operator(const Matrix& op, std::size_t mode, const ModeLayout& layout,
                           const Vector& v);
Matrix conjugate_mode_operator(const Matrix& op, std::size_t mode, const ModeLayout& layout,
                               const Matrix& m);

/// Beam splitter U(θ) = exp[θ(a_b† a_a - a_a† a_b)], so a_a† → cosθ a_a† + sinθ a_b†
/// and a_b† → cosθ a_b† - sinθ a_a†. The default θ = π/4 is the balanced
/// splitter a → (a + b)/√2, b → (b - a)/√2. Transmissivity is cos²θ.
FockVector apply_beamsplitter(std::size_t mode_a, std::size_t mode_b, const FockVector& state,
                              const TruncationPolicy& policy = {}, double theta = std::numbers::pi / 4);
DensityMatrix apply_beamsplitter(std::size_t mode_a, std::size_t mode_b,
                                 const DensityMatrix& state, const TruncationPolicy& policy = {},
                                 double theta = std::numbers::pi / 4);

// ---------------------------------------------------------------- structure

FockVector tensor(const FockVector& x, const FockVector& y);
DensityMatrix tensor(const DensityMatrix& x, const DensityMatrix& y);

/// Reduced state on `keep` (listed modes keep their layout order).
DensityMatrix partial_trace(const DensityMatrix& state, const ModeSet& keep);
DensityMatrix partial_trace(const FockVector& state, const ModeSet& keep);

DensityMatrix partial_transpose(const DensityMatrix& state, const ModeSet& modes);

/// Amplitudes reshaped to a (keep × rest) matrix; rows follow the layout of `keep`.
Matrix bipartite_coefficients(const FockVector& state, const ModeSet& keep);

// ---------------------------------------------------------------- moments

/// One ladder operator of a word: a (dagger = false) or a† on `mode`.
struct Ladder {
  std::size_t mode;
  bool dagger;
};
/// Operator product written left to right, as on paper.
using Word = std::vector<Ladder>;

/// Appends a†^dag_power a^plain_power on `mode`.
void append_powers(Word& word, std::size_t mode, int dag_power, int plain_power);

/// Expectation of a ladder word. Ladder matrices act in a space padded by the
/// word length, so the only error is the truncation of the state itself.
cplx moment(const FockVector& state, const Word& word, const TruncationPolicy& policy = {});
cplx moment(const DensityMatrix& state, const Word& word, const TruncationPolicy& policy = {});

// ---------------------------------------------------------------- spectra

/// Real eigenvalues in descending order. Throws NumericError when the input
/// deviates from Hermiticity by more than `tolerance` (elementwise).
std::vector<double> eigs_hermitian(const Matrix& m, double tolerance = 1e-10);
std::vector<double> eigs_hermitian(const DensityMatrix& rho, double tolerance = 1e-10);

/// |<x|y>|^2 / (|x|^2 |y|^2).
double fidelity(const FockVector& x, const FockVector& y);
/// <x|rho|x> / (|x|^2 Tr rho).
double fidelity(const FockVector& x, const DensityMatrix& rho);

}  // namespace esv

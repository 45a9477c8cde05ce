#include "esv/fock.hpp"

#include "detail.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unsupported/Eigen/KroneckerProduct>

namespace esv {

void TruncationPolicy::check(double tail, std::string_view what) const {
  if (!(tail > threshold)) return;
  std::ostringstream msg;
  msg << what << ": truncation tail " << tail << " exceeds " << threshold;
  if (strict) throw TruncationError(msg.str());
  if (on_warning) on_warning(msg.str());
}

// ---------------------------------------------------------------- ModeLayout

ModeLayout::ModeLayout(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("ModeLayout: at least one mode required");
  strides_.assign(dims_.size(), 1);
  total_ = 1;
  for (std::size_t m = dims_.size(); m-- > 0;) {
    if (dims_[m] < 1) throw std::invalid_argument("ModeLayout: every cutoff must be >= 1");
    strides_[m] = total_;
    total_ *= dims_[m];
  }
}

Index ModeLayout::flat(std::span<const int> levels) const {
  if (levels.size() != dims_.size()) throw std::invalid_argument("ModeLayout::flat: wrong arity");
  Index idx = 0;
  for (std::size_t m = 0; m < dims_.size(); ++m) {
    if (levels[m] < 0 || levels[m] >= dims_[m])
      throw std::out_of_range("ModeLayout::flat: level outside cutoff");
    idx += levels[m] * strides_[m];
  }
  return idx;
}

ModeLayout ModeLayout::concat(const ModeLayout& other) const {
  std::vector<int> d = dims_;
  d.insert(d.end(), other.dims_.begin(), other.dims_.end());
  return ModeLayout(std::move(d));
}

ModeLayout ModeLayout::subset(const ModeSet& modes) const {
  std::vector<int> d;
  for (auto m : modes) d.push_back(dims_.at(m));
  return ModeLayout(std::move(d));
}

// ---------------------------------------------------------------- states

FockVector::FockVector(ModeLayout layout, Vector amps)
    : layout_(std::move(layout)), amps_(std::move(amps)) {
  if (amps_.size() != layout_.total())
    throw std::invalid_argument("FockVector: amplitude count does not match layout");
  if (!amps_.allFinite()) throw NumericError("FockVector: non-finite amplitude");
}

DensityMatrix::DensityMatrix(ModeLayout layout, Matrix mat)
    : layout_(std::move(layout)), mat_(std::move(mat)) {
  if (mat_.rows() != layout_.total() || mat_.cols() != layout_.total())
    throw std::invalid_argument("DensityMatrix: matrix size does not match layout");
  if (!mat_.allFinite()) throw NumericError("DensityMatrix: non-finite entry");
}

DensityMatrix::DensityMatrix(const FockVector& v)
    : DensityMatrix(v.layout(), v.amps() * v.amps().adjoint()) {}

double DensityMatrix::hermiticity_error() const {
  return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
}

FockVector vacuum(const ModeLayout& layout) {
  Vector v = Vector::Zero(layout.total());
  v(0) = 1.0;
  return FockVector(layout, std::move(v));
}

namespace {

int tail_start(int dim) {
  const int top = std::max(1, static_cast<int>(std::ceil(0.1 * dim)));
  return dim - top;
}

}  // namespace

double tail_mass(const FockVector& v, std::size_t mode) {
  const auto& L = v.layout();
  if (L.dim(mode) < 2) return 0.0;
  const int start = tail_start(L.dim(mode));
  double mass = 0.0;
  for (Index i = 0; i < L.total(); ++i)
    if (L.digit(i, mode) >= start) mass += std::norm(v.amps()(i));
  return mass;
}

double tail_mass(const DensityMatrix& rho, std::size_t mode) {
  const auto& L = rho.layout();
  if (L.dim(mode) < 2) return 0.0;
  const int start = tail_start(L.dim(mode));
  double mass = 0.0;
  for (Index i = 0; i < L.total(); ++i)
    if (L.digit(i, mode) >= start) mass += rho.mat()(i, i).real();
  return mass;
}

double tail_mass(const FockVector& v) {
  double t = 0.0;
  for (std::size_t m = 0; m < v.layout().modes(); ++m) t = std::max(t, tail_mass(v, m));
  return t;
}

double tail_mass(const DensityMatrix& rho) {
  double t = 0.0;
  for (std::size_t m = 0; m < rho.layout().modes(); ++m) t = std::max(t, tail_mass(rho, m));
  return t;
}

// ---------------------------------------------------------------- structure

FockVector tensor(const FockVector& x, const FockVector& y) {
  Vector v = Eigen::kroneckerProduct(x.amps(), y.amps()).eval();
  return FockVector(x.layout().concat(y.layout()), std::move(v));
}

DensityMatrix tensor(const DensityMatrix& x, const DensityMatrix& y) {
  Matrix m = Eigen::kroneckerProduct(x.mat(), y.mat()).eval();
  return DensityMatrix(x.layout().concat(y.layout()), std::move(m));
}

namespace detail {

ModeSet checked_modes(const ModeLayout& layout, const ModeSet& modes, const char* what) {
  ModeSet sorted = modes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument(std::string(what) + ": duplicate mode");
  for (auto m : sorted)
    if (m >= layout.modes()) throw std::out_of_range(std::string(what) + ": mode out of range");
  return sorted;
}

IndexSplit split_index(const ModeLayout& layout, const ModeSet& modes) {
  IndexSplit s;
  std::vector<bool> inside(layout.modes(), false);
  for (auto m : modes) inside[m] = true;
  ModeSet rest;
  for (std::size_t m = 0; m < layout.modes(); ++m)
    if (!inside[m]) rest.push_back(m);
  s.complement = rest;
  s.inside = modes.empty() ? ModeLayout{1} : layout.subset(modes);
  s.outside = rest.empty() ? ModeLayout{1} : layout.subset(rest);
  const Index n = layout.total();
  s.in.resize(n);
  s.out.resize(n);
  for (Index i = 0; i < n; ++i) {
    Index a = 0, b = 0;
    for (std::size_t k = 0; k < modes.size(); ++k) a += layout.digit(i, modes[k]) * s.inside.stride(k);
    for (std::size_t k = 0; k < rest.size(); ++k) b += layout.digit(i, rest[k]) * s.outside.stride(k);
    s.in[i] = a;
    s.out[i] = b;
  }
  return s;
}

Vector fix_global_phase(Vector amps) {
  if (amps.size() == 0) return amps;
  const double peak = amps.cwiseAbs().maxCoeff();
  if (peak == 0.0) return amps;
  for (Index i = 0; i < amps.size(); ++i) {
    if (std::abs(amps(i)) >= peak * (1.0 - 1e-12)) {
      const cplx phase = std::conj(amps(i)) / std::abs(amps(i));
      amps *= phase;
      amps(i) = std::abs(amps(i));
      break;
    }
  }
  return amps;
}

double hermitian_determinant(const Matrix& m) {
  const cplx det = Eigen::PartialPivLU<Matrix>(m).determinant();
  if (std::abs(det.imag()) > 1e-10 * (1.0 + std::abs(det)))
    throw NumericError("determinant has an imaginary residue of " + std::to_string(det.imag()));
  return det.real();
}

double trace_norm(const std::vector<double>& eigenvalues) {
  double s = 0.0;
  for (double l : eigenvalues)
    if (std::abs(l) >= kEigenFloor) s += std::abs(l);
  return s;
}

double entropy_bits(const std::vector<double>& eigenvalues) {
  double s = 0.0;
  for (double l : eigenvalues)
    if (l >= kEigenFloor) s -= l * std::log2(l);
  return s;
}

}  // namespace detail

Matrix bipartite_coefficients(const FockVector& state, const ModeSet& keep) {
  const auto& L = state.layout();
  const ModeSet k = detail::checked_modes(L, keep, "bipartite_coefficients");
  const auto split = detail::split_index(L, k);
  Matrix c = Matrix::Zero(split.inside.total(), split.outside.total());
  for (Index i = 0; i < L.total(); ++i) c(split.in[i], split.out[i]) = state.amps()(i);
  return c;
}

DensityMatrix partial_trace(const FockVector& state, const ModeSet& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  const ModeSet k = detail::checked_modes(state.layout(), keep, "partial_trace");
  const Matrix c = bipartite_coefficients(state, k);
  return DensityMatrix(state.layout().subset(k), c * c.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& state, const ModeSet& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  const auto& L = state.layout();
  const ModeSet k = detail::checked_modes(L, keep, "partial_trace");
  const auto split = detail::split_index(L, k);
  const Index nk = split.inside.total();
  const Index nr = split.outside.total();
  // full[a][r] = flat index of (kept a, traced r)
  std::vector<Index> full(static_cast<std::size_t>(nk * nr));
  for (Index i = 0; i < L.total(); ++i) full[split.in[i] * nr + split.out[i]] = i;
  Matrix out = Matrix::Zero(nk, nk);
  for (Index b = 0; b < nk; ++b)
    for (Index a = 0; a < nk; ++a) {
      cplx acc = 0.0;
      for (Index r = 0; r < nr; ++r) acc += state.mat()(full[a * nr + r], full[b * nr + r]);
      out(a, b) = acc;
    }
  return DensityMatrix(split.inside, std::move(out));
}

DensityMatrix partial_transpose(const DensityMatrix& state, const ModeSet& modes) {
  const auto& L = state.layout();
  const ModeSet t = detail::checked_modes(L, modes, "partial_transpose");
  const Index n = L.total();
  // flat = part(transposed modes) + part(other modes), both additive in digits
  std::vector<Index> tpart(n), rpart(n);
  std::vector<bool> is_t(L.modes(), false);
  for (auto m : t) is_t[m] = true;
  for (Index i = 0; i < n; ++i) {
    Index a = 0;
    for (std::size_t m = 0; m < L.modes(); ++m)
      if (is_t[m]) a += L.digit(i, m) * L.stride(m);
    tpart[i] = a;
    rpart[i] = i - a;
  }
  Matrix out(n, n);
  const Matrix& in = state.mat();
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) out(i, j) = in(tpart[j] + rpart[i], tpart[i] + rpart[j]);
  return DensityMatrix(L, std::move(out));
}

// ---------------------------------------------------------------- spectra

std::vector<double> eigs_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigs_hermitian: matrix is not square");
  const double dev = m.size() ? (m - m.adjoint()).cwiseAbs().maxCoeff() : 0.0;
  if (dev > tolerance)
    throw NumericError("eigs_hermitian: input deviates from Hermiticity by " + std::to_string(dev));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("eigs_hermitian: solver failed");
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<double> eigs_hermitian(const DensityMatrix& rho, double tolerance) {
  return eigs_hermitian(rho.mat(), tolerance);
}

double fidelity(const FockVector& x, const FockVector& y) {
  if (!(x.layout() == y.layout())) throw std::invalid_argument("fidelity: layout mismatch");
  const double nx = x.amps().squaredNorm();
  const double ny = y.amps().squaredNorm();
  if (nx == 0.0 || ny == 0.0) throw NumericError("fidelity: null vector");
  return std::norm(x.amps().dot(y.amps())) / (nx * ny);
}

double fidelity(const FockVector& x, const DensityMatrix& rho) {
  if (!(x.layout() == rho.layout())) throw std::invalid_argument("fidelity: layout mismatch");
  const double nx = x.amps().squaredNorm();
  const double tr = rho.trace().real();
  if (nx == 0.0 || tr <= 0.0) throw NumericError("fidelity: null state");
  return x.amps().dot(rho.mat() * x.amps()).real() / (nx * tr);
}

}  // namespace esv

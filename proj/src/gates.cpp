#include "esv/fock.hpp"

#include "detail.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace esv {

namespace {

// D(α) matrix elements <m|D|n> by the exact three-term recurrence.
Matrix displacement_block(cplx alpha, int rows, int cols) {
  Matrix d = Matrix::Zero(rows, cols);
  if (rows == 0 || cols == 0) return d;
  d(0, 0) = std::exp(-0.5 * std::norm(alpha));
  for (int m = 1; m < rows; ++m) d(m, 0) = alpha / std::sqrt(double(m)) * d(m - 1, 0);
  for (int n = 1; n < cols; ++n) {
    const double rn = std::sqrt(double(n));
    d(0, n) = -std::conj(alpha) / rn * d(0, n - 1);
    for (int m = 1; m < rows; ++m)
      d(m, n) = -std::conj(alpha) / rn * d(m, n - 1) + std::sqrt(double(m) / n) * d(m - 1, n - 1);
  }
  return d;
}

// exp[(s/2)(a^2 - a†^2)] restricted to the requested block. The generator is
// exponentiated in a padded space that is enlarged until the block is stable.
Matrix squeeze_block(double s, int rows, int cols) {
  if (s == 0.0) return Matrix::Identity(rows, cols);
  const int need = std::max(rows, cols);
  Eigen::MatrixXd prev;
  for (int pad = 2 * need + 60; pad <= 1200; pad *= 2) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(pad, pad);
    for (int n = 0; n + 2 < pad; ++n) {
      const double e = 0.5 * s * std::sqrt(double(n + 1) * (n + 2));
      g(n, n + 2) = e;   // a^2 term
      g(n + 2, n) = -e;  // -a†^2 term
    }
    Eigen::MatrixXd u = g.exp();
    Eigen::MatrixXd block = u.topLeftCorner(rows, cols);
    if (prev.size() && (block - prev).cwiseAbs().maxCoeff() < 1e-13) return block.cast<cplx>();
    prev = std::move(block);
  }
  throw NumericError("squeeze gate: padded exponential did not converge");
}

}  // namespace

Matrix gate_matrix(const SingleModeGate& gate, int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("gate_matrix: negative size");
  if (!std::isfinite(gate.param.real()) || !std::isfinite(gate.param.imag()))
    throw std::invalid_argument("gate_matrix: non-finite gate parameter");
  switch (gate.kind) {
    case SingleModeGate::Kind::phase: {
      Matrix m = Matrix::Zero(rows, cols);
      for (int n = 0; n < std::min(rows, cols); ++n) m(n, n) = std::polar(1.0, gate.param.real() * n);
      return m;
    }
    case SingleModeGate::Kind::displace:
      return displacement_block(gate.param, rows, cols);
    case SingleModeGate::Kind::squeeze:
      return squeeze_block(gate.param.real(), rows, cols);
  }
  throw std::invalid_argument("gate_matrix: unknown gate");
}

// ---------------------------------------------------------------- mode operators

namespace {

// out = O_mode * x, for every column of x (rows follow `layout`).
Matrix apply_mode_columns(const Matrix& op, std::size_t mode, const ModeLayout& layout,
                          const Matrix& x) {
  const Index d = layout.dim(mode);
  if (op.rows() != d || op.cols() != d)
    throw std::invalid_argument("apply_mode_operator: operator size does not match the mode");
  const Index stride = layout.stride(mode);
  const Index outer = layout.total() / (d * stride);
  Matrix out(x.rows(), x.cols());
  const Matrix opT = op.transpose();
  for (Index c = 0; c < x.cols(); ++c)
    for (Index o = 0; o < outer; ++o) {
      const Index base = o * d * stride;
      Eigen::Map<const Matrix> in(x.col(c).data() + base, stride, d);
      Eigen::Map<Matrix> res(out.col(c).data() + base, stride, d);
      res.noalias() = in * opT;
    }
  return out;
}

}  // namespace

Vector apply_mode_operator(const Matrix& op, std::size_t mode, const ModeLayout& layout,
                           const Vector& v) {
  if (mode >= layout.modes()) throw std::out_of_range("apply_mode_operator: mode out of range");
  Matrix x = v;
  return apply_mode_columns(op, mode, layout, x).col(0);
}

Matrix conjugate_mode_operator(const Matrix& op, std::size_t mode, const ModeLayout& layout,
                               const Matrix& m) {
  if (mode >= layout.modes()) throw std::out_of_range("conjugate_mode_operator: mode out of range");
  const Matrix left = apply_mode_columns(op, mode, layout, m);
  return apply_mode_columns(op, mode, layout, left.adjoint()).adjoint();
}

FockVector apply_single_mode(const SingleModeGate& gate, std::size_t mode, const FockVector& state,
                             const TruncationPolicy& policy) {
  const auto& L = state.layout();
  if (mode >= L.modes()) throw std::out_of_range("apply_single_mode: mode out of range");
  const Matrix op = gate_matrix(gate, L.dim(mode), L.dim(mode));
  FockVector out(L, apply_mode_operator(op, mode, L, state.amps()));
  if (gate.kind != SingleModeGate::Kind::phase) {
    const double deficit = state.amps().squaredNorm() - out.amps().squaredNorm();
    policy.check(std::max(deficit, tail_mass(out, mode)), "apply_single_mode");
  }
  return out;
}

DensityMatrix apply_single_mode(const SingleModeGate& gate, std::size_t mode,
                                const DensityMatrix& state, const TruncationPolicy& policy) {
  const auto& L = state.layout();
  if (mode >= L.modes()) throw std::out_of_range("apply_single_mode: mode out of range");
  const Matrix op = gate_matrix(gate, L.dim(mode), L.dim(mode));
  DensityMatrix out(L, conjugate_mode_operator(op, mode, L, state.mat()));
  if (gate.kind != SingleModeGate::Kind::phase) {
    const double deficit = state.trace().real() - out.trace().real();
    policy.check(std::max(deficit, tail_mass(out, mode)), "apply_single_mode");
  }
  return out;
}

// ---------------------------------------------------------------- beam splitter

namespace {

// Exact unitary of θ(b†a - a†b) on the block of total photon number n,
// basis |k, n-k>, k = 0..n.
Eigen::MatrixXd bs_block(int n, double theta) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int k = 1; k <= n; ++k) {
    // b†a |k, n-k> = sqrt(k (n-k+1)) |k-1, n-k+1>
    const double e = std::sqrt(double(k) * (n - k + 1));
    g(k - 1, k) += theta * e;
    g(k, k - 1) -= theta * e;
  }
  return g.exp();
}

Matrix apply_bs_columns(std::size_t a, std::size_t b, const ModeLayout& L, const Matrix& x,
                        double theta) {
  if (a == b || a >= L.modes() || b >= L.modes())
    throw std::invalid_argument("apply_beamsplitter: modes must be distinct and in range");
  const int da = L.dim(a), db = L.dim(b);
  const Index sa = L.stride(a), sb = L.stride(b);
  std::vector<Eigen::MatrixXd> blocks;
  for (int n = 0; n <= da + db - 2; ++n) blocks.push_back(bs_block(n, theta));

  std::vector<Index> bases;
  for (Index i = 0; i < L.total(); ++i)
    if (L.digit(i, a) == 0 && L.digit(i, b) == 0) bases.push_back(i);

  Matrix out = Matrix::Zero(x.rows(), x.cols());
  for (Index c = 0; c < x.cols(); ++c)
    for (Index base : bases)
      for (int n = 0; n <= da + db - 2; ++n) {
        const int klo = std::max(0, n - (db - 1));
        const int khi = std::min(n, da - 1);
        const auto& u = blocks[n];
        for (int kout = klo; kout <= khi; ++kout) {
          cplx acc = 0.0;
          for (int kin = klo; kin <= khi; ++kin)
            acc += u(kout, kin) * x(base + kin * sa + (n - kin) * sb, c);
          out(base + kout * sa + (n - kout) * sb, c) = acc;
        }
      }
  return out;
}

}  // namespace

FockVector apply_beamsplitter(std::size_t mode_a, std::size_t mode_b, const FockVector& state,
                              const TruncationPolicy& policy, double theta) {
  const auto& L = state.layout();
  Matrix x = state.amps();
  FockVector out(L, apply_bs_columns(mode_a, mode_b, L, x, theta).col(0));
  const double deficit = state.amps().squaredNorm() - out.amps().squaredNorm();
  policy.check(std::max({deficit, tail_mass(out, mode_a), tail_mass(out, mode_b)}),
               "apply_beamsplitter");
  return out;
}

DensityMatrix apply_beamsplitter(std::size_t mode_a, std::size_t mode_b,
                                 const DensityMatrix& state, const TruncationPolicy& policy,
                                 double theta) {
  const auto& L = state.layout();
  const Matrix left = apply_bs_columns(mode_a, mode_b, L, state.mat(), theta);
  DensityMatrix out(L, apply_bs_columns(mode_a, mode_b, L, left.adjoint(), theta).adjoint());
  const double deficit = state.trace().real() - out.trace().real();
  policy.check(std::max({deficit, tail_mass(out, mode_a), tail_mass(out, mode_b)}),
               "apply_beamsplitter");
  return out;
}

}  // namespace esv

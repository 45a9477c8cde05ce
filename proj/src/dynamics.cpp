#include "esv/dynamics.hpp"

#include "esv/measures.hpp"

#include <array>
#include <cmath>

namespace esv {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_pair(const ModeLayout& L, std::size_t q, std::size_t f) {
  if (q >= L.modes() || f >= L.modes() || q == f)
    throw std::invalid_argument("jc_evolve_pair: modes must be distinct and in range");
  if (L.dim(q) != 2) throw std::invalid_argument("jc_evolve_pair: qubit mode must have dimension 2");
}

// out = U x on every column.
Matrix jc_columns(const ModeLayout& L, std::size_t q, std::size_t f, double tau, const Matrix& x) {
  const int n_top = L.dim(f);
  const Index sq = L.stride(q), sf = L.stride(f);
  std::vector<Index> bases;
  for (Index i = 0; i < L.total(); ++i)
    if (L.digit(i, q) == 0 && L.digit(i, f) == 0) bases.push_back(i);
  std::vector<double> c(n_top + 1), s(n_top + 1);
  for (int n = 0; n <= n_top; ++n) {
    c[n] = std::cos(tau * std::sqrt(double(n)));
    s[n] = std::sin(tau * std::sqrt(double(n)));
  }
  Matrix out(x.rows(), x.cols());
  for (Index col = 0; col < x.cols(); ++col)
    for (Index base : bases) {
      out(base, col) = x(base, col);  // |g,0>
      for (int n = 1; n < n_top; ++n) {
        const Index g = base + n * sf;
        const Index e = base + sq + (n - 1) * sf;
        const cplx xg = x(g, col), xe = x(e, col);
        out(g, col) = c[n] * xg - kI * s[n] * xe;
        out(e, col) = c[n] * xe - kI * s[n] * xg;
      }
      // |e, top> couples to |g, top+1>, which is not represented
      const Index e_top = base + sq + (n_top - 1) * sf;
      out(e_top, col) = c[n_top] * x(e_top, col);
    }
  return out;
}

}  // namespace

FockVector jc_evolve_pair(const FockVector& state, std::size_t qubit_mode, std::size_t field_mode,
                          double tau, const TruncationPolicy& policy) {
  const auto& L = state.layout();
  check_pair(L, qubit_mode, field_mode);
  Matrix x = state.amps();
  FockVector out(L, jc_columns(L, qubit_mode, field_mode, tau, x).col(0));
  policy.check(state.amps().squaredNorm() - out.amps().squaredNorm(), "jc_evolve_pair");
  return out;
}

DensityMatrix jc_evolve_pair(const DensityMatrix& state, std::size_t qubit_mode,
                             std::size_t field_mode, double tau, const TruncationPolicy& policy) {
  const auto& L = state.layout();
  check_pair(L, qubit_mode, field_mode);
  const Matrix left = jc_columns(L, qubit_mode, field_mode, tau, state.mat());
  DensityMatrix out(L, jc_columns(L, qubit_mode, field_mode, tau, left.adjoint()).adjoint());
  policy.check(state.trace().real() - out.trace().real(), "jc_evolve_pair");
  return out;
}

DensityMatrix two_qubit_state(const FockVector& modes, double tau, const TruncationPolicy& policy) {
  if (modes.layout().modes() != 2) throw std::invalid_argument("two_qubit_state: two-mode input required");
  // layout [q1, q2, a, b]
  FockVector joint = tensor(vacuum(ModeLayout{2, 2}), modes);
  joint = jc_evolve_pair(joint, 0, 2, tau, policy);
  joint = jc_evolve_pair(joint, 1, 3, tau, policy);
  return partial_trace(joint, {0, 1});
}

DensityMatrix two_qubit_state(const DensityMatrix& modes, double tau, const TruncationPolicy&) {
  const auto& L = modes.layout();
  if (L.modes() != 2) throw std::invalid_argument("two_qubit_state: two-mode input required");
  // A ground-state qubit never excites the field beyond its initial levels, so
  // the map is exact: ρ_q[q,q'] = Tr[K_q ρ K_q'†] with field Kraus operators
  // K_g|n> = cos(τ√n)|n>, K_e|n> = -i sin(τ√n)|n-1>.
  auto kraus = [tau](int dim) {
    std::array<Matrix, 2> k{Matrix::Zero(dim, dim), Matrix::Zero(dim, dim)};
    for (int n = 0; n < dim; ++n) {
      k[0](n, n) = std::cos(tau * std::sqrt(double(n)));
      if (n > 0) k[1](n - 1, n) = -kI * std::sin(tau * std::sqrt(double(n)));
    }
    return k;
  };
  const auto ka = kraus(L.dim(0));
  const auto kb = kraus(L.dim(1));
  const Index da = L.dim(0), db = L.dim(1);
  Matrix rq(4, 4);
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2)
      for (int p1 = 0; p1 < 2; ++p1)
        for (int p2 = 0; p2 < 2; ++p2) {
          // Tr[(A ⊗ B) ρ] with A = K_p1† K_q1, B = K_p2† K_q2
          const Matrix A = ka[p1].adjoint() * ka[q1];
          const Matrix B = kb[p2].adjoint() * kb[q2];
          cplx acc = 0.0;
          for (Index i = 0; i < da; ++i)
            for (Index j = 0; j < da; ++j) {
              if (A(i, j) == 0.0) continue;
              for (Index k = 0; k < db; ++k)
                for (Index l = 0; l < db; ++l)
                  if (B(k, l) != 0.0) acc += A(i, j) * B(k, l) * modes.mat()(j * db + l, i * db + k);
            }
          rq(q1 * 2 + q2, p1 * 2 + p2) = acc;
        }
  return DensityMatrix(ModeLayout{2, 2}, rq);
}

double entangling_power(const FockVector& modes, double tau, const TruncationPolicy& policy) {
  return two_qubit_negativity(two_qubit_state(modes, tau, policy));
}

double entangling_power(const DensityMatrix& modes, double tau, const TruncationPolicy& policy) {
  return two_qubit_negativity(two_qubit_state(modes, tau, policy));
}

}  // namespace esv

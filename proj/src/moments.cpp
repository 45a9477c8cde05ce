#include "esv/fock.hpp"

#include <cmath>

namespace esv {

void append_powers(Word& word, std::size_t mode, int dag_power, int plain_power) {
  if (dag_power < 0 || plain_power < 0) throw std::invalid_argument("append_powers: negative power");
  for (int k = 0; k < dag_power; ++k) word.push_back({mode, true});
  for (int k = 0; k < plain_power; ++k) word.push_back({mode, false});
}

namespace {

// Layout with every mode enlarged by the number of raising operators acting on it.
ModeLayout padded_layout(const ModeLayout& L, const Word& word) {
  std::vector<int> dims = L.dims();
  for (const auto& op : word) {
    if (op.mode >= L.modes()) throw std::out_of_range("moment: word acts on a missing mode");
    if (op.dagger) ++dims[op.mode];
  }
  return ModeLayout(std::move(dims));
}

// Flat index map from the original layout into the padded one.
std::vector<Index> embed_map(const ModeLayout& from, const ModeLayout& to) {
  std::vector<Index> map(from.total());
  for (Index i = 0; i < from.total(); ++i) {
    Index j = 0;
    for (std::size_t m = 0; m < from.modes(); ++m) j += from.digit(i, m) * to.stride(m);
    map[i] = j;
  }
  return map;
}

// Applies one ladder operator to every column of x in place (rows follow L).
void apply_ladder(const Ladder& op, const ModeLayout& L, Matrix& x) {
  const Index d = L.dim(op.mode);
  const Index stride = L.stride(op.mode);
  const Index outer = L.total() / (d * stride);
  for (Index c = 0; c < x.cols(); ++c) {
    cplx* col = x.col(c).data();
    for (Index o = 0; o < outer; ++o) {
      cplx* blk = col + o * d * stride;
      if (op.dagger) {
        // a†|k> = sqrt(k+1)|k+1>; the top level receives nothing representable
        for (Index k = d - 1; k >= 1; --k) {
          const double f = std::sqrt(double(k));
          for (Index r = 0; r < stride; ++r) blk[k * stride + r] = f * blk[(k - 1) * stride + r];
        }
        for (Index r = 0; r < stride; ++r) blk[r] = 0.0;
      } else {
        for (Index k = 0; k + 1 < d; ++k) {
          const double f = std::sqrt(double(k + 1));
          for (Index r = 0; r < stride; ++r) blk[k * stride + r] = f * blk[(k + 1) * stride + r];
        }
        for (Index r = 0; r < stride; ++r) blk[(d - 1) * stride + r] = 0.0;
      }
    }
  }
}

void apply_word(const Word& word, const ModeLayout& L, Matrix& x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) apply_ladder(*it, L, x);
}

}  // namespace

cplx moment(const FockVector& state, const Word& word, const TruncationPolicy& policy) {
  policy.check(tail_mass(state), "moment");
  const ModeLayout P = padded_layout(state.layout(), word);
  const auto map = embed_map(state.layout(), P);
  Matrix x = Matrix::Zero(P.total(), 1);
  for (Index i = 0; i < state.layout().total(); ++i) x(map[i], 0) = state.amps()(i);
  const Vector bra = x.col(0);
  apply_word(word, P, x);
  return bra.dot(x.col(0));
}

cplx moment(const DensityMatrix& state, const Word& word, const TruncationPolicy& policy) {
  policy.check(tail_mass(state), "moment");
  const ModeLayout& L = state.layout();
  const ModeLayout P = padded_layout(L, word);
  const auto map = embed_map(L, P);
  // Tr[ρ W] = Σ_j <j| W ρ |j>: apply W to the padded columns of ρ.
  Matrix x = Matrix::Zero(P.total(), L.total());
  for (Index j = 0; j < L.total(); ++j)
    for (Index i = 0; i < L.total(); ++i) x(map[i], j) = state.mat()(i, j);
  apply_word(word, P, x);
  cplx tr = 0.0;
  for (Index j = 0; j < L.total(); ++j) tr += x(map[j], j);
  return tr;
}

}  // namespace esv

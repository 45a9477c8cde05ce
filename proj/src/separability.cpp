#include "esv/separability.hpp"

#include "detail.hpp"

#include <algorithm>
#include <array>
#include <string_view>

namespace esv {

int MomentIndex::operator[](int k) const {
  switch (k) {
    case 1: return i1;
    case 2: return i2;
    case 3: return i3;
    case 4: return i4;
  }
  throw std::out_of_range("MomentIndex: component must be 1..4");
}

std::strong_ordering multiindex_compare(const MomentIndex& i, const MomentIndex& j) {
  if (auto c = i.weight() <=> j.weight(); c != 0) return c;
  for (int k = 4; k >= 1; --k)
    if (auto c = i[k] <=> j[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::vector<MomentIndex> multiindices(int max_weight) {
  std::vector<MomentIndex> out;
  for (int a = 0; a <= max_weight; ++a)
    for (int b = 0; a + b <= max_weight; ++b)
      for (int c = 0; a + b + c <= max_weight; ++c)
        for (int d = 0; a + b + c + d <= max_weight; ++d) out.push_back({a, b, c, d});
  std::sort(out.begin(), out.end(),
            [](const MomentIndex& x, const MomentIndex& y) { return multiindex_compare(x, y) < 0; });
  return out;
}

MinorSelector::MinorSelector(std::vector<int> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("MinorSelector: empty selection");
  if (rows_.front() < 1) throw std::invalid_argument("MinorSelector: rows are 1-based");
  for (std::size_t k = 1; k < rows_.size(); ++k)
    if (rows_[k] <= rows_[k - 1]) throw std::invalid_argument("MinorSelector: rows must strictly increase");
}

MomentIndex moment_row(int r) {
  static const std::vector<MomentIndex> table = multiindices(kMaxMomentWeight);
  if (r < 1 || r > static_cast<int>(table.size()))
    throw std::invalid_argument("moment_row: row beyond the implemented weight bound");
  return table[r - 1];
}

namespace {

void check_weights(const MomentIndex& i, const MomentIndex& j) {
  for (const auto* m : {&i, &j}) {
    if (m->i1 < 0 || m->i2 < 0 || m->i3 < 0 || m->i4 < 0)
      throw std::invalid_argument("moment index components must be non-negative");
    if (m->weight() > kMaxMomentWeight)
      throw std::invalid_argument("moment index weight exceeds the implemented bound");
  }
}

void check_two_mode(const ModeLayout& L) {
  if (L.modes() != 2) throw std::invalid_argument("moment matrix: state must have two modes");
}

Word swapped_word(const MomentIndex& i, const MomentIndex& j) {
  Word w;
  append_powers(w, 0, i.i1, i.i2);
  append_powers(w, 1, j.i3, j.i4);
  append_powers(w, 0, j.i2, j.i1);
  append_powers(w, 1, i.i4, i.i3);
  return w;
}

template <class State>
Matrix minor_of(const State& state, const MinorSelector& selector, const TruncationPolicy& policy) {
  std::vector<MomentIndex> idx;
  for (int r : selector.rows()) idx.push_back(moment_row(r));
  const Index n = static_cast<Index>(idx.size());
  Matrix m(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) m(r, c) = moment_matrix_entry(state, idx[r], idx[c], policy);
  return m;
}

Word parse_word(std::string_view letters) {
  Word w;
  for (char ch : letters) {
    switch (ch) {
      case 'a': w.push_back({0, false}); break;
      case 'A': w.push_back({0, true}); break;
      case 'b': w.push_back({1, false}); break;
      case 'B': w.push_back({1, true}); break;
      default: throw std::logic_error("parse_word: bad letter");
    }
  }
  return w;
}

// a = a, A = a†, b = b, B = b†; "" is the identity.
constexpr std::array<std::array<std::string_view, 5>, 5> kCriterionTable{{
    {"", "Ab", "AB", "ab", "aB"},
    {"aB", "aAbB", "aABB", "aabB", "aaBB"},
    {"ab", "aAbb", "aABb", "aabb", "aaBb"},
    {"AB", "AAbB", "AABB", "AabB", "AaBB"},
    {"Ab", "AAbb", "AABb", "Aabb", "AaBb"},
}};

template <class State>
Matrix criterion_matrix(const State& state, const TruncationPolicy& policy) {
  check_two_mode(state.layout());
  Matrix m(5, 5);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) m(r, c) = moment(state, parse_word(kCriterionTable[r][c]), policy);
  return m;
}

}  // namespace

cplx moment_matrix_entry(const DensityMatrix& state, const MomentIndex& i, const MomentIndex& j,
                         const TruncationPolicy& policy) {
  check_two_mode(state.layout());
  check_weights(i, j);
  return moment(state, swapped_word(i, j), policy);
}

cplx moment_matrix_entry(const FockVector& state, const MomentIndex& i, const MomentIndex& j,
                         const TruncationPolicy& policy) {
  check_two_mode(state.layout());
  check_weights(i, j);
  return moment(state, swapped_word(i, j), policy);
}

cplx moment_matrix_entry_explicit(const DensityMatrix& state, const MomentIndex& i,
                                  const MomentIndex& j, const TruncationPolicy& policy) {
  check_two_mode(state.layout());
  check_weights(i, j);
  Word w;
  append_powers(w, 0, i.i1, i.i2);
  append_powers(w, 1, i.i3, i.i4);
  append_powers(w, 0, j.i2, j.i1);
  append_powers(w, 1, j.i4, j.i3);
  return moment(partial_transpose(state, {1}), w, policy);
}

Matrix moment_minor(const DensityMatrix& state, const MinorSelector& selector,
                    const TruncationPolicy& policy) {
  return minor_of(state, selector, policy);
}

Matrix moment_minor(const FockVector& state, const MinorSelector& selector,
                    const TruncationPolicy& policy) {
  return minor_of(state, selector, policy);
}

double minor_determinant(const DensityMatrix& state, const MinorSelector& selector,
                         const TruncationPolicy& policy) {
  return detail::hermitian_determinant(moment_minor(state, selector, policy));
}

double minor_determinant(const FockVector& state, const MinorSelector& selector,
                         const TruncationPolicy& policy) {
  return detail::hermitian_determinant(moment_minor(state, selector, policy));
}

double simon_det(const DensityMatrix& state, const TruncationPolicy& policy) {
  return minor_determinant(state, MinorSelector({1, 2, 3, 4, 5}), policy);
}
double simon_det(const FockVector& state, const TruncationPolicy& policy) {
  return minor_determinant(state, MinorSelector({1, 2, 3, 4, 5}), policy);
}
double duan_det(const DensityMatrix& state, const TruncationPolicy& policy) {
  return minor_determinant(state, MinorSelector({1, 2, 4}), policy);
}
double duan_det(const FockVector& state, const TruncationPolicy& policy) {
  return minor_determinant(state, MinorSelector({1, 2, 4}), policy);
}

Matrix esv_criterion_matrix(const DensityMatrix& state, const TruncationPolicy& policy) {
  return criterion_matrix(state, policy);
}
Matrix esv_criterion_matrix(const FockVector& state, const TruncationPolicy& policy) {
  return criterion_matrix(state, policy);
}
double esv_criterion_det(const DensityMatrix& state, const TruncationPolicy& policy) {
  return detail::hermitian_determinant(esv_criterion_matrix(state, policy));
}
double esv_criterion_det(const FockVector& state, const TruncationPolicy& policy) {
  return detail::hermitian_determinant(esv_criterion_matrix(state, policy));
}

}  // namespace esv

#include "property_checks.hpp"

#include "esv/channels.hpp"
#include "esv/fock.hpp"
#include "esv/separability.hpp"
#include "esv/states.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <sstream>

namespace props {

using namespace esv;

namespace {

std::string fmt(const char* label, double v) {
  std::ostringstream os;
  os << label << "=" << v;
  return os.str();
}

DensityMatrix thermal_state(double nbar, int cutoff) {
  Matrix m = Matrix::Zero(cutoff, cutoff);
  for (int n = 0; n < cutoff; ++n) m(n, n) = std::pow(nbar / (1 + nbar), n) / (1 + nbar);
  return DensityMatrix(ModeLayout{cutoff}, m);
}

// Bitmask-enumerated principal minors of m; returns the most negative determinant.
double worst_minor(const Matrix& m, int max_size) {
  const int n = static_cast<int>(m.rows());
  double worst = 1.0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> rows;
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) rows.push_back(k);
    if (static_cast<int>(rows.size()) > max_size) continue;
    Matrix sub(rows.size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows.size(); ++c) sub(r, c) = m(rows[r], rows[c]);
    worst = std::min(worst, Eigen::PartialPivLU<Matrix>(sub).determinant().real());
  }
  return worst;
}

template <class State>
Matrix full_moment_matrix(const State& s, int rows) {
  const std::vector<int> all_rows = [&] {
    std::vector<int> r(rows);
    for (int k = 0; k < rows; ++k) r[k] = k + 1;
    return r;
  }();
  return moment_minor(s, MinorSelector(all_rows));
}

}  // namespace

Outcome pt_involution() {
  std::mt19937 rng(101);
  bool ok = true;
  for (const auto& dims : {std::vector<int>{4, 3}, std::vector<int>{3, 2, 3}, std::vector<int>{2, 2, 2, 2}}) {
    const ModeLayout L(dims);
    const DensityMatrix rho(L, oracle::random_density(L.total(), 3, rng));
    for (const ModeSet& modes : {ModeSet{0}, ModeSet{1}, ModeSet{0, 1}, ModeSet{}}) {
      const auto twice = partial_transpose(partial_transpose(rho, modes), modes);
      ok = ok && twice.mat() == rho.mat();
    }
  }
  return {"pt_involution", ok, ok ? "exact" : "mismatch"};
}

Outcome pt_hermiticity() {
  std::mt19937 rng(102);
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const DensityMatrix rho(ModeLayout{5, 4}, oracle::random_density(20, 4, rng));
    worst = std::max(worst, partial_transpose(rho, {1}).hermiticity_error());
    worst = std::max(worst, partial_transpose(rho, {0}).hermiticity_error());
  }
  return {"pt_hermiticity", worst <= 1e-15, fmt("max_dev", worst)};
}

Outcome channel_trace_preservation() {
  std::mt19937 rng(103);
  double trace_dev = 0.0, min_eig = 1.0;
  const int n = 30;
  for (int k = 0; k < 3; ++k) {
    // inputs concentrated on low levels so the channels stay inside the cutoff
    Matrix low = Matrix::Zero(n, n);
    low.topLeftCorner(6, 6) = oracle::random_density(6, 3, rng);
    const DensityMatrix rho(ModeLayout{n}, low);
    const std::vector<DensityMatrix> outs = {
        thermal_channel(rho, {.kind = NoiseKind::thermal, .sigma_tn = 0.4}),
        phase_channel(rho, {.kind = NoiseKind::phase, .sigma_pn = 0.8}),
        bs_loss(rho, 0.6),
    };
    for (const auto& o : outs) {
      trace_dev = std::max(trace_dev, std::abs(o.trace().real() - 1.0));
      min_eig = std::min(min_eig, oracle::min_eig(o.mat()));
    }
  }
  const bool ok = trace_dev <= 1e-6 && min_eig >= -1e-8;
  return {"channel_trace_preservation", ok, fmt("trace_dev", trace_dev) + " " + fmt("min_eig", min_eig)};
}

Outcome partial_trace_preservation() {
  std::mt19937 rng(104);
  double worst_trace = 0.0, worst_herm = 0.0, min_eig = 1.0;
  for (int k = 0; k < 5; ++k) {
    const ModeLayout L{3, 4, 3};
    const DensityMatrix rho(L, oracle::random_density(L.total(), 4, rng));
    for (const ModeSet& keep : {ModeSet{0}, ModeSet{1}, ModeSet{2}, ModeSet{0, 2}, ModeSet{1, 2}}) {
      const auto r = partial_trace(rho, keep);
      worst_trace = std::max(worst_trace, std::abs(r.trace().real() - 1.0));
      worst_herm = std::max(worst_herm, r.hermiticity_error());
      min_eig = std::min(min_eig, oracle::min_eig(r.mat()));
    }
  }
  const bool ok = worst_trace <= 1e-12 && worst_herm <= 1e-14 && min_eig >= -1e-9;
  return {"partial_trace_preservation", ok,
          fmt("trace_dev", worst_trace) + " " + fmt("herm_dev", worst_herm) + " " + fmt("min_eig", min_eig)};
}

Outcome beamsplitter_number_conservation() {
  std::mt19937 rng(105);
  const ModeLayout L{8, 8};
  Vector amps = oracle::random_vector(L.total(), rng);
  for (Index i = 0; i < L.total(); ++i)
    if (L.digit(i, 0) + L.digit(i, 1) > 7) amps(i) = 0.0;
  const FockVector v(L, amps / amps.norm());
  double worst = 0.0;
  for (double theta : {std::numbers::pi / 4, 0.3, 1.1}) {
    const auto out = apply_beamsplitter(0, 1, v, {}, theta);
    std::vector<double> before(15, 0.0), after(15, 0.0);
    for (Index i = 0; i < L.total(); ++i) {
      const int n = L.digit(i, 0) + L.digit(i, 1);
      before[n] += std::norm(v.amps()(i));
      after[n] += std::norm(out.amps()(i));
    }
    for (int n = 0; n < 15; ++n) worst = std::max(worst, std::abs(before[n] - after[n]));
  }
  return {"beamsplitter_number_conservation", worst <= 1e-10, fmt("max_dev", worst)};
}

Outcome multiindex_total_order() {
  std::vector<MomentIndex> all;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int c = 0; a + b + c <= 3; ++c)
        for (int d = 0; a + b + c + d <= 3; ++d) all.push_back({a, b, c, d});
  bool ok = true;
  for (const auto& x : all)
    for (const auto& y : all) {
      const auto xy = multiindex_compare(x, y), yx = multiindex_compare(y, x);
      // antisymmetry and trichotomy
      ok = ok && ((xy < 0) == (yx > 0)) && ((xy == 0) == (x == y));
      for (const auto& z : all)
        if (xy < 0 && multiindex_compare(y, z) < 0) ok = ok && multiindex_compare(x, z) < 0;
    }
  return {"multiindex_total_order", ok, std::to_string(all.size()) + " indices"};
}

Outcome separable_minor_nonnegativity() {
  double worst = 1.0;
  const int n = 24;
  const FockVector sq_p = squeezed_vacuum({.s = 0.5, .cutoff = n});
  const FockVector sq_m = squeezed_vacuum({.s = -0.3, .cutoff = n});
  const FockVector coh = displaced_squeezed({0.5, 0.2}, 0.0, n);
  const FockVector dsq = displaced_squeezed({-0.3, 0.4}, 0.25, n);
  for (const auto& [x, y] : {std::pair{sq_p, sq_m}, std::pair{coh, sq_p}, std::pair{dsq, coh}}) {
    const FockVector prod = tensor(x, y);
    worst = std::min(worst, worst_minor(full_moment_matrix(prod, 15), 5));
    worst = std::min(worst, esv_criterion_det(prod));
  }
  const int m = 18;
  const DensityMatrix mixed = tensor(thermal_state(0.4, m), DensityMatrix(squeezed_vacuum({.s = 0.4, .cutoff = m})));
  worst = std::min(worst, worst_minor(full_moment_matrix(mixed, 15), 5));
  worst = std::min(worst, esv_criterion_det(mixed));
  return {"separable_minor_nonnegativity", worst >= -1e-9, fmt("most_negative", worst)};
}

std::vector<Outcome> all() {
  return {pt_involution(),
          pt_hermiticity(),
          channel_trace_preservation(),
          partial_trace_preservation(),
          beamsplitter_number_conservation(),
          multiindex_total_order(),
          separable_minor_nonnegativity()};
}

}  // namespace props

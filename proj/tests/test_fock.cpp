#include "esv/fock.hpp"
#include "esv/states.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace esv;
using std::numbers::pi;

namespace {

FockVector basis(const ModeLayout& L, std::initializer_list<int> levels) {
  Vector v = Vector::Zero(L.total());
  v(L.flat(std::span<const int>(levels.begin(), levels.size()))) = 1.0;
  return FockVector(L, v);
}

}  // namespace

TEST(ModeLayout, StridesPutModeZeroFirst) {
  ModeLayout L{3, 4, 2};
  EXPECT_EQ(L.total(), 24);
  EXPECT_EQ(L.stride(0), 8);
  EXPECT_EQ(L.stride(2), 1);
  const std::vector<int> lv{2, 1, 1};
  const Index i = L.flat(lv);
  EXPECT_EQ(L.digit(i, 0), 2);
  EXPECT_EQ(L.digit(i, 1), 1);
  EXPECT_EQ(L.digit(i, 2), 1);
}

TEST(ModeLayout, RejectsBadDims) {
  EXPECT_THROW(ModeLayout({0}), std::invalid_argument);
  EXPECT_THROW(ModeLayout(std::vector<int>{}), std::invalid_argument);
}

TEST(Vacuum, Examples) {
  const auto v = vacuum(ModeLayout{4});
  EXPECT_EQ(v.amps(), (Vector(4) << 1, 0, 0, 0).finished());
  EXPECT_EQ(vacuum(ModeLayout{2, 2}).amp({0, 0}), cplx(1.0));
  EXPECT_DOUBLE_EQ(vacuum(ModeLayout{5, 3}).norm(), 1.0);
}

TEST(SingleModeGate, PhaseHalfPiMapsPlusToMinus) {
  const auto plus = squeezed_vacuum({.s = 0.7, .cutoff = 40});
  const auto minus = squeezed_vacuum({.s = -0.7, .cutoff = 40});
  const auto rotated = apply_single_mode(SingleModeGate::phase(pi / 2), 0, plus);
  EXPECT_NEAR(fidelity(rotated, minus), 1.0, 1e-14);
}

TEST(SingleModeGate, ZeroDisplacementIsIdentity) {
  std::mt19937 rng(1);
  const FockVector v(ModeLayout{12}, oracle::random_vector(12, rng));
  const auto out = apply_single_mode(SingleModeGate::displace(0.0), 0, v);
  EXPECT_LT((out.amps() - v.amps()).norm(), 1e-15);
}

TEST(SingleModeGate, SqueezeOnVacuumMatchesClosedForm) {
  const double s = 0.5;
  const auto v = apply_single_mode(SingleModeGate::squeeze(s), 0, vacuum(ModeLayout{60}));
  EXPECT_LT((v.amps() - oracle::squeezed(s, 60)).cwiseAbs().maxCoeff(), 1e-12);
  const double n = moment(v, {{0, true}, {0, false}}).real();
  EXPECT_NEAR(n, std::sinh(s) * std::sinh(s), 1e-8);
}

TEST(SingleModeGate, MatricesAgreeWithDenseExponential) {
  const Matrix d = gate_matrix(SingleModeGate::displace({0.6, -0.3}), 10, 10);
  EXPECT_LT((d - oracle::displace_gate({0.6, -0.3}, 10, 120)).cwiseAbs().maxCoeff(), 1e-12);
  const Matrix s = gate_matrix(SingleModeGate::squeeze(0.4), 10, 10);
  EXPECT_LT((s - oracle::squeeze_gate(0.4, 10, 200)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SingleModeGate, DensityConjugationMatchesPureRoute) {
  std::mt19937 rng(2);
  const FockVector v(ModeLayout{6, 5}, oracle::random_vector(30, rng));
  const auto gate = SingleModeGate::displace({0.2, 0.1});
  const auto pure = apply_single_mode(gate, 1, v);
  const auto mixed = apply_single_mode(gate, 1, DensityMatrix(v));
  EXPECT_LT((mixed.mat() - pure.amps() * pure.amps().adjoint()).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(SingleModeGate, StrictPolicyThrowsOnTruncation) {
  TruncationPolicy strict;
  strict.strict = true;
  EXPECT_THROW(apply_single_mode(SingleModeGate::displace(2.0), 0, vacuum(ModeLayout{6}), strict),
               TruncationError);
  EXPECT_THROW(apply_single_mode(SingleModeGate::phase(0.1), 5, vacuum(ModeLayout{6})), std::out_of_range);
}

TEST(SingleModeGate, LenientPolicyReportsWarning) {
  int warnings = 0;
  TruncationPolicy lenient{.on_warning = [&](std::string_view) { ++warnings; }};
  apply_single_mode(SingleModeGate::displace(2.0), 0, vacuum(ModeLayout{6}), lenient);
  EXPECT_EQ(warnings, 1);
}

TEST(BeamSplitter, SinglePhoton) {
  const ModeLayout L{3, 3};
  const auto out = apply_beamsplitter(0, 1, basis(L, {1, 0}));
  EXPECT_NEAR(out.amp({1, 0}).real(), 1 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(out.amp({0, 1}).real(), 1 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(out.norm(), 1.0, 1e-14);
  const auto other = apply_beamsplitter(0, 1, basis(L, {0, 1}));
  EXPECT_NEAR(other.amp({1, 0}).real(), -1 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(other.amp({0, 1}).real(), 1 / std::sqrt(2.0), 1e-14);
}

TEST(BeamSplitter, TwoModeSqueezedVacuumSplitsIntoOppositeSqueezers) {
  const double s = 0.5;
  const int n = 40;
  const auto out = apply_beamsplitter(0, 1, two_mode_squeezed_vacuum(s, n));
  const FockVector product(ModeLayout{n, n}, Eigen::kroneckerProduct(oracle::squeezed(s, n), oracle::squeezed(-s, n)).eval());
  EXPECT_GE(fidelity(out, product), 1 - 1e-8);
}

TEST(BeamSplitter, SwappedRolesInvert) {
  std::mt19937 rng(3);
  const ModeLayout L{5, 4, 5};
  Vector amps = oracle::random_vector(100, rng);
  // keep the input inside the photon-number blocks that fit both modes
  for (Index i = 0; i < L.total(); ++i)
    if (L.digit(i, 0) + L.digit(i, 2) > 4) amps(i) = 0.0;
  const FockVector v(L, amps / amps.norm());
  const auto there = apply_beamsplitter(0, 2, v);
  const auto back = apply_beamsplitter(2, 0, there);
  EXPECT_NEAR(fidelity(back, v), 1.0, 1e-12);
}

TEST(BeamSplitter, ConservesPhotonNumberDistribution) {
  std::mt19937 rng(4);
  const ModeLayout L{6, 6};
  const FockVector v(L, oracle::random_vector(36, rng));
  const auto out = apply_beamsplitter(0, 1, v, {}, 0.37);
  std::vector<double> before(11, 0.0), after(11, 0.0);
  for (Index i = 0; i < L.total(); ++i) {
    const int n = L.digit(i, 0) + L.digit(i, 1);
    before[n] += std::norm(v.amps()(i));
    after[n] += std::norm(out.amps()(i));
  }
  // blocks with n <= 5 lie entirely inside the cutoff
  for (int n = 0; n <= 5; ++n) EXPECT_NEAR(before[n], after[n], 1e-12) << "n=" << n;
}

TEST(BeamSplitter, DensityMatchesPure) {
  std::mt19937 rng(5);
  const FockVector v(ModeLayout{4, 5}, oracle::random_vector(20, rng));
  const auto p = apply_beamsplitter(1, 0, v, {}, 0.9);
  const auto d = apply_beamsplitter(1, 0, DensityMatrix(v), {}, 0.9);
  EXPECT_LT((d.mat() - p.amps() * p.amps().adjoint()).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(BeamSplitter, RejectsSameMode) {
  EXPECT_THROW(apply_beamsplitter(1, 1, vacuum(ModeLayout{3, 3})), std::invalid_argument);
}

TEST(Tensor, Examples) {
  const auto vv = tensor(vacuum(ModeLayout{3}), vacuum(ModeLayout{4}));
  EXPECT_EQ(vv.layout(), (ModeLayout{3, 4}));
  EXPECT_EQ(vv.amps(), vacuum(ModeLayout{3, 4}).amps());
  std::mt19937 rng(6);
  const DensityMatrix r(ModeLayout{3}, 0.7 * oracle::random_density(3, 2, rng));
  const DensityMatrix q(ModeLayout{4}, 1.3 * oracle::random_density(4, 2, rng));
  EXPECT_NEAR(tensor(r, q).trace().real(), 0.7 * 1.3, 1e-14);
  const DensityMatrix qn(ModeLayout{4}, oracle::random_density(4, 2, rng));
  EXPECT_LT((partial_trace(tensor(r, qn), {0}).mat() - r.mat()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PartialTrace, ProductState) {
  const auto p = squeezed_vacuum({.s = 0.4, .cutoff = 20});
  const auto m = squeezed_vacuum({.s = -0.4, .cutoff = 20});
  const auto reduced = partial_trace(DensityMatrix(tensor(p, m)), {0});
  const Matrix expect = p.amps() * p.amps().adjoint() * m.amps().squaredNorm();
  EXPECT_LT((reduced.mat() - expect).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PartialTrace, EbitStateHasTwoHalves) {
  const auto psi = esv_pure({.s = 0.6, .phi = pi, .cutoff = 40});
  const auto ev = eigs_hermitian(partial_trace(psi, {0}));
  EXPECT_NEAR(ev[0], 0.5, 1e-6);
  EXPECT_NEAR(ev[1], 0.5, 1e-6);
  EXPECT_NEAR(ev[2], 0.0, 1e-6);
}

TEST(PartialTrace, PureAndMixedRoutesAgreeAndPreserveTrace) {
  std::mt19937 rng(7);
  const FockVector v(ModeLayout{3, 4, 2}, oracle::random_vector(24, rng));
  const DensityMatrix rho(v);
  for (const ModeSet& keep : {ModeSet{0}, ModeSet{1}, ModeSet{2}, ModeSet{0, 2}, ModeSet{1, 2}}) {
    const auto a = partial_trace(v, keep);
    const auto b = partial_trace(rho, keep);
    EXPECT_LT((a.mat() - b.mat()).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_NEAR(b.trace().real(), 1.0, 1e-12);
    EXPECT_LT(b.hermiticity_error(), 1e-15);
  }
  EXPECT_THROW(partial_trace(rho, {}), std::invalid_argument);
}

TEST(PartialTranspose, Involution) {
  std::mt19937 rng(8);
  const DensityMatrix rho(ModeLayout{4, 3}, oracle::random_density(12, 3, rng));
  const auto twice = partial_transpose(partial_transpose(rho, {1}), {1});
  EXPECT_EQ(twice.mat(), rho.mat());
}

TEST(PartialTranspose, MatchesIndexLoopOracle) {
  std::mt19937 rng(9);
  const DensityMatrix rho(ModeLayout{4, 3}, oracle::random_density(12, 3, rng));
  EXPECT_EQ(partial_transpose(rho, {1}).mat(), oracle::pt_b(rho.mat(), 4, 3));
}

TEST(PartialTranspose, ProductStaysPositive) {
  const auto p = DensityMatrix(squeezed_vacuum({.s = 0.5, .cutoff = 12}));
  const auto q = DensityMatrix(squeezed_vacuum({.s = -0.3, .cutoff = 12}));
  const auto pt = partial_transpose(tensor(p, q), {1});
  EXPECT_GE(eigs_hermitian(pt).back(), -1e-10);
}

TEST(PartialTranspose, TwoModeSqueezedVacuumIsNpt) {
  const auto pt = partial_transpose(DensityMatrix(two_mode_squeezed_vacuum(0.5, 20)), {1});
  EXPECT_LT(eigs_hermitian(pt).back(), -1e-3);
}

TEST(Moment, AnnihilationThenCreationOnVacuum) {
  EXPECT_NEAR(moment(vacuum(ModeLayout{3}), {{0, false}, {0, true}}).real(), 1.0, 1e-15);
}

TEST(Moment, EsvPhotonNumberClosedForm) {
  for (double s : {0.2, 0.6, 1.0})
    for (double phi : {0.0, pi / 2, pi}) {
      const auto psi = esv_pure({.s = s, .phi = phi, .cutoff = 80});
      const cplx n = moment(psi, {{0, true}, {0, false}});
      EXPECT_NEAR(n.real(), oracle::esv_number(s, phi), 1e-7) << s << " " << phi;
      EXPECT_NEAR(n.imag(), 0.0, 1e-12);
    }
}

TEST(Moment, EsvClosedFormVariantIsNotAPhotonNumber) {
  EXPECT_LT(oracle::esv_number_alt(0.2, 0.0), 0.0);
  const auto psi = esv_pure({.s = 0.2, .phi = 0.0, .cutoff = 40});
  EXPECT_GT(moment(psi, {{0, true}, {0, false}}).real(), 0.0);
}

TEST(Moment, LowOrderEsvMomentsVanish) {
  const std::vector<Word> zero = {
      {{0, false}}, {{0, true}}, {{1, false}}, {{1, true}},
      {{0, false}, {0, false}}, {{0, true}, {0, true}}, {{1, false}, {1, false}}, {{1, true}, {1, true}},
      {{0, true}, {1, false}}, {{0, false}, {1, true}}, {{0, true}, {1, true}}, {{0, false}, {1, false}},
  };
  for (double phi : {0.0, std::numbers::pi}) {
    const auto psi = esv_pure({.s = 0.8, .phi = phi, .cutoff = 60});
    for (const auto& w : zero) EXPECT_LT(std::abs(moment(psi, w)), 1e-8) << phi;
    EXPECT_GT(std::abs(moment(psi, {{0, true}, {0, false}})), 0.1);
  }
}

TEST(Moment, EsvSqueezingMomentAwayFromRealPhases) {
  // <a²> = 2i N² sinφ <s+|s-> <s+|a²|s->: purely imaginary, zero only at sinφ = 0
  const double s = 0.8;
  auto scaled = [s](double phi) {
    const auto psi = esv_pure({.s = s, .phi = phi, .cutoff = 60});
    const double norm2 = 1.0 / (2.0 * (1.0 + std::cos(phi) / std::cosh(2 * s)));
    return moment(psi, {{0, false}, {0, false}}) / (norm2 * std::sin(phi));
  };
  const cplx ref = scaled(0.9);
  EXPECT_LT(std::abs(ref.real()), 1e-10);
  EXPECT_GT(std::abs(ref.imag()), 1e-2);
  for (double phi : {0.3, 2.0, -1.2}) EXPECT_LT(std::abs(scaled(phi) - ref), 1e-9) << phi;
}

TEST(Moment, MatchesDenseOperatorOracle) {
  std::mt19937 rng(10);
  const DensityMatrix rho(ModeLayout{4, 5}, oracle::random_density(20, 3, rng));
  const std::vector<std::pair<int, bool>> spec = {{0, true}, {1, false}, {1, true}, {0, false}, {1, true}};
  Word w;
  for (auto [m, d] : spec) w.push_back({static_cast<std::size_t>(m), d});
  const cplx expect = oracle::moment_dense(rho.mat(), 4, 5, spec, 4);
  EXPECT_LT(std::abs(moment(rho, w) - expect), 1e-12);
  // pure and mixed routes agree
  const FockVector v(ModeLayout{4, 5}, oracle::random_vector(20, rng));
  EXPECT_LT(std::abs(moment(v, w) - moment(DensityMatrix(v), w)), 1e-12);
}

TEST(Eigs, Examples) {
  const auto half = eigs_hermitian(Matrix(Matrix::Identity(2, 2) / 2.0));
  EXPECT_NEAR(half[0], 0.5, 1e-15);
  EXPECT_NEAR(half[1], 0.5, 1e-15);
  const auto proj = eigs_hermitian(DensityMatrix(squeezed_vacuum({.s = 0.3, .cutoff = 30})));
  EXPECT_NEAR(proj[0], 1.0, 1e-9);
  EXPECT_NEAR(proj[1], 0.0, 1e-12);
}

TEST(Eigs, TwoByTwoClosedForm) {
  std::mt19937 rng(11);
  std::normal_distribution<double> g;
  for (int k = 0; k < 20; ++k) {
    const double a = g(rng), d = g(rng);
    const cplx b(g(rng), g(rng));
    Matrix m(2, 2);
    m << a, b, std::conj(b), d;
    const double mid = (a + d) / 2, rad = std::sqrt((a - d) * (a - d) / 4 + std::norm(b));
    const auto ev = eigs_hermitian(m);
    EXPECT_NEAR(ev[0], mid + rad, 1e-12);
    EXPECT_NEAR(ev[1], mid - rad, 1e-12);
  }
}

TEST(Eigs, RejectsNonHermitian) {
  Matrix m(2, 2);
  m << 1, 1, 0, 1;
  EXPECT_THROW(eigs_hermitian(m), NumericError);
}

TEST(Fidelity, Examples) {
  const ModeLayout L{3};
  const auto zero = basis(L, {0}), one = basis(L, {1});
  EXPECT_DOUBLE_EQ(fidelity(zero, zero), 1.0);
  EXPECT_DOUBLE_EQ(fidelity(zero, one), 0.0);
  for (double s : {0.3, 1.0}) {
    const auto p = squeezed_vacuum({.s = s, .cutoff = 120});
    const auto m = squeezed_vacuum({.s = -s, .cutoff = 120});
    EXPECT_NEAR(fidelity(p, m), 1.0 / std::cosh(2 * s), 1e-10);
  }
  EXPECT_THROW(fidelity(zero, vacuum(ModeLayout{4})), std::invalid_argument);
}

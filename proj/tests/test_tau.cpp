#include <doctest.h>

#include "oracles.hpp"
#include "satogr/tau.hpp"

using namespace satogr;

namespace {

Series mono(int e, Rational c = Rational(1)) { return Series::monomial(e, c); }

FramePoint cusp() { return FramePoint::make({mono(0)}, 1); }

FramePoint shifted_line(Rational c) { return FramePoint::make({mono(-1) + mono(0, c)}, 1); }

}  // namespace

TEST_CASE("tau of basic points") {
  TauFunction T = tau(cusp(), 6);
  REQUIRE(T.coeffs.size() == 1u);
  CHECK(T.coeffs.at(Partition({1})) == Rational(1));
  CHECK(T.poly == Polynomial::variable(tvar(1), 6));
  CHECK(T.parity == 1);
  CHECK(tau(FramePoint::vacuum(), 6).poly == Polynomial(1).truncated(6));
  TauFunction L = tau(shifted_line(Rational(2)), 5);
  CHECK(L.poly == (Polynomial(1) + Polynomial::variable(tvar(1)).scaled(Rational(2))).truncated(5));
  CHECK_THROWS_AS(tau(FramePoint::make({}, -1), 4), Error);
}

TEST_CASE("tau of the affine flow is the elementary series") {
  Rational a(1, 3);
  TauFunction T = tau(flow(FramePoint::vacuum(), mono(0) + mono(1, a)), 6);
  for (int k = 0; k <= 6; ++k) CHECK(T.coeffs.at(Partition(std::vector<int>(k, 1))) == a.pow(k));
  CHECK(T.coeffs.size() == 7u);
  CHECK(T.isotropic == false);
  CHECK_THROWS_AS(tau_bar(T), Error);
}

TEST_CASE("tau bar") {
  CHECK_THROWS_AS(tau_bar(tau(cusp(), 6)), Error);
  TauBar b = tau_bar(tau(shifted_line(Rational(1)), 6));
  CHECK(b.lambda == Rational(1));
  CHECK(agrees((b.root * b.root).truncated(6), b.restricted));
}

TEST_CASE("adjoint point pairs to zero") {
  for (auto U : {cusp(), shifted_line(Rational(3)), FramePoint::vacuum(), FramePoint::make({mono(-1) + mono(1), mono(0) + mono(2, Rational(-1))}, 3)}) {
    FramePoint A = adjoint_point(U);
    CHECK(A.index() == -U.index());
    CHECK(pairings_vanish(U, A, SubstitutionMap::identity()).holds);
  }
}

TEST_CASE("Baker basis ordering") {
  BakerSeries psi = baker(cusp(), 3);
  REQUIRE(psi.basis.size() == 3u);
  CHECK(psi.basis[0] == mono(0));
  CHECK(psi.basis[1] == mono(-2));
  CHECK(psi.basis[2] == mono(-3));
}

TEST_CASE("bilinear residues track the frame criteria") {
  BilinearResult b = bilinear_residues(cusp(), 5);
  CHECK(b.first.zero);
  CHECK(b.second.zero);
  CHECK(b.literal_agrees);
  BilinearResult n = bilinear_residues(shifted_line(Rational(1, 2)), 5);
  CHECK(n.first.zero);
  CHECK(!n.second.zero);
  CHECK(!n.frame_second.holds);
  CHECK(!n.sigma_invariant.holds);
  REQUIRE(n.second.witness);
  CHECK(monomial_str(n.second.witness->first) == "t1*t'1");
}

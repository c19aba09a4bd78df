#include <doctest.h>

#include "oracles.hpp"
#include "satogr/grassmann.hpp"

using namespace satogr;

namespace {

Series mono(int e, Rational c = Rational(1)) { return Series::monomial(e, c); }

// The monomial point whose Maya set above -tail is `pivots`.
FramePoint maya_point(const std::vector<int>& pivots, int tail) {
  std::vector<Series> g;
  for (int p : pivots) g.push_back(mono(p));
  return FramePoint::make(g, tail);
}

// Monomial point of partition lam at charge 0.
FramePoint partition_point(const Partition& lam) {
  int L = lam.length();
  std::vector<int> piv;
  for (int i = 1; i <= L; ++i) piv.push_back(lam.part(i - 1) - i);
  return maya_point(piv, L);
}

Series cusp_unit() { return mono(0); }

// Isotropy by pairing every basis vector down to depth `deep`.
bool isotropic_brute(const FramePoint& U, int deep) {
  std::vector<Series> b = U.gens();
  for (int j = U.tail() + 1; j <= deep; ++j) b.push_back(mono(-j));
  for (auto& x : b)
    for (auto& y : b)
      if (!oracle::residue_sigma0(x, y).is_zero()) return false;
  return U.index() == 0;
}

}  // namespace

TEST_CASE("frame normal form") {
  FramePoint U = FramePoint::make({mono(0) + mono(-1), mono(-1)}, 2);
  REQUIRE(U.gens().size() == 2u);
  CHECK(U.pivots() == std::vector<int>{-1, 0});
  CHECK(U.gens()[1] == mono(0));
  CHECK_THROWS_AS(FramePoint::make({mono(0), mono(0).scaled(Rational(2))}, 1), Error);
  CHECK_THROWS_AS(FramePoint::make({mono(40)}, 0), Error);
  CHECK(FramePoint::span({mono(0), mono(0)}, 1).gens().size() == 1u);
  FramePoint N = normalize({mono(-1) + mono(1), mono(-1)}, 2);
  CHECK(N.pivots() == std::vector<int>{-1, 1});
  CHECK(N.gens()[0] == mono(-1));
}

TEST_CASE("index, parity and partition") {
  FramePoint cusp = FramePoint::make({cusp_unit()}, 1);
  CHECK(cusp.index() == 0);
  CHECK(cusp.parity() == 1);
  CHECK(cusp.partition() == Partition({1}));
  FramePoint vac = FramePoint::vacuum();
  CHECK(vac.index() == 0);
  CHECK(vac.parity() == 0);
  CHECK(vac.partition() == Partition());
  CHECK(FramePoint::make({}, -1).index() == 1);
  for (int n = 0; n <= 5; ++n)
    for (auto& lam : enumerate_partitions(n)) CHECK(partition_point(lam).partition() == lam);
}

TEST_CASE("Plucker coordinates of monomial points are deltas") {
  auto ps = partitions_up_to(5);
  for (auto& lam : ps) {
    FramePoint U = partition_point(lam);
    for (auto& mu : ps) CHECK(plucker(U, mu) == Rational(lam == mu ? 1 : 0));
  }
  CHECK_THROWS_AS(plucker(FramePoint::vacuum(), Partition(), 1), Error);
}

TEST_CASE("affine flow of the vacuum gives elementary functions") {
  Rational a(1, 2);
  FramePoint U = flow(FramePoint::vacuum(), mono(0) + mono(1, a));
  CHECK(!U.exact());
  CHECK(plucker(U, Partition()) == Rational(1));
  for (int k = 1; k <= 6; ++k) {
    std::vector<int> col(k, 1);
    CHECK(plucker(U, Partition(col)) == a.pow(k));
  }
  CHECK(plucker(U, Partition({2})) == Rational(0));
}

TEST_CASE("exact monomial flow shifts the frame") {
  FramePoint U = flow(FramePoint::vacuum(), mono(-1));
  CHECK(U.exact());
  CHECK(U.index() == -1);
}

TEST_CASE("sigma invariance") {
  auto s0 = SubstitutionMap::sigma0();
  CHECK(is_sigma_invariant(FramePoint::make({cusp_unit()}, 1), s0).holds);
  Verdict v = is_sigma_invariant(FramePoint::make({mono(-1) + mono(0, Rational(1, 2))}, 1), s0);
  CHECK(!v.holds);
  CHECK(!v.witness.empty());
  CHECK(is_sigma_invariant(FramePoint::make({mono(-1) + mono(1)}, 1), s0).holds);
}

TEST_CASE("isotropy against brute-force pairing") {
  auto s0 = SubstitutionMap::sigma0();
  oracle::Rng rng(23);
  int iso = 0;
  for (int it = 0; it < 60; ++it) {
    int J = rng.uniform(0, 3);
    std::vector<Series> g;
    for (int k = 0; k < J; ++k) {
      Series v = rng.series(-J, 2, 0.4);
      if (rng.uniform(0, 1)) v = v.parity_part(rng.uniform(0, 1));
      g.push_back(v);
    }
    FramePoint U;
    try {
      U = FramePoint::make(g, J);
    } catch (const Error&) {
      continue;
    }
    bool brute = isotropic_brute(U, 12);
    iso += brute;
    CHECK(is_isotropic(U, s0).verdict.holds == brute);
  }
  CHECK(iso > 0);
}

TEST_CASE("orthogonal complement") {
  auto s0 = SubstitutionMap::sigma0();
  FramePoint cusp = FramePoint::make({cusp_unit()}, 1);
  CHECK(orthogonal(cusp, s0) == cusp);
  FramePoint U = FramePoint::make({mono(-1) + mono(1, Rational(2)), mono(0) + mono(2)}, 3);
  FramePoint P = orthogonal(U, s0);
  CHECK(P.index() == -U.index());
  CHECK(orthogonal(P, s0) == U);
  CHECK_THROWS_AS(orthogonal(U, SubstitutionMap(mono(1) + mono(2))), Error);
}

TEST_CASE("even and odd parts") {
  FramePoint U = FramePoint::make({cusp_unit(), mono(-1) + mono(1)}, 3);
  auto [E, O] = split_even_odd(U);
  CHECK(E.index() + O.index() == U.index());
  CHECK(merge_even_odd(E, O) == U);
  CHECK_THROWS_AS(split_even_odd(FramePoint::make({mono(-1) + mono(0)}, 1)), Error);
}

TEST_CASE("odd exponentials are Prym flows") {
  Polynomial a1 = Polynomial::variable(param(1), 6), a3 = Polynomial::variable(param(2), 6);
  PolySeries x = PolySeries::monomial(-1, a1) + PolySeries::monomial(-3, a3);
  PolySeries g = exp_nilpotent(x);
  CHECK(is_prym_flow(g, SubstitutionMap::sigma0()).holds);
  PolySeries h = exp_nilpotent(PolySeries::monomial(-2, a1));
  CHECK(!is_prym_flow(h, SubstitutionMap::sigma0()).holds);
}

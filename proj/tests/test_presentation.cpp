#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopf/presentation.hpp"

using namespace hopf;

namespace {
constexpr int GX = 0, GY = 1, GZ = 2;
constexpr int SP = 0, SM = 1, GA = 2;

LinComb one_word(Word w) { return LinComb::of(std::move(w), CycNum::from_long(1)); }
}  // namespace

TEST_CASE("dimensions match the classification") {
  for (int n = 2; n <= 5; ++n) CHECK(build_h2n2(n)->dim == 2 * n * n);
  for (int m = 2; m <= 6; ++m) {
    CHECK(build_a4m(m)->dim == 4 * m);
    CHECK(build_b4m(m)->dim == 4 * m);
  }
  CHECK(build_group_algebra(GroupKind::WreathZnS2, 3)->dim == 18);
  CHECK(build_group_algebra(GroupKind::Dihedral4m, 3)->dim == 12);
  CHECK(build_group_algebra(GroupKind::DihedralTimesZ2, 3)->dim == 12);
}

TEST_CASE("construction rejects out-of-range parameters") {
  CHECK_THROWS_AS(build_h2n2(1), std::invalid_argument);
  CHECK_THROWS_AS(build_a4m(1), std::invalid_argument);
  CHECK_THROWS_AS(build_b4m(0), std::invalid_argument);
}

TEST_CASE("z^2 at n=2 is the expected average of group-likes") {
  HopfPtr H = build_h2n2(2);
  LinComb zz = H->normalize(Word{GZ, GZ});
  // (1/2)(1 + x + y - xy): q = -1 so q^{-ij} alternates sign at i=j=1
  Rat half(1, 2);
  LinComb expect;
  expect.add(Word{}, CycNum::from_rational(half, 4));
  expect.add(Word{GX}, CycNum::from_rational(half, 4));
  expect.add(Word{GY}, CycNum::from_rational(half, 4));
  expect.add(Word{GX, GY}, CycNum::from_rational(-half, 4));
  CHECK(zz == expect);
}

TEST_CASE("z^2 is central and x,y,z interplay is as declared") {
  for (int n : {2, 3, 4}) {
    HopfPtr H = build_h2n2(n);
    LinComb zz = H->normalize(Word{GZ, GZ});
    for (int g : {GX, GY, GZ}) {
      CHECK(H->multiply(zz, one_word(Word{g})) == H->multiply(one_word(Word{g}), zz));
    }
    // zx = yz, zy = xz
    CHECK(H->normalize(Word{GZ, GX}) == one_word(Word{GY, GZ}));
    CHECK(H->normalize(Word{GZ, GY}) == one_word(Word{GX, GZ}));
    // x^n = y^n = 1
    CHECK(H->normalize(Word(static_cast<size_t>(n), GX)) == one_word(Word{}));
  }
}

TEST_CASE("coproduct of z at n=2 has the four expected terms") {
  HopfPtr H = build_h2n2(2);
  const TensorElem& d = H->coproduct_of_word(Word{GZ});
  REQUIRE(d.size() == 4);
  Rat half(1, 2);
  auto coeff = [&](Word l, Word r) {
    auto it = d.find({l, r});
    REQUIRE(it != d.end());
    return it->second;
  };
  CHECK(coeff({GZ}, {GZ}) == CycNum::from_rational(half, 4));
  CHECK(coeff({GX, GZ}, {GZ}) == CycNum::from_rational(half, 4));
  CHECK(coeff({GZ}, {GY, GZ}) == CycNum::from_rational(half, 4));
  CHECK(coeff({GX, GZ}, {GY, GZ}) == CycNum::from_rational(-half, 4));
}

TEST_CASE("coproducts are algebra maps (respect all relations)") {
  for (int n : {2, 3}) CHECK(check_coproduct_respects_rules(*build_h2n2(n)));
  for (int m : {2, 3, 4}) {
    CHECK(check_coproduct_respects_rules(*build_a4m(m)));
    CHECK(check_coproduct_respects_rules(*build_b4m(m)));
  }
  CHECK(check_coproduct_respects_rules(*build_group_algebra(GroupKind::WreathZnS2, 2)));
}

TEST_CASE("Hopf axioms hold on generators") {
  std::vector<HopfPtr> algebras;
  for (int n : {2, 3, 4}) algebras.push_back(build_h2n2(n));
  for (int m : {2, 3, 4, 5, 6}) {
    algebras.push_back(build_a4m(m));
    algebras.push_back(build_b4m(m));
  }
  algebras.push_back(build_group_algebra(GroupKind::WreathZnS2, 3));
  algebras.push_back(build_group_algebra(GroupKind::Dihedral4m, 2));
  algebras.push_back(build_group_algebra(GroupKind::DihedralTimesZ2, 2));
  for (const HopfPtr& H : algebras) {
    CAPTURE(H->name);
    for (int g = 0; g < static_cast<int>(H->generator_count()); ++g) {
      CHECK(check_coassociative(*H, g));
      CHECK(check_counit_axiom(*H, g));
      CHECK(check_antipode_axiom(*H, g));
    }
  }
}

TEST_CASE("H2n2 at n=5 passes construction checks (larger instance)") {
  HopfPtr H = build_h2n2(5);
  CHECK(H->dim == 50);
  // antipode inverts group-likes
  LinComb sx = H->antipode_of_word(Word{GX});
  CHECK(H->multiply(sx, one_word(Word{GX})) == one_word(Word{}));
}

TEST_CASE("dihedral-type rotation relation folds to the parity element") {
  for (int m : {2, 3, 4}) {
    HopfPtr A = build_a4m(m);
    HopfPtr B = build_b4m(m);
    Word rot;
    for (int i = 0; i < m; ++i) {
      rot.push_back(SP);
      rot.push_back(SM);
    }
    CHECK(A->normalize(rot) == one_word(Word{}));       // (s+s-)^m = 1
    CHECK(B->normalize(rot) == one_word(Word{GA}));     // (s+s-)^m = a
    // involutions
    CHECK(A->normalize(Word{SP, SP}) == one_word(Word{}));
    CHECK(B->normalize(Word{SM, SM}) == one_word(Word{}));
    // a is central
    for (int g : {SP, SM}) {
      CHECK(B->normalize(Word{g, GA}) == B->normalize(Word{GA, g}));
    }
  }
}

TEST_CASE("iterated coproduct slot order is consistent") {
  HopfPtr H = build_b4m(3);
  auto l = H->iterated_coproduct(SP, 4, true);
  auto r = H->iterated_coproduct(SP, 4, false);
  REQUIRE(l.size() == r.size());
  for (size_t i = 0; i < l.size(); ++i) {
    CHECK(l[i].second == r[i].second);
    CHECK(l[i].first == r[i].first);
  }
}

TEST_CASE("antipode is an anti-homomorphism where checked") {
  HopfPtr H = build_h2n2(3);
  // S(zx) = S(x)S(z)
  LinComb szx = H->antipode_of_word(Word{GZ, GX});
  LinComb sx = H->antipode_of_word(Word{GX});
  LinComb sz = H->antipode_of_word(Word{GZ});
  CHECK(szx == H->multiply(sx, sz));
}

TEST_CASE("counit is multiplicative and sends every generator to 1") {
  for (const HopfPtr& H : {build_h2n2(2), build_a4m(3), build_b4m(2)}) {
    for (int g = 0; g < static_cast<int>(H->generator_count()); ++g)
      CHECK(H->counit_of_word(Word{g}) == CycNum::from_long(1, H->conductor));
    CHECK(H->counit_of_word(Word{0, 1, 0}) == CycNum::from_long(1, H->conductor));
  }
}

TEST_CASE("basis words are deterministic and indexed") {
  HopfPtr H = build_h2n2(2);
  REQUIRE(H->basis.size() == 8);
  CHECK(H->basis[0] == Word{});
  for (size_t i = 0; i < H->basis.size(); ++i)
    CHECK(H->basis_index.at(H->basis[i]) == i);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "hopf/fusion.hpp"

using namespace hopf;

namespace {

RepLabel unit_label(const HopfPresentation& H) {
  if (H.family == Family::H2n2 || H.family == Family::WreathZnS2)
    return label_T_cyc(0, 1);
  return label_T_signs(1, 1, 1);
}

void check_table_properties(const FusionTable& t) {
  size_t L = t.size();
  size_t unit = t.index_of(unit_label(*t.H));
  for (size_t a = 0; a < L; ++a) {
    for (size_t b = 0; b < L; ++b) {
      // dimension identity
      int total = 0;
      for (size_t c = 0; c < L; ++c) total += t.mult(a, b, c) * t.labels[c].dim();
      CHECK(total == t.labels[a].dim() * t.labels[b].dim());
    }
    // unit is a two-sided identity
    for (size_t c = 0; c < L; ++c) {
      CHECK(t.mult(unit, a, c) == (a == c ? 1 : 0));
      CHECK(t.mult(a, unit, c) == (a == c ? 1 : 0));
    }
  }
}

}  // namespace

TEST_CASE("engine tables equal the closed forms") {
  std::vector<HopfPtr> algebras = {
      build_h2n2(2),
      build_h2n2(3),
      build_b4m(2),
      build_b4m(3),
      build_b4m(4),
      build_a4m(3),
      build_a4m(2),
      build_a4m(4),
      build_group_algebra(GroupKind::WreathZnS2, 2),
      build_group_algebra(GroupKind::WreathZnS2, 3),
      build_group_algebra(GroupKind::Dihedral4m, 3),
      build_group_algebra(GroupKind::DihedralTimesZ2, 3),
  };
  for (const HopfPtr& H : algebras) {
    CAPTURE(H->name);
    FusionTable engine = build_fusion_table(H);
    FusionTable closed = expected_fusion_table(H);
    CHECK(tables_equal(engine, closed));
    check_table_properties(engine);
  }
}

TEST_CASE("commutativity matches the family") {
  CHECK(is_commutative(build_fusion_table(build_h2n2(3))));
  CHECK(is_commutative(build_fusion_table(build_b4m(3))));
  CHECK(is_commutative(build_fusion_table(build_a4m(3))));
  CHECK(!is_commutative(build_fusion_table(build_a4m(2))));
  CHECK(!is_commutative(build_fusion_table(build_a4m(4))));
}

TEST_CASE("A-even one-dims form the dihedral group of order 8") {
  HopfPtr A = build_a4m(4);
  FusionTable t = build_fusion_table(A);
  auto prod = [&](const RepLabel& x, const RepLabel& y) {
    size_t a = t.index_of(x), b = t.index_of(y);
    for (size_t c = 0; c < t.size(); ++c)
      if (t.mult(a, b, c) == 1) return t.labels[c];
    throw std::runtime_error("no product found");
  };
  RepLabel r = label_T_signs(1, -1, -1);  // quarter rotation
  RepLabel r2 = prod(r, r);
  CHECK(r2 == label_T_signs(-1, -1, 1));  // central element
  CHECK(prod(r2, r2) == label_T_signs(1, 1, 1));
  CHECK(prod(r, r2) == prod(r2, r));  // center commutes
  // the central element commutes with every character
  for (const RepLabel& l : t.labels) {
    if (l.dim() != 1) continue;
    CHECK(prod(r2, l) == prod(l, r2));
  }
  // nonabelian: some pair fails to commute
  bool found = false;
  for (const RepLabel& x : t.labels)
    for (const RepLabel& y : t.labels) {
      if (x.dim() != 1 || y.dim() != 1) continue;
      if (!(prod(x, y) == prod(y, x))) found = true;
    }
  CHECK(found);
  // reflections square to the identity
  for (const RepLabel& s : {label_T_signs(1, 1, -1), label_T_signs(-1, 1, 1),
                            label_T_signs(1, -1, 1), label_T_signs(-1, -1, -1)}) {
    CHECK(prod(s, s) == label_T_signs(1, 1, 1));
  }
}

TEST_CASE("closure of the defining two-dim of the smallest case reaches everything") {
  HopfPtr H = build_h2n2(2);
  FusionTable t = build_fusion_table(H);
  CHECK(closure_is_all(t, {label_pi_cyc(0, 1)}));
  // a character alone can never generate a two-dimensional
  CHECK(!closure_is_all(t, {label_T_cyc(1, -1)}));
  auto cl = generation_closure(t, {label_T_cyc(1, -1)});
  for (const RepLabel& l : cl) CHECK(l.dim() == 1);
}

TEST_CASE("closure for the wreath group matches group-rep faithfulness") {
  // rho_{0,1} sends x^a y^b z^c to the identity only for the trivial element,
  // so the group representation is faithful and every irreducible must appear
  // in some tensor power.
  HopfPtr G = build_group_algebra(GroupKind::WreathZnS2, 3);
  FusionTable t = build_fusion_table(G);
  CHECK(closure_is_all(t, {label_pi_cyc(0, 1)}));
  // an unfaithful seed: a single character cannot reach the two-dims
  CHECK(!closure_is_all(t, {label_T_cyc(1, 1)}));
}

TEST_CASE("closed-form criterion equals closure: x/y/z family") {
  for (int n = 2; n <= 4; ++n) {
    HopfPtr H = build_h2n2(n);
    FusionTable t = build_fusion_table(H);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(j);
        bool closure = closure_is_all(t, {label_pi_cyc(i, j)});
        bool crit = inner_faithful_criterion(*H, {label_pi_cyc(i, j)});
        CHECK(closure == crit);
        CHECK(crit == (std::gcd(std::abs(i * i - j * j), n) == 1));
      }
  }
}

TEST_CASE("closed-form criterion equals closure: B family") {
  for (int m = 2; m <= 5; ++m) {
    HopfPtr B = build_b4m(m);
    FusionTable t = build_fusion_table(B);
    for (int i = 1; i <= m - 1; ++i) {
      CAPTURE(m);
      CAPTURE(i);
      bool closure = closure_is_all(t, {label_pi_index(i)});
      bool crit = inner_faithful_criterion(*B, {label_pi_index(i)});
      CHECK(closure == crit);
      CHECK(crit == (std::gcd(i, 2 * m) == 1));
    }
  }
}

TEST_CASE("closed-form criterion equals closure: A family, odd parameter") {
  for (int m : {3, 5}) {
    HopfPtr A = build_a4m(m);
    FusionTable t = build_fusion_table(A);
    for (int i = 1; i <= (m - 1) / 2; ++i)
      for (int eps : {1, -1}) {
        CAPTURE(m);
        CAPTURE(i);
        CAPTURE(eps);
        bool closure = closure_is_all(t, {label_pi_index_sign(i, eps)});
        bool crit = inner_faithful_criterion(*A, {label_pi_index_sign(i, eps)});
        CHECK(closure == crit);
        CHECK(crit == (eps == -1 && std::gcd(i, m) == 1));
      }
  }
}

TEST_CASE("closed-form criterion equals closure: A family, even parameter") {
  for (int m : {2, 4, 6}) {
    HopfPtr A = build_a4m(m);
    FusionTable t = build_fusion_table(A);
    // bare two-dims never inner-faithful (including the reducible i = m/2)
    for (int i = 1; i <= m / 2 - 1; ++i)
      for (int eps : {1, -1}) {
        CHECK(!inner_faithful_criterion(*A, {label_pi_index_sign(i, eps)}));
        CHECK(!closure_is_all(t, {label_pi_index_sign(i, eps)}));
      }
    // all three-dimensional shapes
    for (int i = 1; i <= m / 2; ++i) {
      for (int eps : {1, -1}) {
        for (int a : {1, -1})
          for (int b : {1, -1})
            for (int g : {1, -1}) {
              CAPTURE(m);
              CAPTURE(i);
              CAPTURE(eps);
              CAPTURE(a);
              CAPTURE(b);
              CAPTURE(g);
              std::vector<RepLabel> seed{label_pi_index_sign(i, eps),
                                         label_T_signs(a, b, g)};
              bool closure = closure_is_all(t, seed);
              bool crit = inner_faithful_criterion(*A, seed);
              CHECK(closure == crit);
            }
      }
    }
  }
}

TEST_CASE("natural bijections carry fusion tables onto the group algebras") {
  for (int n = 2; n <= 4; ++n) {
    FusionTable h = build_fusion_table(build_h2n2(n));
    FusionTable g = build_fusion_table(build_group_algebra(GroupKind::WreathZnS2, n));
    std::vector<std::pair<RepLabel, RepLabel>> bij;
    for (const RepLabel& l : h.labels) bij.emplace_back(l, l);
    CHECK(compare_fusion_isomorphism(h, g, bij));
  }
  for (int m : {2, 4}) {
    FusionTable b = build_fusion_table(build_b4m(m));
    FusionTable d = build_fusion_table(build_group_algebra(GroupKind::Dihedral4m, m));
    std::vector<std::pair<RepLabel, RepLabel>> bij;
    for (const RepLabel& l : b.labels) bij.emplace_back(l, l);
    CHECK(compare_fusion_isomorphism(b, d, bij));
  }
  for (int m : {3, 5}) {
    FusionTable a = build_fusion_table(build_a4m(m));
    FusionTable d = build_fusion_table(build_group_algebra(GroupKind::DihedralTimesZ2, m));
    std::vector<std::pair<RepLabel, RepLabel>> bij;
    for (const RepLabel& l : a.labels) bij.emplace_back(l, l);
    CHECK(compare_fusion_isomorphism(a, d, bij));
  }
}

TEST_CASE("odd-parameter B-type table is not a group table") {
  // For odd m the four invertible labels form a cyclic group of order 4:
  // T_{1,-1,-1} squares to T_{-1,-1,1}, not to the unit.  The dihedral group
  // of the same order has Klein-four characters, so no structure-constant
  // bijection can exist.
  FusionTable b = build_fusion_table(build_b4m(3));
  size_t r = b.index_of(label_T_signs(1, -1, -1));
  size_t c = b.index_of(label_T_signs(-1, -1, 1));
  size_t unit = b.index_of(label_T_signs(1, 1, 1));
  CHECK(b.mult(r, r, c) == 1);
  CHECK(b.mult(r, r, unit) == 0);
  FusionTable d = build_fusion_table(build_group_algebra(GroupKind::Dihedral4m, 3));
  size_t rd = d.index_of(label_T_signs(1, -1, -1));
  size_t unitd = d.index_of(label_T_signs(1, 1, 1));
  CHECK(d.mult(rd, rd, unitd) == 1);
  CHECK(!find_fusion_isomorphism(b, d).has_value());
}

TEST_CASE("a wrong bijection is rejected") {
  FusionTable h = build_fusion_table(build_h2n2(2));
  FusionTable g = build_fusion_table(build_group_algebra(GroupKind::WreathZnS2, 2));
  std::vector<std::pair<RepLabel, RepLabel>> bij;
  for (const RepLabel& l : h.labels) bij.emplace_back(l, l);
  std::swap(bij[0].second, bij[1].second);  // break the unit
  CHECK(!compare_fusion_isomorphism(h, g, bij));
}

TEST_CASE("search finds an isomorphism between the smallest two families") {
  FusionTable h = build_fusion_table(build_h2n2(2));   // dimension 8
  FusionTable b = build_fusion_table(build_b4m(2));    // dimension 8
  auto iso = find_fusion_isomorphism(h, b);
  REQUIRE(iso.has_value());
  CHECK(compare_fusion_isomorphism(h, b, *iso));
  // noncommutative vs commutative: no isomorphism possible
  FusionTable a2 = build_fusion_table(build_a4m(2));
  FusionTable g2 = build_fusion_table(build_group_algebra(GroupKind::DihedralTimesZ2, 2));
  CHECK(!find_fusion_isomorphism(a2, g2).has_value());
}

TEST_CASE("closure accepts convenience seeds by expanding them") {
  HopfPtr A = build_a4m(2);
  FusionTable t = build_fusion_table(A);
  // pi_1^{-1} at m=2 is reducible (index m/2); with T_{1,-1,1} the closure
  // generates the full dihedral character group, which is all of the catalog
  CHECK(closure_is_all(t, {label_pi_index_sign(1, -1), label_T_signs(1, -1, 1)}));
  CHECK(inner_faithful_criterion(*A, {label_pi_index_sign(1, -1), label_T_signs(1, -1, 1)}));
  // without the helper character it stays inside half the characters
  CHECK(!closure_is_all(t, {label_pi_index_sign(1, -1)}));
}

TEST_CASE("criterion rejects unsupported seed shapes loudly") {
  HopfPtr H = build_h2n2(3);
  CHECK_THROWS_AS(
      inner_faithful_criterion(*H, {label_T_cyc(1, 1), label_T_cyc(2, -1)}),
      std::invalid_argument);
  HopfPtr G = build_group_algebra(GroupKind::WreathZnS2, 3);
  CHECK_THROWS_AS(inner_faithful_criterion(*G, {label_pi_cyc(0, 1)}),
                  std::invalid_argument);
}

TEST_CASE("json serialization is deterministic and well-formed") {
  FusionTable t = build_fusion_table(build_b4m(2));
  nlohmann::ordered_json j1 = fusion_to_json(t);
  nlohmann::ordered_json j2 = fusion_to_json(build_fusion_table(build_b4m(2)));
  CHECK(j1.dump() == j2.dump());
  CHECK(j1["schema"] == "hopf-reflections/1");
  CHECK(j1["labels"].size() == t.size());
  CHECK(j1["cube"].size() == t.size());
  CHECK(j1["cube"][0].size() == t.size());
  CHECK(j1["cube"][0][0].size() == t.size());
}

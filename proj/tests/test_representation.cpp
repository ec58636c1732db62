#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hopf/representation.hpp"

using namespace hopf;

namespace {

bool has_part(const std::vector<std::pair<RepLabel, int>>& parts, const RepLabel& l, int mult) {
  for (const auto& [pl, pm] : parts)
    if (pl == l) return pm == mult;
  return false;
}

int total_dim(const std::vector<std::pair<RepLabel, int>>& parts) {
  int d = 0;
  for (const auto& [pl, pm] : parts) d += pl.dim() * pm;
  return d;
}

}  // namespace

TEST_CASE("label strings roundtrip through parse") {
  for (const RepLabel& l :
       {label_T_cyc(3, -1), label_pi_cyc(1, 2), label_T_signs(1, -1, 1),
        label_pi_index(4), label_pi_index_sign(2, -1)}) {
    CHECK(RepLabel::parse(l.str()) == l);
  }
  CHECK(RepLabel::parse("pi_1_2") == label_pi_cyc(1, 2));
  CHECK(RepLabel::parse("pi_3") == label_pi_index(3));
  CHECK(RepLabel::parse("pi_3_-") == label_pi_index_sign(3, -1));
  CHECK(RepLabel::parse("T_+_-_+") == label_T_signs(1, -1, 1));
  CHECK(RepLabel::parse("T_2_+") == label_T_cyc(2, 1));
  CHECK_THROWS_AS(RepLabel::parse("frobenius"), std::invalid_argument);
}

TEST_CASE("catalog sizes and sum-of-squares identity") {
  struct Case {
    HopfPtr H;
    size_t one_dims, two_dims;
  };
  std::vector<Case> cases;
  for (int n = 2; n <= 5; ++n)
    cases.push_back({build_h2n2(n), 2 * static_cast<size_t>(n),
                     static_cast<size_t>(n * (n - 1) / 2)});
  cases.push_back({build_a4m(4), 8, 2});   // pi_1^{+-}
  cases.push_back({build_a4m(6), 8, 4});   // pi_1,pi_2 ^{+-}
  cases.push_back({build_a4m(5), 4, 4});   // pi_1,pi_2 ^{+-}
  cases.push_back({build_a4m(3), 4, 2});
  cases.push_back({build_a4m(2), 8, 0});   // degenerate: no irreducible 2-dims
  for (int m = 2; m <= 6; ++m)
    cases.push_back({build_b4m(m), 4, static_cast<size_t>(m - 1)});
  cases.push_back({build_group_algebra(GroupKind::WreathZnS2, 3), 6, 3});
  for (const Case& c : cases) {
    CAPTURE(c.H->name);
    std::vector<RepLabel> labels = irreducible_labels(*c.H);
    size_t ones = 0, twos = 0;
    int sq = 0;
    for (const RepLabel& l : labels) {
      (l.dim() == 1 ? ones : twos) += 1;
      sq += l.dim() * l.dim();
    }
    CHECK(ones == c.one_dims);
    CHECK(twos == c.two_dims);
    CHECK(sq == c.H->dim);
  }
}

TEST_CASE("every catalog entry is a module and abs irreducible") {
  for (const HopfPtr& H :
       {build_h2n2(2), build_h2n2(3), build_a4m(3), build_a4m(4), build_b4m(2),
        build_b4m(3), build_group_algebra(GroupKind::WreathZnS2, 2)}) {
    CAPTURE(H->name);
    std::vector<Representation> cat = irreducible_catalog(H);
    for (const Representation& r : cat) check_is_module(r);  // throws on failure
    // distinct labels: no intertwiners; same label: exactly one
    for (size_t i = 0; i < cat.size(); ++i)
      for (size_t j = 0; j < cat.size(); ++j) {
        size_t expected = (i == j) ? 1 : 0;
        CHECK(intertwiners(cat[i], cat[j]).size() == expected);
      }
  }
}

TEST_CASE("two-dimensional labels canonicalize") {
  HopfPtr H = build_h2n2(4);
  // subscripts mod n, then sorted increasing
  CHECK(canonical_label(*H, label_pi_cyc(7, 2)) ==
        std::vector<RepLabel>{label_pi_cyc(2, 3)});
  CHECK(canonical_label(*H, label_pi_cyc(2, 1)) ==
        std::vector<RepLabel>{label_pi_cyc(1, 2)});
  // equal subscripts: splits into two characters
  CHECK(canonical_label(*H, label_pi_cyc(2, 2)) ==
        (std::vector<RepLabel>{label_T_cyc(2, 1), label_T_cyc(2, -1)}));
  CHECK(label_is_irreducible(*H, label_pi_cyc(1, 2)));
  CHECK(!label_is_irreducible(*H, label_pi_cyc(2, 1)));

  HopfPtr B = build_b4m(3);
  CHECK(canonical_label(*B, label_pi_index(5)) ==
        std::vector<RepLabel>{label_pi_index(1)});
  CHECK(canonical_label(*B, label_pi_index(0)) ==
        (std::vector<RepLabel>{label_T_signs(1, 1, 1), label_T_signs(-1, -1, 1)}));
  CHECK(canonical_label(*B, label_pi_index(3)) ==
        (std::vector<RepLabel>{label_T_signs(1, -1, -1), label_T_signs(-1, 1, -1)}));

  HopfPtr A = build_a4m(6);
  CHECK(canonical_label(*A, label_pi_index_sign(5, -1)) ==
        std::vector<RepLabel>{label_pi_index_sign(1, -1)});
  CHECK(canonical_label(*A, label_pi_index_sign(3, 1)) ==
        (std::vector<RepLabel>{label_T_signs(1, -1, 1), label_T_signs(-1, 1, 1)}));
  CHECK(canonical_label(*A, label_pi_index_sign(0, -1)) ==
        (std::vector<RepLabel>{label_T_signs(1, 1, -1), label_T_signs(-1, -1, -1)}));
}

TEST_CASE("foreign labels are rejected") {
  HopfPtr H = build_h2n2(2);
  CHECK_THROWS_AS(canonical_label(*H, label_pi_index(1)), std::invalid_argument);
  HopfPtr A = build_a4m(3);
  // (s+ s-)^m = 1 forces equal first two signs when m is odd
  CHECK_THROWS_AS(canonical_label(*A, label_T_signs(1, -1, 1)), std::invalid_argument);
  HopfPtr B = build_b4m(3);
  // third sign forced to (-1)^m * product pattern
  CHECK_THROWS_AS(canonical_label(*B, label_T_signs(1, -1, 1)), std::invalid_argument);
  CHECK_NOTHROW(canonical_label(*B, label_T_signs(1, -1, -1)));
}

TEST_CASE("smallest case: pi tensor pi splits into all four characters") {
  HopfPtr H = build_h2n2(2);
  Representation pi = build_representation(H, label_pi_cyc(0, 1));
  Representation sq = tensor_rep(pi, pi);
  auto parts = decompose_multiset(sq);
  REQUIRE(parts.size() == 4);
  CHECK(has_part(parts, label_T_cyc(0, 1), 1));
  CHECK(has_part(parts, label_T_cyc(0, -1), 1));
  CHECK(has_part(parts, label_T_cyc(1, 1), 1));
  CHECK(has_part(parts, label_T_cyc(1, -1), 1));
  CHECK(total_dim(parts) == 4);
}

TEST_CASE("matrices follow the declared column conventions") {
  HopfPtr H = build_h2n2(2);
  // the variant with swapped indices realizes x -> diag(-1,1), y -> diag(1,-1),
  // z -> the swap matrix
  Representation pi = build_representation(H, label_pi_cyc(1, 0));
  CHECK(pi.gen_images[0].at(0, 0) == CycNum::from_long(-1, 4));
  CHECK(pi.gen_images[0].at(1, 1) == CycNum::from_long(1, 4));
  CHECK(pi.gen_images[1].at(0, 0) == CycNum::from_long(1, 4));
  CHECK(pi.gen_images[1].at(1, 1) == CycNum::from_long(-1, 4));
  CHECK(pi.gen_images[2].at(0, 1) == CycNum::from_long(1, 4));
  CHECK(pi.gen_images[2].at(1, 0) == CycNum::from_long(1, 4));
  CHECK(pi.gen_images[2].at(0, 0).is_zero());

  // z^2 acts on pi_{i,j} by the scalar q^{ij}
  HopfPtr H3 = build_h2n2(3);
  Representation p12 = build_representation(H3, label_pi_cyc(1, 2));
  CycMatrix zz = p12.word_image(Word{2, 2});
  CycNum q = CycNum::root_of_unity(3, 1).lifted(6);
  CHECK(zz.at(0, 0) == q * q);
  CHECK(zz.at(1, 1) == q * q);
  CHECK(zz.at(0, 1).is_zero());
}

TEST_CASE("character shift rule for tensoring with one-dims") {
  HopfPtr H = build_h2n2(3);
  Representation t = build_representation(H, label_T_cyc(1, 1));
  Representation pi = build_representation(H, label_pi_cyc(0, 1));
  auto parts = decompose_multiset(tensor_rep(t, pi));
  REQUIRE(parts.size() == 1);
  CHECK(has_part(parts, label_pi_cyc(1, 2), 1));
}

TEST_CASE("B-family two-dims multiply with boundary splitting") {
  HopfPtr B = build_b4m(3);
  Representation p1 = build_representation(B, label_pi_index(1));
  Representation p2 = build_representation(B, label_pi_index(2));
  auto parts = decompose_multiset(tensor_rep(p1, p2));
  // pi_1 (x) pi_2 = pi_{1} (+) [boundary pi_3 -> two characters]
  CHECK(total_dim(parts) == 4);
  CHECK(has_part(parts, label_pi_index(1), 1));
  CHECK(has_part(parts, label_T_signs(1, -1, -1), 1));
  CHECK(has_part(parts, label_T_signs(-1, 1, -1), 1));
}

TEST_CASE("decomposition is invariant under change of basis") {
  HopfPtr H = build_h2n2(3);
  Representation pi = build_representation(H, label_pi_cyc(1, 2));
  Representation conj = pi;
  // conjugate by P = [[1,1],[0,1]]
  CycMatrix P(2, 2), Pinv(2, 2);
  P.at(0, 0) = P.at(0, 1) = P.at(1, 1) = CycNum::from_long(1, 6);
  Pinv.at(0, 0) = Pinv.at(1, 1) = CycNum::from_long(1, 6);
  Pinv.at(0, 1) = CycNum::from_long(-1, 6);
  for (CycMatrix& M : conj.gen_images) M = P * M * Pinv;
  conj.label.reset();
  auto parts = decompose_multiset(conj);
  REQUIRE(parts.size() == 1);
  CHECK(has_part(parts, label_pi_cyc(1, 2), 1));
}

TEST_CASE("convenience labels build and auto-expand under decompose") {
  HopfPtr H = build_h2n2(3);
  Representation red = build_representation(H, label_pi_cyc(2, 2));
  auto parts = decompose_multiset(red);
  REQUIRE(parts.size() == 2);
  CHECK(has_part(parts, label_T_cyc(2, 1), 1));
  CHECK(has_part(parts, label_T_cyc(2, -1), 1));

  HopfPtr A = build_a4m(4);
  Representation bd = build_representation(A, label_pi_index_sign(2, -1));
  auto bparts = decompose_multiset(bd);
  REQUIRE(bparts.size() == 2);
  CHECK(has_part(bparts, label_T_signs(1, -1, -1), 1));
  CHECK(has_part(bparts, label_T_signs(-1, 1, -1), 1));
}

TEST_CASE("witnesses are injective module maps") {
  HopfPtr B = build_b4m(4);
  Representation p1 = build_representation(B, label_pi_index(1));
  Representation p3 = build_representation(B, label_pi_index(3));
  Representation t = tensor_rep(p1, p3);
  for (const DecompositionPart& part : decompose(t)) {
    Representation S = build_representation(B, part.label);
    for (const CycMatrix& M : part.witnesses) {
      CHECK(rank(M) == static_cast<size_t>(part.label.dim()));
      // intertwining identity M rho_S(g) = rho(g) M
      for (size_t g = 0; g < 3; ++g)
        CHECK(M * S.gen_images[g] == t.gen_images[g] * M);
    }
  }
}

TEST_CASE("wreath-product group algebra has matching catalog") {
  HopfPtr G = build_group_algebra(GroupKind::WreathZnS2, 3);
  std::vector<Representation> cat = irreducible_catalog(G);
  CHECK(cat.size() == 9);
  // z acts by the plain swap in every two-dim
  for (const Representation& r : cat) {
    if (r.dim() != 2) continue;
    CHECK(r.gen_images[2].at(0, 1) == CycNum::from_long(1, 6));
    CHECK(r.gen_images[2].at(1, 0) == CycNum::from_long(1, 6));
  }
}

TEST_CASE("direct sums decompose as the union of their parts") {
  HopfPtr H = build_h2n2(3);
  Representation a = build_representation(H, label_pi_cyc(0, 1));
  Representation b = build_representation(H, label_T_cyc(2, -1));
  auto parts = decompose_multiset(direct_sum(a, b));
  CHECK(parts.size() == 2);
  CHECK(has_part(parts, label_pi_cyc(0, 1), 1));
  CHECK(has_part(parts, label_T_cyc(2, -1), 1));
}

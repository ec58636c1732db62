#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hopf/linalg.hpp"

using namespace hopf;

namespace {

CycMatrix random_matrix(std::mt19937& rng, size_t r, size_t c, unsigned long L) {
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<long> ex(0, static_cast<long>(L) - 1);
  CycMatrix M(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      M.at(i, j) = CycNum::from_long(val(rng), L) * CycNum::root_of_unity(L, ex(rng));
  return M;
}

}  // namespace

TEST_CASE("kernel vectors are actual kernel vectors") {
  std::mt19937 rng(42);
  for (int rep = 0; rep < 25; ++rep) {
    size_t r = 1 + rep % 5, c = 1 + (rep * 3) % 6;
    CycMatrix M = random_matrix(rng, r, c, 12);
    CycMatrix K = kernel_basis(M);
    CHECK(K.rows() + rank(M) == c);
    for (size_t i = 0; i < K.rows(); ++i) {
      std::vector<CycNum> v(c, CycNum::from_long(0));
      for (size_t j = 0; j < c; ++j) v[j] = K.at(i, j);
      std::vector<CycNum> Mv = M.apply(v);
      for (const CycNum& x : Mv) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("specific kernels over Q(i) and Q(zeta_3)") {
  CycNum i = CycNum::root_of_unity(4, 1);
  CycMatrix M(1, 2);
  M.at(0, 0) = CycNum::from_long(1, 4);
  M.at(0, 1) = -i;
  CycMatrix K = kernel_basis(M);
  REQUIRE(K.rows() == 1);
  // kernel of (1, -i) is spanned by (i, 1)
  CHECK(K.at(0, 0) * CycNum::from_long(1, 4) == K.at(0, 1) * i);

  CycNum w = CycNum::root_of_unity(3, 1);
  CycMatrix N(2, 2);
  N.at(0, 0) = CycNum::from_long(1, 3);
  N.at(0, 1) = w;
  N.at(1, 0) = w * w;
  N.at(1, 1) = CycNum::from_long(1, 3);
  CHECK(rank(N) == 1);  // second row is w^2 times the first
}

TEST_CASE("rref produces reduced echelon form") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 15; ++rep) {
    CycMatrix M = random_matrix(rng, 4, 5, 8);
    CycMatrix R = M;
    std::vector<size_t> piv = rref(R);
    // pivots are 1 and their columns are cleared elsewhere
    for (size_t k = 0; k < piv.size(); ++k) {
      CHECK(R.at(k, piv[k]) == CycNum::from_long(1));
      for (size_t r2 = 0; r2 < R.rows(); ++r2) {
        if (r2 != k) CHECK(R.at(r2, piv[k]).is_zero());
      }
    }
    CHECK(rank(M) == piv.size());
  }
}

TEST_CASE("solve returns a solution when consistent and throws otherwise") {
  std::mt19937 rng(99);
  for (int rep = 0; rep < 15; ++rep) {
    CycMatrix M = random_matrix(rng, 3, 4, 6);
    std::vector<CycNum> x0;
    for (size_t j = 0; j < 4; ++j) x0.push_back(CycNum::from_long((rep + static_cast<int>(j)) % 5 - 2, 6));
    std::vector<CycNum> b = M.apply(x0);
    std::vector<CycNum> x = solve(M, b);
    std::vector<CycNum> b2 = M.apply(x);
    for (size_t i = 0; i < b.size(); ++i) CHECK(b[i] == b2[i]);
  }
  // inconsistent: 0*x = 1
  CycMatrix Z(1, 1);
  Z.at(0, 0) = CycNum::from_long(0);
  CHECK_THROWS_AS(solve(Z, {CycNum::from_long(1)}), std::runtime_error);
}

TEST_CASE("row space intersection via Zassenhaus") {
  // A spans {(1,0,0),(0,1,0)}, B spans {(0,1,0),(0,0,1)}: intersection is (0,1,0)
  CycMatrix A(2, 3), B(2, 3);
  A.at(0, 0) = CycNum::from_long(1);
  A.at(1, 1) = CycNum::from_long(1);
  B.at(0, 1) = CycNum::from_long(1);
  B.at(1, 2) = CycNum::from_long(1);
  CycMatrix I = row_space_intersection(A, B);
  REQUIRE(I.rows() == 1);
  CHECK(I.at(0, 0).is_zero());
  CHECK(!I.at(0, 1).is_zero());
  CHECK(I.at(0, 2).is_zero());

  // self-intersection preserves rank
  std::mt19937 rng(5);
  CycMatrix M = random_matrix(rng, 3, 5, 4);
  CHECK(row_space_intersection(M, M).rows() == rank(M));
}

TEST_CASE("kronecker product multiplies compatible shapes") {
  CycNum i = CycNum::root_of_unity(4, 1);
  CycMatrix A(2, 2), B(2, 2);
  A.at(0, 1) = CycNum::from_long(1, 4);
  A.at(1, 0) = i;
  B.at(0, 0) = i;
  B.at(1, 1) = -i;
  CycMatrix K = kron(A, B);
  REQUIRE(K.rows() == 4);
  REQUIRE(K.cols() == 4);
  CHECK(K.at(0, 2) == i);
  CHECK(K.at(1, 3) == -i);
  CHECK(K.at(2, 0) == i * i);
  CHECK(K.at(3, 1) == i * (-i));
  // (A kron B)(A' kron B') = AA' kron BB'
  std::mt19937 rng(11);
  CycMatrix A2 = random_matrix(rng, 2, 2, 4);
  CycMatrix B2 = random_matrix(rng, 2, 2, 4);
  CHECK(kron(A, B) * kron(A2, B2) == kron(A * A2, B * B2));
}

TEST_CASE("sparse elimination matches dense rank") {
  std::mt19937 rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    size_t r = 5, c = 7;
    CycMatrix M = random_matrix(rng, r, c, 8);
    std::vector<SparseVec> rows;
    for (size_t i = 0; i < r; ++i) {
      SparseVec v;
      for (size_t j = 0; j < c; ++j)
        if (!M.at(i, j).is_zero()) v.emplace_back(j, M.at(i, j));
      rows.push_back(std::move(v));
    }
    std::vector<SparseVec> ech = echelon_sparse(rows);
    CHECK(ech.size() == rank(M));

    CycMatrix ker = kernel_basis_sparse(rows, c);
    CHECK(ker.rows() + rank(M) == c);
    for (size_t kv = 0; kv < ker.rows(); ++kv) {
      // multiply every original row against the kernel vector
      for (size_t i = 0; i < r; ++i) {
        CycNum dot = CycNum::from_long(0, 8);
        for (size_t col = 0; col < c; ++col) dot += M.at(i, col) * ker.at(kv, col);
        CHECK(dot.is_zero());
      }
    }
  }
}

TEST_CASE("sparse axpy merges sorted vectors") {
  SparseVec x{{0, CycNum::from_long(1)}, {2, CycNum::from_long(3)}};
  SparseVec y{{1, CycNum::from_long(2)}, {2, CycNum::from_long(-3)}};
  SparseVec r = sparse_axpy(x, CycNum::from_long(1), y);
  REQUIRE(r.size() == 2);
  CHECK(r[0].first == 0);
  CHECK(r[1].first == 1);
  CHECK(r[1].second == CycNum::from_long(2));
}

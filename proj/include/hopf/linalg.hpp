#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hopf/cyclotomic.hpp"

namespace hopf {

// Dense matrix over the cyclotomic field, row major.
class CycMatrix {
 public:
  CycMatrix() : rows_(0), cols_(0) {}
  CycMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static CycMatrix identity(size_t n, unsigned long conductor = 1);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  CycNum& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const CycNum& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix scaled(const CycNum& c) const;
  CycMatrix transposed() const;
  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  std::vector<CycNum> apply(const std::vector<CycNum>& v) const;  // M v

 private:
  size_t rows_, cols_;
  std::vector<CycNum> a_;
};

// Kronecker product: (A tensor B)[iB.rows+k][jB.cols+l] = A[i][j] * B[k][l].
CycMatrix kron(const CycMatrix& A, const CycMatrix& B);

// In-place reduced row echelon form with deterministic pivoting (columns are
// processed left to right; the pivot is the first row, in current order, with
// a nonzero entry in the column).  Returns the pivot columns in order.
std::vector<size_t> rref(CycMatrix& M);

size_t rank(CycMatrix M);

// Basis of {v : M v = 0}; rows of the result are the basis vectors, in
// canonical reduced echelon form.  The basis has M.cols() - rank(M) rows.
CycMatrix kernel_basis(const CycMatrix& M);

// One solution x of M x = b; throws std::runtime_error("inconsistent system")
// if there is none.
std::vector<CycNum> solve(const CycMatrix& M, const std::vector<CycNum>& b);

// Basis of the intersection of the row spaces of A and B (Zassenhaus);
// rows of the result are the basis vectors, in reduced echelon form.
CycMatrix row_space_intersection(const CycMatrix& A, const CycMatrix& B);

// Sparse row vector: (column, coefficient) pairs sorted by column, no zeros.
using SparseVec = std::vector<std::pair<size_t, CycNum>>;

SparseVec sparse_axpy(const SparseVec& x, const CycNum& c, const SparseVec& y);  // x + c*y

// Kernel of the system whose rows are the given sparse vectors over ncols
// unknowns.  Same canonical output convention as kernel_basis.
CycMatrix kernel_basis_sparse(const std::vector<SparseVec>& rows, size_t ncols);

// Reduced echelon basis of the span of the given sparse rows.
std::vector<SparseVec> echelon_sparse(const std::vector<SparseVec>& rows);

}  // namespace hopf

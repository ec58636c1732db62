#include "hopf/linalg.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

namespace hopf {

CycMatrix CycMatrix::identity(size_t n, unsigned long conductor) {
  CycMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = CycNum::from_long(1, conductor);
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  assert(cols_ == o.rows_);
  CycMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const CycNum& x = at(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const CycNum& y = o.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) += x * y;
      }
    }
  return r;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  CycMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  CycMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

CycMatrix CycMatrix::scaled(const CycNum& c) const {
  CycMatrix r = *this;
  for (CycNum& x : r.a_) x *= c;
  return r;
}

CycMatrix CycMatrix::transposed() const {
  CycMatrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

bool CycMatrix::is_zero() const {
  for (const CycNum& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<CycNum> CycMatrix::apply(const std::vector<CycNum>& v) const {
  assert(v.size() == cols_);
  std::vector<CycNum> r(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] += at(i, j) * v[j];
    }
  return r;
}

CycMatrix kron(const CycMatrix& A, const CycMatrix& B) {
  CycMatrix r(A.rows() * B.rows(), A.cols() * B.cols());
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) {
      if (A.at(i, j).is_zero()) continue;
      for (size_t k = 0; k < B.rows(); ++k)
        for (size_t l = 0; l < B.cols(); ++l) {
          if (B.at(k, l).is_zero()) continue;
          r.at(i * B.rows() + k, j * B.cols() + l) = A.at(i, j) * B.at(k, l);
        }
    }
  return r;
}

std::vector<size_t> rref(CycMatrix& M) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < M.cols() && row < M.rows(); ++col) {
    size_t p = row;
    while (p < M.rows() && M.at(p, col).is_zero()) ++p;
    if (p == M.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < M.cols(); ++j) std::swap(M.at(p, j), M.at(row, j));
    CycNum inv = M.at(row, col).inverse();
    for (size_t j = col; j < M.cols(); ++j)
      if (!M.at(row, j).is_zero()) M.at(row, j) *= inv;
    for (size_t i = 0; i < M.rows(); ++i) {
      if (i == row || M.at(i, col).is_zero()) continue;
      CycNum f = M.at(i, col);
      for (size_t j = col; j < M.cols(); ++j) {
        if (M.at(row, j).is_zero()) continue;
        M.at(i, j) -= f * M.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t rank(CycMatrix M) { return rref(M).size(); }

CycMatrix kernel_basis(const CycMatrix& M) {
  CycMatrix R = M;
  std::vector<size_t> pivots = rref(R);
  std::vector<bool> is_pivot(M.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  size_t dim = M.cols() - pivots.size();
  CycMatrix K(dim, M.cols());
  size_t k = 0;
  for (size_t f = 0; f < M.cols(); ++f) {
    if (is_pivot[f]) continue;
    K.at(k, f) = CycNum::from_long(1);
    for (size_t i = 0; i < pivots.size(); ++i)
      if (!R.at(i, f).is_zero()) K.at(k, pivots[i]) = -R.at(i, f);
    ++k;
  }
  rref(K);  // canonical form
  return K;
}

std::vector<CycNum> solve(const CycMatrix& M, const std::vector<CycNum>& b) {
  assert(b.size() == M.rows());
  CycMatrix A(M.rows(), M.cols() + 1);
  for (size_t i = 0; i < M.rows(); ++i) {
    for (size_t j = 0; j < M.cols(); ++j) A.at(i, j) = M.at(i, j);
    A.at(i, M.cols()) = b[i];
  }
  std::vector<size_t> pivots = rref(A);
  if (!pivots.empty() && pivots.back() == M.cols())
    throw std::runtime_error("inconsistent system");
  std::vector<CycNum> x(M.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = A.at(i, M.cols());
  return x;
}

CycMatrix row_space_intersection(const CycMatrix& A, const CycMatrix& B) {
  assert(A.cols() == B.cols());
  size_t n = A.cols();
  CycMatrix Z(A.rows() + B.rows(), 2 * n);
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < n; ++j) {
      Z.at(i, j) = A.at(i, j);
      Z.at(i, n + j) = A.at(i, j);
    }
  for (size_t i = 0; i < B.rows(); ++i)
    for (size_t j = 0; j < n; ++j) Z.at(A.rows() + i, j) = B.at(i, j);
  rref(Z);
  // Rows whose left block vanished carry intersection vectors in the right block.
  std::vector<std::vector<CycNum>> inter;
  for (size_t i = 0; i < Z.rows(); ++i) {
    bool left_zero = true;
    bool right_zero = true;
    for (size_t j = 0; j < n && left_zero; ++j)
      if (!Z.at(i, j).is_zero()) left_zero = false;
    for (size_t j = 0; j < n && right_zero; ++j)
      if (!Z.at(i, n + j).is_zero()) right_zero = false;
    if (left_zero && !right_zero) {
      std::vector<CycNum> v(n);
      for (size_t j = 0; j < n; ++j) v[j] = Z.at(i, n + j);
      inter.push_back(std::move(v));
    }
  }
  CycMatrix R(inter.size(), n);
  for (size_t i = 0; i < inter.size(); ++i)
    for (size_t j = 0; j < n; ++j) R.at(i, j) = inter[i][j];
  rref(R);
  return R;
}

SparseVec sparse_axpy(const SparseVec& x, const CycNum& c, const SparseVec& y) {
  SparseVec r;
  r.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      r.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      CycNum v = c * y[j].second;
      if (!v.is_zero()) r.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      CycNum v = x[i].second + c * y[j].second;
      if (!v.is_zero()) r.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

namespace {

// Fully reduced sparse elimination: returns map pivot column -> row whose
// leading entry is 1 at that column and which is reduced against all other
// pivot rows.
std::map<size_t, SparseVec> sparse_eliminate(const std::vector<SparseVec>& rows) {
  std::map<size_t, SparseVec> piv;  // leading column -> normalized row
  for (const SparseVec& row0 : rows) {
    SparseVec row = row0;
    while (!row.empty()) {
      auto it = piv.find(row.front().first);
      if (it == piv.end()) break;
      row = sparse_axpy(row, -row.front().second, it->second);
    }
    if (row.empty()) continue;
    CycNum inv = row.front().second.inverse();
    for (auto& t : row) t.second *= inv;
    size_t lead = row.front().first;
    // Clear non-leading entries that sit on existing pivot columns.  Pivot
    // rows never contain other pivot columns, so one collected pass suffices.
    {
      std::vector<std::pair<size_t, CycNum>> hits;
      for (size_t i = 1; i < row.size(); ++i)
        if (piv.count(row[i].first)) hits.emplace_back(row[i].first, row[i].second);
      for (const auto& [c, coef] : hits) row = sparse_axpy(row, -coef, piv.at(c));
    }
    // Reduce existing pivot rows against the new one.
    for (auto& [c, prow] : piv) {
      (void)c;
      CycNum coef;
      bool found = false;
      for (const auto& t : prow)
        if (t.first == lead) {
          coef = t.second;
          found = true;
          break;
        }
      if (found) prow = sparse_axpy(prow, -coef, row);
    }
    piv.emplace(lead, std::move(row));
  }
  return piv;
}

}  // namespace

CycMatrix kernel_basis_sparse(const std::vector<SparseVec>& rows, size_t ncols) {
  std::map<size_t, SparseVec> piv = sparse_eliminate(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& [c, row] : piv) {
    (void)row;
    is_pivot[c] = true;
  }
  size_t dim = ncols - piv.size();
  CycMatrix K(dim, ncols);
  size_t k = 0;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    K.at(k, f) = CycNum::from_long(1);
    for (const auto& [c, row] : piv)
      for (const auto& t : row)
        if (t.first == f) K.at(k, c) = -t.second;
    ++k;
  }
  rref(K);
  return K;
}

std::vector<SparseVec> echelon_sparse(const std::vector<SparseVec>& rows) {
  std::map<size_t, SparseVec> piv = sparse_eliminate(rows);
  std::vector<SparseVec> out;
  out.reserve(piv.size());
  for (auto& [c, row] : piv) {
    (void)c;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace hopf

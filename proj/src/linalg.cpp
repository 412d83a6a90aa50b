#include "reflekt/linalg.hpp"

#include "reflekt/errors.hpp"

namespace reflekt {

CycVector canonicalize(CycVector v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const CycNumber scale = v[i].inverse();
    for (std::size_t j = i; j < v.size(); ++j) v[j] *= scale;
    break;
  }
  return v;
}

bool is_zero(const CycVector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

CycNumber dot(const CycVector& a, const CycVector& b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  CycNumber s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

CycMatrix::CycMatrix(std::size_t dim, unsigned conductor)
    : dim_(dim), conductor_(conductor), a_(dim * dim, CycNumber(Rational(0), conductor)) {}

CycMatrix CycMatrix::identity(std::size_t dim, unsigned conductor) {
  CycMatrix m(dim, conductor);
  for (std::size_t i = 0; i < dim; ++i) m.a_[i * dim + i] = CycNumber(Rational(1), conductor);
  return m;
}

CycMatrix CycMatrix::diagonal(const CycVector& entries) {
  unsigned conductor = 1;
  for (const auto& x : entries) conductor = lcm_conductor(conductor, x.conductor());
  CycMatrix m(entries.size(), conductor);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
  return m;
}

void CycMatrix::set(std::size_t i, std::size_t j, const CycNumber& x) {
  if (conductor_ % x.conductor() != 0) {
    throw ConductorMismatchError("entry conductor " + std::to_string(x.conductor()) +
                                 " does not divide matrix conductor " + std::to_string(conductor_));
  }
  a_[i * dim_ + j] = x.embed(conductor_);
}

CycMatrix CycMatrix::embed(unsigned conductor) const {
  CycMatrix m(dim_, conductor);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].embed(conductor);
  return m;
}

CycNumber CycMatrix::trace() const {
  CycNumber t(Rational(0), conductor_);
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

CycNumber CycMatrix::determinant() const {
  std::vector<CycVector> rows;
  for (std::size_t i = 0; i < dim_; ++i) rows.push_back(row(i));
  // Bareiss: the last pivot of a full-rank elimination is the determinant up
  // to the sign of the row permutation.
  int sign = 1;
  CycNumber prev(Rational(1), conductor_);
  for (std::size_t k = 0; k < dim_; ++k) {
    std::size_t p = k;
    while (p < dim_ && rows[p][k].is_zero()) ++p;
    if (p == dim_) return CycNumber(Rational(0), conductor_);
    if (p != k) {
      std::swap(rows[p], rows[k]);
      sign = -sign;
    }
    const CycNumber prev_inv = prev.inverse();
    for (std::size_t i = k + 1; i < dim_; ++i) {
      for (std::size_t j = k + 1; j < dim_; ++j) {
        rows[i][j] = (rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]) * prev_inv;
      }
      rows[i][k] = CycNumber(Rational(0), conductor_);
    }
    prev = rows[k][k];
  }
  return sign > 0 ? rows[dim_ - 1][dim_ - 1] : -rows[dim_ - 1][dim_ - 1];
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(dim_, conductor_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) t.a_[j * dim_ + i] = (*this)(i, j);
  }
  return t;
}

CycVector CycMatrix::row(std::size_t i) const {
  return CycVector(a_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                   a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_));
}

bool CycMatrix::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const CycNumber& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  }
  return true;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix product: dimension mismatch");
  const unsigned m = lcm_conductor(a.conductor_, b.conductor_);
  CycMatrix r(a.dim_, m);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t j = 0; j < a.dim_; ++j) {
      CycNumber s(Rational(0), m);
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const CycNumber& x = a(i, k);
        const CycNumber& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        s += x * y;
      }
      r.a_[i * a.dim_ + j] = s.embed(m);
    }
  }
  return r;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix difference: dimension mismatch");
  const unsigned m = lcm_conductor(a.conductor_, b.conductor_);
  CycMatrix r(a.dim_, m);
  for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = (a.a_[k] - b.a_[k]).embed(m);
  return r;
}

CycVector operator*(const CycMatrix& a, const CycVector& v) {
  if (v.size() != a.dim_) throw DomainError("matrix-vector product: dimension mismatch");
  CycVector out(a.dim_, CycNumber(Rational(0), a.conductor_));
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      if (a(i, k).is_zero() || v[k].is_zero()) continue;
      out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

std::size_t CycMatrix::hash() const {
  std::size_t h = dim_;
  for (const auto& x : a_) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

EchelonForm bareiss_echelon(std::vector<CycVector> rows, std::size_t cols) {
  EchelonForm out;
  const std::size_t nrows = rows.size();
  std::size_t r = 0;
  CycNumber prev(1L);
  for (std::size_t col = 0; col < cols && r < nrows; ++col) {
    std::size_t p = r;
    while (p < nrows && rows[p][col].is_zero()) ++p;
    if (p == nrows) continue;
    std::swap(rows[p], rows[r]);
    const CycNumber prev_inv = prev.inverse();
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const CycNumber lead = rows[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        rows[i][j] = (rows[r][col] * rows[i][j] - lead * rows[r][j]) * prev_inv;
      }
    }
    prev = rows[r][col];
    out.pivot_cols.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

namespace {

std::vector<CycVector> matrix_rows(const CycMatrix& a) {
  std::vector<CycVector> rows;
  rows.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.row(i));
  return rows;
}

std::vector<CycVector> kernel(const CycMatrix& a) {
  const std::size_t n = a.dim();
  EchelonForm ech = bareiss_echelon(matrix_rows(a), n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<CycVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    CycVector v(n, CycNumber(Rational(0), a.conductor()));
    v[free] = CycNumber(Rational(1), a.conductor());
    for (std::size_t r = ech.rows.size(); r-- > 0;) {
      const std::size_t pc = ech.pivot_cols[r];
      CycNumber s(Rational(0), a.conductor());
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (!ech.rows[r][j].is_zero() && !v[j].is_zero()) s += ech.rows[r][j] * v[j];
      }
      v[pc] = -s / ech.rows[r][pc];
    }
    basis.push_back(canonicalize(std::move(v)));
  }
  return basis;
}

}  // namespace

std::size_t rank(const CycMatrix& a) { return bareiss_echelon(matrix_rows(a), a.dim()).rows.size(); }

std::vector<CycVector> eigen_kernel(const CycMatrix& a, const CycNumber& lambda) {
  CycMatrix shifted = a.embed(lcm_conductor(a.conductor(), lambda.conductor()));
  for (std::size_t i = 0; i < a.dim(); ++i) shifted.set(i, i, shifted(i, i) - lambda);
  return kernel(shifted);
}

std::size_t fixed_space_dim(const CycMatrix& a) {
  return a.dim() - rank(a - CycMatrix::identity(a.dim(), a.conductor()));
}

std::vector<CycVector> row_space(const CycMatrix& a) {
  EchelonForm ech = bareiss_echelon(matrix_rows(a), a.dim());
  std::vector<CycVector> out;
  for (auto& r : ech.rows) out.push_back(canonicalize(std::move(r)));
  return out;
}

std::vector<CycVector> column_space(const CycMatrix& a) { return row_space(a.transpose()); }

}  // namespace reflekt

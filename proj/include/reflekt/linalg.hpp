#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "reflekt/cyclotomic.hpp"

namespace reflekt {

using CycVector = std::vector<CycNumber>;

/// Scales `v` so its first nonzero entry is 1. Zero vectors are returned as-is.
CycVector canonicalize(CycVector v);
bool is_zero(const CycVector& v);
/// Bilinear pairing sum a_i b_i (no conjugation).
CycNumber dot(const CycVector& a, const CycVector& b);

/// Dense square matrix over Q(zeta_M); all entries share one conductor.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t dim, unsigned conductor);
  static CycMatrix identity(std::size_t dim, unsigned conductor);
  static CycMatrix diagonal(const CycVector& entries);

  std::size_t dim() const { return dim_; }
  unsigned conductor() const { return conductor_; }

  const CycNumber& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  /// Writes an entry, embedding it at the matrix conductor.
  void set(std::size_t i, std::size_t j, const CycNumber& x);

  CycMatrix embed(unsigned conductor) const;
  CycNumber trace() const;
  CycNumber determinant() const;
  CycMatrix transpose() const;
  CycVector row(std::size_t i) const;
  bool is_identity() const;

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
  friend CycVector operator*(const CycMatrix& a, const CycVector& v);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b) { return a.a_ == b.a_; }

  std::size_t hash() const;

 private:
  std::size_t dim_ = 0;
  unsigned conductor_ = 1;
  std::vector<CycNumber> a_;
};

/// Row-echelon data from fraction-free elimination.
struct EchelonForm {
  std::vector<CycVector> rows;          // nonzero rows, in echelon order
  std::vector<std::size_t> pivot_cols;  // pivot column per row
};

/// Bareiss fraction-free elimination of a (rows x cols) matrix.
EchelonForm bareiss_echelon(std::vector<CycVector> rows, std::size_t cols);

std::size_t rank(const CycMatrix& a);
/// Exact basis of ker(A - lambda I), each vector canonicalized.
std::vector<CycVector> eigen_kernel(const CycMatrix& a, const CycNumber& lambda);
/// dim ker(A - I).
std::size_t fixed_space_dim(const CycMatrix& a);
/// Canonical basis of the row space of `a`.
std::vector<CycVector> row_space(const CycMatrix& a);
/// Canonical basis of the column space (image) of `a`.
std::vector<CycVector> column_space(const CycMatrix& a);

}  // namespace reflekt

template <>
struct std::hash<reflekt::CycMatrix> {
  std::size_t operator()(const reflekt::CycMatrix& m) const noexcept { return m.hash(); }
};

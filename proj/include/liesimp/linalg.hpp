#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liesimp/field.hpp"

namespace liesimp {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const FieldSpec& f);
bool vec_is_zero(const Vec& v);
/// target += c * source (componentwise; sizes must match).
void vec_axpy(Vec& target, const Scalar& c, const Vec& source);
Scalar dot(const Vec& a, const Vec& b);

/// Dense matrix over an exact field.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f);
  static Matrix identity(std::size_t n, const FieldSpec& f);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, const FieldSpec& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Vec row(std::size_t i) const;
  Matrix transposed() const;
  /// Matrix * column vector.
  Vec apply(const Vec& x) const;
  Scalar trace() const;
  /// Flattened row-major entries (used for Krylov-style dependency searches).
  const Vec& flat() const { return entries_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& c) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_, cols_;
  FieldSpec field_;
  Vec entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by Gauss-Jordan elimination.  Pivot choice is
/// deterministic: scan columns left to right, take the first row with a
/// nonzero entry at or below the current pivot row.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

struct SpanMembership {
  bool in_span = false;
  /// Coefficients over the given basis vectors (free positions get 0);
  /// present exactly when in_span.  The recombination is re-checked exactly
  /// before returning.
  std::optional<std::vector<Scalar>> coefficients;
};

/// Does target lie in the span of the given vectors?  All vectors must share
/// the length of target; throws ValidationError on a dimension mismatch.
SpanMembership in_span(const Vec& target, const std::vector<Vec>& basis, const FieldSpec& f);

/// Basis of {x : m x = 0}, one vector per free column, echelonized order.
std::vector<Vec> nullspace_basis(const Matrix& m);

/// A growing subspace of K^n whose basis is kept in reduced row echelon form
/// at all times, so two RowSpaces describe the same subspace iff their bases
/// are equal vector-by-vector.
class RowSpace {
 public:
  RowSpace(std::size_t ambient_dim, const FieldSpec& f);

  /// Insert a vector; returns true iff the dimension grew.
  bool insert(Vec v);
  bool contains(const Vec& v) const;
  /// Coordinates of v over basis(); nullopt when v is outside the span.
  std::optional<Vec> coordinates(const Vec& v) const;

  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const FieldSpec& field() const { return field_; }

  /// Two RowSpaces are equal iff they describe the same subspace; the
  /// reduced-echelon basis is canonical, so this is plain basis equality.
  friend bool operator==(const RowSpace& a, const RowSpace& b) {
    return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.rows_ == b.rows_;
  }

 private:
  Vec reduce(Vec v) const;
  std::size_t ambient_;
  FieldSpec field_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace liesimp

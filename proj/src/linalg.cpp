#include "liesimp/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace liesimp {

Vec zero_vec(std::size_t n, const FieldSpec& f) { return Vec(n, Scalar::zero(f)); }

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void vec_axpy(Vec& target, const Scalar& c, const Vec& source) {
  if (target.size() != source.size()) throw ValidationError("vector length mismatch in axpy");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < target.size(); ++i) target[i] += c * source[i];
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ValidationError("vector length mismatch in dot");
  if (a.empty()) throw ValidationError("dot of empty vectors has no field");
  Scalar acc = Scalar::zero(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f), entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, const FieldSpec& f) {
  Matrix m(rows.size(), cols, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ValidationError("row length mismatch in Matrix::from_rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw ValidationError("dimension mismatch in Matrix::apply");
  Vec y = zero_vec(rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw ValidationError("trace of a non-square matrix");
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) acc += at(i, i);
  return acc;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || !(a.field_ == b.field_)) throw ValidationError("shape/field mismatch in matrix product");
  Matrix c(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_))
    throw ValidationError("shape/field mismatch in matrix sum");
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.scaled(Scalar::one(a.field()).negated()); }

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& e : m.entries_) e *= c;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.entries_ == b.entries_;
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    std::size_t sel = r.rows();
    for (std::size_t i = pivot_row; i < r.rows(); ++i) {
      if (!r.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == r.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(pivot_row, j));
    const Scalar inv = r.at(pivot_row, col).inverse();
    for (std::size_t j = col; j < r.cols(); ++j) r.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == pivot_row || r.at(i, col).is_zero()) continue;
      const Scalar factor = r.at(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r.at(i, j) -= factor * r.at(pivot_row, j);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_columns.size(); }

SpanMembership in_span(const Vec& target, const std::vector<Vec>& basis, const FieldSpec& f) {
  const std::size_t n = target.size();
  for (const Vec& b : basis)
    if (b.size() != n) throw ValidationError("dimension mismatch in in_span");
  // Columns: the candidate basis vectors, then the target.
  Matrix aug(n, basis.size() + 1, f);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) aug.at(i, j) = basis[j][i];
  for (std::size_t i = 0; i < n; ++i) aug.at(i, basis.size()) = target[i];
  const RrefResult rr = rref(aug);
  const bool target_pivot =
      std::find(rr.pivot_columns.begin(), rr.pivot_columns.end(), basis.size()) != rr.pivot_columns.end();
  if (target_pivot) return {false, std::nullopt};
  std::vector<Scalar> coeffs(basis.size(), Scalar::zero(f));
  for (std::size_t k = 0; k < rr.pivot_columns.size(); ++k) coeffs[rr.pivot_columns[k]] = rr.reduced.at(k, basis.size());
  // Exact recombination check: the certificate must replay to the target.
  Vec recon = zero_vec(n, f);
  for (std::size_t j = 0; j < basis.size(); ++j) vec_axpy(recon, coeffs[j], basis[j]);
  if (recon != target) throw InvariantBreach("in_span certificate failed exact recombination");
  return {true, std::move(coeffs)};
}

std::vector<Vec> nullspace_basis(const Matrix& m) {
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<Vec> result;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec x = zero_vec(m.cols(), m.field());
    x[j] = Scalar::one(m.field());
    for (std::size_t k = 0; k < rr.pivot_columns.size(); ++k) x[rr.pivot_columns[k]] = rr.reduced.at(k, j).negated();
    result.push_back(std::move(x));
  }
  return result;
}

RowSpace::RowSpace(std::size_t ambient_dim, const FieldSpec& f) : ambient_(ambient_dim), field_(f) {}

Vec RowSpace::reduce(Vec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = v[pivots_[k]];
    if (!c.is_zero()) vec_axpy(v, c.negated(), rows_[k]);
  }
  return v;
}

bool RowSpace::insert(Vec v) {
  if (v.size() != ambient_) throw ValidationError("dimension mismatch in RowSpace::insert");
  v = reduce(std::move(v));
  std::size_t piv = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (!v[j].is_zero()) {
      piv = j;
      break;
    }
  }
  if (piv == ambient_) return false;
  const Scalar inv = v[piv].inverse();
  for (auto& e : v) e *= inv;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = rows_[k][piv];
    if (!c.is_zero()) vec_axpy(rows_[k], c.negated(), v);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool RowSpace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw ValidationError("dimension mismatch in RowSpace::contains");
  return vec_is_zero(reduce(v));
}

std::optional<Vec> RowSpace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw ValidationError("dimension mismatch in RowSpace::coordinates");
  Vec rem = v;
  Vec coef;
  coef.reserve(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = rem[pivots_[k]];
    coef.push_back(c);
    if (!c.is_zero()) vec_axpy(rem, c.negated(), rows_[k]);
  }
  if (!vec_is_zero(rem)) return std::nullopt;
  return coef;
}

}  // namespace liesimp

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace syzygy {

using Rational = mpq_class;

// Dense matrix of exact rationals, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  QMatrix transpose() const;
  QMatrix row_block(std::size_t first, std::size_t count) const;
  QMatrix col_block(std::size_t first, std::size_t count) const;
  QMatrix select_cols(const std::vector<std::size_t>& cols) const;
  Rational trace() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& s);

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(const Rational& s, QMatrix a) { return a *= s; }
  friend bool operator==(const QMatrix& a, const QMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix vstack(const QMatrix& top, const QMatrix& bottom);
QMatrix hstack(const QMatrix& left, const QMatrix& right);
QMatrix block_diagonal(const std::vector<QMatrix>& blocks);
QMatrix power(const QMatrix& m, unsigned exponent);

// Reduced row echelon form; pivots[k] is the pivot column of row k.
struct Echelon {
  QMatrix rref;
  std::vector<std::size_t> pivots;
};
Echelon row_reduce(const QMatrix& m);

std::size_t rank(const QMatrix& m);
// Rows form a basis of {x : m x = 0}.
QMatrix kernel_basis(const QMatrix& m);
// True iff every row of a lies in the row space of b. Throws DimensionMismatch.
bool rowspace_contains(const QMatrix& a, const QMatrix& b);
// Columns form a basis of the column space (a subset of the columns of m).
QMatrix column_basis(const QMatrix& m);
// Columns form a basis of a complement of span(sub) inside Q^n, chosen among unit vectors.
QMatrix complement_basis(const QMatrix& sub, std::size_t n);
std::optional<QMatrix> inverse(const QMatrix& m);
bool is_nilpotent(const QMatrix& m);

// Coefficients c_0..c_n of det(t I - m), lowest degree first.
std::vector<Rational> charpoly(const QMatrix& m);
// Distinct rational roots of a polynomial (coefficients lowest degree first).
// Returns nullopt if the integer coefficients are too large to factor by trial division.
std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& coeffs);

// Coordinates with respect to a basis of a subspace given by the columns of `basis`.
class SubspaceCoords {
 public:
  SubspaceCoords() = default;
  explicit SubspaceCoords(QMatrix basis);
  const QMatrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.cols(); }
  // Coordinates of the columns of v; assumes they lie in the subspace.
  QMatrix coords(const QMatrix& v) const;
  bool contains(const QMatrix& v) const;

 private:
  QMatrix basis_;
  std::vector<std::size_t> rows_;
  QMatrix inverse_;
};

// Incrementally maintained reduced row echelon form of sparse rows.
class SparseEchelon {
 public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column, no zeros

  explicit SparseEchelon(std::size_t cols);

  // Adds a row; returns true if the rank grew.
  bool insert(const Row& row);
  // Reduces a row against the current rows.
  Row reduce(const Row& row) const;
  bool contains(const Row& row) const { return reduce(row).empty(); }

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Basis of the right null space, one free column per vector.
  std::vector<Row> kernel_basis() const;

 private:
  Row reduce_impl(const Row& row) const;

  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;  // column -> row index or -1
  mutable std::vector<Rational> work_;
  mutable std::vector<char> touched_;
};

}  // namespace syzygy

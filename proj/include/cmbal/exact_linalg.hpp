#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmbal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q > 0 (integers are written "p/1").
std::string to_string(const Rational& r);
/// Accepts "p/q" or "p"; throws InputError otherwise.
Rational parse_rational(const std::string& text);

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// The block with top-left corner (r0, c0).
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const RationalMatrix& m);
  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a);
  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by Bareiss fraction-free elimination (rows are first scaled to integers).
std::size_t rank(const RationalMatrix& m);
/// Determinant by Bareiss elimination; the matrix must be square.
Rational determinant(const RationalMatrix& m);
/// nullopt for singular matrices.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Sparse integer row: (column, nonzero value) pairs with increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, BigInt>>;

/// Clears denominators of a rational sparse row (same row space).
SparseRow integer_row(const std::vector<std::pair<std::size_t, Rational>>& row);

/// Incremental row echelon form over the integers.
///
/// Rows are reduced fraction-free against the stored pivots (r <- p*r - c*q)
/// and divided by their content, so entries stay integral and small. The
/// leading column of each stored row is distinct; pivots are the leading
/// columns of the row space in the given column order.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t num_columns) : pivots_(num_columns) {}

  /// Returns true if the row enlarged the row space.
  bool insert(SparseRow row);
  std::size_t rank() const { return rank_; }
  bool is_pivot(std::size_t column) const { return !pivots_[column].empty(); }
  std::vector<std::size_t> pivot_columns() const;

 private:
  std::vector<SparseRow> pivots_;
  std::size_t rank_ = 0;
};

}  // namespace cmbal

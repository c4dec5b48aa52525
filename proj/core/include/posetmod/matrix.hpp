#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "posetmod/field.hpp"

namespace posetmod {

/// Dense matrix with exact entries over a fixed Field.
///
/// Row-major storage. All binary operations require both operands to share
/// the same field and throw FieldMismatch otherwise.
class Matrix {
public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Builds a matrix from integer rows (reduced into the field).
  static Matrix from_rows(Field field, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { at(r, c) = field_.from_int(v); }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix scaled(Scalar s) const;

  /// Horizontal and vertical concatenation. An operand with zero extent in
  /// the concatenated direction contributes nothing.
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

private:
  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row-echelon form with the pivot columns used to reach it.
///
/// Pivoting is deterministic: columns are scanned left to right and the
/// lowest-index row with a nonzero entry becomes the pivot row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

Echelon rank_factor(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of the nullspace as the columns of a cols(m) x k matrix, one
/// column per free variable in increasing column order.
Matrix kernel_basis(const Matrix& m);

/// Independent columns spanning the column space (the pivot columns of m).
Matrix image_basis(const Matrix& m);

/// Solves a * x = b for x. Returns nullopt when some column of b lies
/// outside the column space of a.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Quotient of the target space of `a` by its column space.
///
/// `projection` is c x rows(a), surjective, with kernel exactly col(a).
/// `section` is rows(a) x c with projection * section = identity, built
/// from standard basis vectors chosen greedily by index.
struct Cokernel {
  Matrix projection;
  Matrix section;
};
Cokernel cokernel(const Matrix& a);

/// A basis (as columns) extending the columns of `independent` to all of
/// k^n is formed by appending standard vectors; returns the appended indices.
std::vector<std::size_t> complement_indices(const Matrix& independent);

}  // namespace posetmod

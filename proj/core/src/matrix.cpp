#include "posetmod/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace posetmod {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_rows(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (auto& r : rows) v.emplace_back(r);
  return from_rows(field, v);
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (s.num != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::column(std::size_t c) const { return select_columns({c}); }

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix m(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) m.at(r, j) = at(r, cols[j]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix m(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m.at(i, c) = at(rows[i], c);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  Matrix m(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = at(r0 + r, c0 + c);
  return m;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x = field_.mul(x, s);
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  Field::require_same(a.field_, b.field_);
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row counts differ");
  Matrix m(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) m.at(r, a.cols_ + c) = b.at(r, c);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  Field::require_same(a.field_, b.field_);
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column counts differ");
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) m.at(a.rows_ + r, c) = b.at(r, c);
  return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  Field::require_same(a.field_, b.field_);
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) m.at(a.rows_ + r, a.cols_ + c) = b.at(r, c);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Field::require_same(a.field_, b.field_);
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
  const Field& f = a.field_;
  Matrix m(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.num == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b.at(k, j);
        if (y.num == 0) continue;
        m.at(i, j) = f.add(m.at(i, j), f.mul(x, y));
      }
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Field::require_same(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Field::require_same(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  Field::require_same(a.field_, b.field_);
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << field_.format(at(r, c));
  }
  os << "] (" << rows_ << "x" << cols_ << ")";
  return os.str();
}

Echelon rank_factor(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && Field::is_zero(a.at(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(p, c), a.at(row, c));
    Scalar inv = f.inv(a.at(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) = f.mul(a.at(row, c), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      Scalar factor = a.at(r, col);
      if (Field::is_zero(factor)) continue;
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return rank_factor(m).rank();
}

Matrix kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  Echelon e = rank_factor(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(f, m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    k.at(fc, j) = f.one();
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) k.at(e.pivot_cols[i], j) = f.neg(e.reduced.at(i, fc));
  }
  return k;
}

Matrix image_basis(const Matrix& m) {
  if (m.empty()) return Matrix(m.field(), m.rows(), 0);
  return m.select_columns(rank_factor(m).pivot_cols);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  Field::require_same(a.field(), b.field());
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row counts differ");
  const Field& f = a.field();
  Matrix aug = Matrix::hstack(a, b);
  Echelon e = rank_factor(aug);
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
    std::size_t pc = e.pivot_cols[i];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(pc, j) = e.reduced.at(i, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::vector<std::size_t> complement_indices(const Matrix& independent) {
  Matrix aug = Matrix::hstack(independent, Matrix::identity(independent.field(), independent.rows()));
  Echelon e = rank_factor(aug);
  std::vector<std::size_t> out;
  for (auto pc : e.pivot_cols)
    if (pc >= independent.cols()) out.push_back(pc - independent.cols());
  return out;
}

Cokernel cokernel(const Matrix& a) {
  const Field& f = a.field();
  Matrix basis = image_basis(a);
  std::vector<std::size_t> comp = complement_indices(basis);
  Matrix section(f, a.rows(), comp.size());
  for (std::size_t j = 0; j < comp.size(); ++j) section.at(comp[j], j) = f.one();
  Matrix full = Matrix::hstack(basis, section);
  Matrix inv = *inverse(full);
  Matrix projection = inv.block(basis.cols(), 0, comp.size(), a.rows());
  return {std::move(projection), std::move(section)};
}

}  // namespace posetmod

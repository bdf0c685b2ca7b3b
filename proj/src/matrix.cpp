#include "mh/matrix.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "mh/error.hpp"

namespace mh {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in product");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Integer& b = other(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("dimension mismatch in sum");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const { return *this + other.scaled(-1); }

IntMatrix IntMatrix::scaled(const Integer& factor) const {
  IntMatrix out = *this;
  for (auto& v : out.data_) v *= factor;
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& other) const {
  if (rows_ != other.rows_ && cols_ != 0 && other.cols_ != 0) throw std::invalid_argument("hstack row mismatch");
  std::size_t rows = cols_ == 0 ? other.rows_ : rows_;
  IntMatrix out(rows, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  IntMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  }
  return out;
}

IntMatrix IntMatrix::rows_range(std::size_t first, std::size_t count) const {
  IntMatrix out(count, cols_);
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Integer& s = (*this)(source, c);
    if (s != 0) (*this)(target, c) += factor * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& s = (*this)(r, source);
    if (s != 0) (*this)(r, target) += factor * s;
  }
}

SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
  SparseIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, 1);
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& dense) {
  SparseIntMatrix m(dense.rows(), dense.cols());
  for (std::size_t r = 0; r < dense.rows(); ++r) {
    for (std::size_t c = 0; c < dense.cols(); ++c) {
      if (dense(r, c) != 0) m.data_[r].emplace(c, dense(r, c));
    }
  }
  return m;
}

std::size_t SparseIntMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& row : data_) total += row.size();
  return total;
}

void SparseIntMatrix::add(std::size_t r, std::size_t c, const Integer& value) {
  if (r >= rows() || c >= cols_) throw std::out_of_range("sparse matrix index out of range");
  if (value == 0) return;
  auto& row = data_[r];
  auto [it, inserted] = row.try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) row.erase(it);
  }
}

void SparseIntMatrix::set(std::size_t r, std::size_t c, const Integer& value) {
  if (r >= rows() || c >= cols_) throw std::out_of_range("sparse matrix index out of range");
  if (value == 0) {
    data_[r].erase(c);
  } else {
    data_[r][c] = value;
  }
}

Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  auto it = data_.at(r).find(c);
  return it == data_[r].end() ? Integer(0) : it->second;
}

std::vector<SparseIntMatrix::Entry> SparseIntMatrix::entries() const {
  std::vector<Entry> out;
  for (std::size_t r = 0; r < data_.size(); ++r) {
    for (const auto& [c, v] : data_[r]) out.push_back({r, c, v});
  }
  return out;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& other) const {
  if (cols_ != other.rows()) throw std::invalid_argument("dimension mismatch in sparse product");
  SparseIntMatrix out(rows(), other.cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& [k, a] : data_[r]) {
      for (const auto& [c, b] : other.data_[k]) out.add(r, c, a * b);
    }
  }
  return out;
}

SparseIntMatrix SparseIntMatrix::operator+(const SparseIntMatrix& other) const {
  if (rows() != other.rows() || cols_ != other.cols_) throw std::invalid_argument("dimension mismatch in sparse sum");
  SparseIntMatrix out = *this;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : other.data_[r]) out.add(r, c, v);
  }
  return out;
}

SparseIntMatrix SparseIntMatrix::operator-(const SparseIntMatrix& other) const { return *this + other.scaled(-1); }

SparseIntMatrix SparseIntMatrix::scaled(const Integer& factor) const {
  SparseIntMatrix out(rows(), cols_);
  if (factor == 0) return out;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : data_[r]) out.data_[r].emplace(c, v * factor);
  }
  return out;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix out(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : data_[r]) out.data_[c].emplace(r, v);
  }
  return out;
}

bool SparseIntMatrix::is_zero() const {
  for (const auto& row : data_) {
    if (!row.empty()) return false;
  }
  return true;
}

bool SparseIntMatrix::operator==(const SparseIntMatrix& other) const {
  return cols_ == other.cols_ && data_ == other.data_;
}

std::vector<Integer> SparseIntMatrix::apply(const std::vector<Integer>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Integer> y(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
  }
  return y;
}

SparseIntMatrix SparseIntMatrix::hstack(const SparseIntMatrix& other) const {
  if (rows() != other.rows()) throw std::invalid_argument("hstack row mismatch");
  SparseIntMatrix out = *this;
  out.cols_ = cols_ + other.cols_;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : other.data_[r]) out.data_[r].emplace(cols_ + c, v);
  }
  return out;
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix out(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : data_[r]) out(r, c) = v;
  }
  return out;
}

void SparseIntMatrix::write_coordinate(std::ostream& out) const {
  out << rows() << ' ' << cols_ << ' ' << nnz() << '\n';
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : data_[r]) out << r << ' ' << c << ' ' << v.get_str() << '\n';
  }
}

SparseIntMatrix SparseIntMatrix::read_coordinate(std::istream& in) {
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(in >> rows >> cols >> nnz)) throw ParseError("missing 'rows cols nnz' header", 1);
  SparseIntMatrix m(rows, cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r = 0, c = 0;
    std::string value;
    if (!(in >> r >> c >> value)) throw ParseError("truncated entry list", k + 2);
    if (r >= rows || c >= cols) throw ParseError("entry index out of range", k + 2);
    m.add(r, c, Integer(value, 10));
  }
  return m;
}

}  // namespace mh

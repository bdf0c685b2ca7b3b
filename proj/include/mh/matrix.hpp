#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <vector>

#include "mh/ext_dist.hpp"

namespace mh {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix scaled(const Integer& factor) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& other) const = default;
  bool is_zero() const;

  std::vector<Integer> column(std::size_t c) const;
  /// Columns of this followed by columns of `other` (same row count).
  IntMatrix hstack(const IntMatrix& other) const;
  IntMatrix columns(std::size_t first, std::size_t count) const;
  IntMatrix rows_range(std::size_t first, std::size_t count) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Sparse integer matrix; stores no zero entries.
class SparseIntMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Integer value;
  };

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static SparseIntMatrix identity(std::size_t n);
  static SparseIntMatrix from_dense(const IntMatrix& dense);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  /// Adds `value` to entry (r, c), erasing it if the sum is zero.
  void add(std::size_t r, std::size_t c, const Integer& value);
  void set(std::size_t r, std::size_t c, const Integer& value);
  Integer at(std::size_t r, std::size_t c) const;
  const std::map<std::size_t, Integer>& row(std::size_t r) const { return data_[r]; }

  /// Row-major order.
  std::vector<Entry> entries() const;

  SparseIntMatrix operator*(const SparseIntMatrix& other) const;
  SparseIntMatrix operator+(const SparseIntMatrix& other) const;
  SparseIntMatrix operator-(const SparseIntMatrix& other) const;
  SparseIntMatrix scaled(const Integer& factor) const;
  SparseIntMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const SparseIntMatrix& other) const;

  std::vector<Integer> apply(const std::vector<Integer>& x) const;
  SparseIntMatrix hstack(const SparseIntMatrix& other) const;
  IntMatrix to_dense() const;

  /// "rows cols nnz" followed by one "row col value" line per entry.
  void write_coordinate(std::ostream& out) const;
  static SparseIntMatrix read_coordinate(std::istream& in);

 private:
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, Integer>> data_;
};

}  // namespace mh

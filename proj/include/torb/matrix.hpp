/*
  matrix.hpp — dense exact matrices over Z and Q.

  Row-major storage, value semantics. These are small desk-scale matrices
  (tens to a few hundred rows); no sparsity, no modular tricks.
*/

#ifndef TORB_MATRIX_HPP
#define TORB_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "torb/numeric.hpp"

namespace torb {

class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  IntMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged initializer");
      for (long v : r) a_.emplace_back(v);
    }
  }

  static IntMat identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return at(i, j); }
  const Int& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  std::vector<Int> row(std::size_t i) const {
    return std::vector<Int>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  std::vector<Int> col(std::size_t j) const {
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
  }
  void set_row(std::size_t i, const std::vector<Int>& r) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
  }

  IntMat transpose() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMat operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    IntMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& aik = at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }

  std::vector<Int> mul_vec(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw DimensionError("matrix*vector shape mismatch");
    std::vector<Int> r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const Int& x : a_)
      if (x != 0) return false;
    return true;
  }

  /// Columns listed in `which`, in that order.
  IntMat select_cols(const std::vector<std::size_t>& which) const {
    IntMat r(rows_, which.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < which.size(); ++j) r.at(i, j) = at(i, which[j]);
    return r;
  }

  static IntMat from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntMat();
    IntMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("ragged rows");
      m.set_row(i, rows[i]);
    }
    return m;
  }
  static IntMat from_cols(const std::vector<std::vector<Int>>& cols) {
    if (cols.empty()) return IntMat();
    IntMat m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw DimensionError("ragged cols");
      for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  explicit RatMat(const IntMat& m) : RatMat(m.rows(), m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Rat& operator()(std::size_t i, std::size_t j) { return at(i, j); }
  const Rat& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  std::vector<Rat> row(std::size_t i) const {
    return std::vector<Rat>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  RatMat operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    RatMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_integral() const {
    for (const Rat& x : a_)
      if (x.get_den() != 1) return false;
    return true;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMat& m);
std::ostream& operator<<(std::ostream& os, const RatMat& m);

}  // namespace torb

#endif

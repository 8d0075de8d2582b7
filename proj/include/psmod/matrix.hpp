#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "psmod/errors.hpp"

namespace psmod {

// Dense exact matrix over a field context object.  Row-major storage; all
// operations are pure.  Zero-extent matrices (0 rows and/or 0 columns) are
// first-class values.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() : field_(), rows_(0), cols_(0) {}
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  // Build from integer literals, mainly for tests and galleries.
  static Matrix from_rows(F field, std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw MalformedInput("ragged matrix literal");
      std::size_t j = 0;
      for (long v : row) m.at(i, j++) = field.from_long(v);
      ++i;
    }
    return m;
  }

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const Elem& e : data_)
      if (!field_.is_zero(e)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!field_.eq(data_[k], o.data_[k])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw MalformedInput("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& a = at(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MalformedInput("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.add(r.data_[k], o.data_[k]);
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw MalformedInput("matrix difference shape mismatch");
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.sub(r.data_[k], o.data_[k]);
    return r;
  }

  Matrix negated() const {
    Matrix r = *this;
    for (Elem& e : r.data_) e = field_.neg(e);
    return r;
  }

  Matrix scaled(const Elem& c) const {
    Matrix r = *this;
    for (Elem& e : r.data_) e = field_.mul(e, c);
    return r;
  }

  // Horizontal concatenation [ this | o ].
  Matrix hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw MalformedInput("hstack row mismatch");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  // Vertical concatenation [ this / o ].
  Matrix vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw MalformedInput("vstack column mismatch");
    Matrix r(field_, rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
  }

  Matrix column(std::size_t j) const {
    Matrix c(field_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
  }

  Matrix columns(const std::vector<std::size_t>& idx) const {
    Matrix c(field_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t i = 0; i < rows_; ++i) c.at(i, j) = at(i, idx[j]);
    return c;
  }

  Matrix top_rows(std::size_t n) const {
    Matrix r(field_, n, cols_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    return r;
  }

  Matrix bottom_rows(std::size_t n) const {
    Matrix r(field_, n, cols_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(rows_ - n + i, j);
    return r;
  }

  // Deterministic total order on equally-shaped matrices: entry-wise
  // comparison of canonical string forms.  Used only for canonical sorting.
  int compare(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_ ? -1 : 1;
    if (cols_ != o.cols_) return cols_ < o.cols_ ? -1 : 1;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (field_.eq(data_[k], o.data_[k])) continue;
      std::string a = field_.to_string(data_[k]);
      std::string b = field_.to_string(o.data_[k]);
      if (a.size() != b.size() ? a.size() < b.size() : a < b) return -1;
      return 1;
    }
    return 0;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : " [";
      for (std::size_t j = 0; j < cols_; ++j) {
        s += field_.to_string(at(i, j));
        if (j + 1 < cols_) s += ", ";
      }
      s += "]";
      if (i + 1 < rows_) s += ";";
    }
    return s + "]";
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

}  // namespace psmod

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "picard/hom.hpp"
#include "picard/ring.hpp"

namespace picard {

/// Dense matrix of ring elements, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  static Matrix identity(Ring ring, std::size_t n);
  static Matrix from_rows(Ring ring, const std::vector<std::vector<Element>>& rows);
  /// Rows of expressions parsed in `ring`.
  static Matrix parse(Ring ring, std::initializer_list<std::initializer_list<const char*>> rows);
  static Matrix column(Ring ring, const std::vector<Element>& v);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }
  std::vector<Element> row(std::size_t i) const;
  std::vector<Element> col(std::size_t j) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Element& s) const;
  Matrix operator*(const Scalar& s) const;
  std::vector<Element> operator*(const std::vector<Element>& v) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  Matrix transpose() const;
  Element trace() const;
  /// Berkowitz, division free.
  Element determinant() const;
  /// Coefficients c_0 = 1, c_1, ..., c_n of det(lambda I - M) = sum c_i lambda^{n-i}.
  std::vector<Element> charpoly() const;
  /// adj(M) with M adj(M) = det(M) I.
  Matrix adjugate() const;
  Matrix kron(const Matrix& o) const;
  Matrix minor_without(std::size_t r, std::size_t c) const;
  Matrix map(const RingHom& h) const;
  /// Entries re-expressed in another tower with the same symbol names.
  Matrix lift_to(const Ring& target) const;

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

}  // namespace picard

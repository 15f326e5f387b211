#include "picard/matrix.hpp"

#include <sstream>

#include "picard/errors.hpp"

namespace picard {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Element(ring_)) {}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring->one();
  return m;
}

Matrix Matrix::from_rows(Ring ring, const std::vector<std::vector<Element>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(ring, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw PresentationError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (!same_ring(rows[i][j].ring(), ring)) throw RingMismatch("matrix entry from another ring");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::parse(Ring ring, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Element>> out;
  for (const auto& r : rows) {
    auto& v = out.emplace_back();
    for (const char* s : r) v.push_back(ring->parse(s));
  }
  return from_rows(std::move(ring), out);
}

Matrix Matrix::column(Ring ring, const std::vector<Element>& v) {
  Matrix m(ring, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

std::vector<Element> Matrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_)};
}

std::vector<Element> Matrix::col(std::size_t j) const {
  std::vector<Element> v;
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix size mismatch in +");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix size mismatch in -");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix size mismatch in *");
  Matrix m(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Element& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!o(k, j).is_zero()) m(i, j) += a * o(k, j);
      }
    }
  }
  return m;
}

Matrix Matrix::operator*(const Element& s) const {
  Matrix m = *this;
  for (auto& e : m.data_) e = e * s;
  return m;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix m = *this;
  for (auto& e : m.data_) e *= s;
  return m;
}

std::vector<Element> Matrix::operator*(const std::vector<Element>& v) const {
  if (v.size() != cols_) throw PreconditionError("matrix-vector size mismatch");
  std::vector<Element> out(rows_, Element(ring_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  }
  return m;
}

Element Matrix::trace() const {
  if (!square()) throw PreconditionError("trace of a non-square matrix");
  Element t(ring_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::minor_without(std::size_t r, std::size_t c) const {
  Matrix m(ring_, rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, a = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, b = 0; j < cols_; ++j) {
      if (j == c) continue;
      m(a, b++) = (*this)(i, j);
    }
    ++a;
  }
  return m;
}

std::vector<Element> Matrix::charpoly() const {
  if (!square()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return {ring_->one()};
  if (n == 1) return {ring_->one(), -(*this)(0, 0)};
  // M = [[a, R], [C, A]]; chi_M = T * chi_A with T the Toeplitz matrix built
  // from 1, -a, -R C, -R A C, ..., -R A^{n-2} C.
  Matrix sub = minor_without(0, 0);
  std::vector<Element> diags{ring_->one(), -(*this)(0, 0)};
  std::vector<Element> v(n - 1, Element(ring_));
  for (std::size_t i = 1; i < n; ++i) v[i - 1] = (*this)(i, 0);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    Element s(ring_);
    for (std::size_t j = 1; j < n; ++j) s += (*this)(0, j) * v[j - 1];
    diags.push_back(-s);
    if (step + 2 < n) v = sub * v;
  }
  std::vector<Element> inner = sub.charpoly();
  std::vector<Element> out(n + 1, Element(ring_));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < n && j <= i; ++j) {
      if (!diags[i - j].is_zero() && !inner[j].is_zero()) out[i] += diags[i - j] * inner[j];
    }
  }
  return out;
}

Element Matrix::determinant() const {
  auto c = charpoly();
  Element d = c.back();
  return rows_ % 2 == 0 ? d : -d;
}

Matrix Matrix::adjugate() const {
  if (!square()) throw PreconditionError("adjugate of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return *this;
  if (n == 1) return identity(ring_, 1);
  // Cayley-Hamilton: adj(M) = (-1)^{n-1} (M^{n-1} + c_1 M^{n-2} + ... + c_{n-1} I).
  auto c = charpoly();
  Matrix acc = identity(ring_, n);
  for (std::size_t i = 1; i < n; ++i) {
    acc = *this * acc + identity(ring_, n) * c[i];
  }
  return n % 2 == 1 ? acc : acc * Scalar(-1);
}

Matrix Matrix::kron(const Matrix& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatch("Kronecker product of matrices over different rings");
  Matrix m(ring_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t k = 0; k < o.rows_; ++k) {
        for (std::size_t l = 0; l < o.cols_; ++l) m(i * o.rows_ + k, j * o.cols_ + l) = (*this)(i, j) * o(k, l);
      }
    }
  }
  return m;
}

Matrix Matrix::map(const RingHom& h) const {
  Matrix m(h.target(), rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = h(data_[i]);
  return m;
}

Matrix Matrix::lift_to(const Ring& target) const {
  Matrix m(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = lift(data_[i], target);
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace picard

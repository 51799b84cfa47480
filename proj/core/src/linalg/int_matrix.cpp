#include "icc/linalg/int_matrix.hpp"

#include <algorithm>
#include <utility>

#include "icc/error.hpp"
#include "icc/linalg/hermite.hpp"

namespace icc::linalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ValidationError("row length mismatch");
    m.set_row(i, rows[i]);
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntMatrix::set_row(std::size_t i, const IntVector& v) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& x) { return x == 0; });
}

Int IntMatrix::determinant() const {
  if (!is_square()) throw ValidationError("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool IntMatrix::is_unimodular() const {
  if (!is_square()) return false;
  Int d = determinant();
  return d == 1 || d == -1;
}

IntMatrix IntMatrix::inverse_unimodular() const {
  require_unimodular(*this);
  auto [h, u] = hnf(*this);
  // The HNF of a unimodular matrix is the identity, so U = M^{-1}.
  return u;
}

IntMatrix IntMatrix::pow(unsigned long long exponent) const {
  if (!is_square()) throw ValidationError("power of non-square matrix");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (exponent) {
    if (exponent & 1ULL) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

IntMatrix IntMatrix::reduce_mod(unsigned modulus) const {
  IntMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    Int x = data_[k] % modulus;
    if (x < 0) x += modulus;
    r.data_[k] = x;
  }
  return r;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.data_ < b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ValidationError("matrix sum shape mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ValidationError("matrix difference shape mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
  if (m.cols_ != v.size()) throw ValidationError("matrix-vector shape mismatch");
  IntVector out(m.rows_);
  for (std::size_t i = 0; i < m.rows_; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < m.cols_; ++j) {
      const Int& x = m(i, j);
      if (x != 0 && v[j] != 0) acc += x * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

IntMatrix IntMatrix::scaled(const Int& s) const {
  IntMatrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += (*this)(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

void require_unimodular(const IntMatrix& m) {
  if (!m.is_square()) {
    throw ValidationError("non-square matrix (" + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ")");
  }
  Int d = m.determinant();
  if (d != 1 && d != -1) {
    throw ValidationError("non-unimodular matrix, det=" + d.str());
  }
}

}  // namespace icc::linalg

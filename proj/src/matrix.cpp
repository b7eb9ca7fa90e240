#include "ged/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ged/error.hpp"
#include "ged/permutation.hpp"

namespace ged {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, double s) { return a *= s; }
Matrix operator*(double s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  const std::size_t n = a.rows(), m = a.cols(), q = b.cols();
  auto cd = c.data();
  auto ad = a.data();
  auto bd = b.data();
  // i-k-j order keeps the inner loop contiguous.
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = cd.data() + i * q;
    for (std::size_t k = 0; k < m; ++k) {
      const double aik = ad[i * m + k];
      if (aik == 0.0) continue;
      const double* brow = bd.data() + k * q;
      for (std::size_t j = 0; j < q; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

double frobenius_sq(const Matrix& a) {
  double s = 0.0;
  for (double x : a.data()) s += x * x;
  return s;
}

double trace(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) s += a(i, i);
  return s;
}

double inner(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  double s = 0.0;
  auto ad = a.data();
  auto bd = b.data();
  for (std::size_t k = 0; k < ad.size(); ++k) s += ad[k] * bd[k];
  return s;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

// Permutation

Permutation::Permutation(std::vector<std::size_t> mapping)
    : map_(std::move(mapping)) {
  std::vector<char> seen(map_.size(), 0);
  for (std::size_t x : map_) {
    if (x >= map_.size() || seen[x])
      throw InputError("not a permutation: image " + std::to_string(x) +
                       " out of range or repeated");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return Permutation(std::move(m));
}

Permutation Permutation::from_matrix(const Matrix& p) {
  if (!p.square()) throw InputError("permutation matrix must be square");
  const std::size_t n = p.rows();
  std::vector<std::size_t> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = p(i, j);
      if (x == 1.0) {
        if (m[i] != n) throw InputError("row with two unit entries");
        m[i] = j;
      } else if (x != 0.0) {
        throw InputError("permutation matrix entries must be 0 or 1");
      }
    }
    if (m[i] == n) throw InputError("row without a unit entry");
  }
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw InputError("permutation size mismatch");
  std::vector<std::size_t> m(size());
  for (std::size_t i = 0; i < size(); ++i) m[i] = next[map_[i]];
  return Permutation(std::move(m));
}

Matrix Permutation::matrix() const {
  Matrix p(size(), size());
  for (std::size_t i = 0; i < size(); ++i) p(i, map_[i]) = 1.0;
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (map_[i] != i) return false;
  return true;
}

}  // namespace ged

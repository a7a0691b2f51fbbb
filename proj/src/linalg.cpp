#include "siltsms/linalg.hpp"

#include <stdexcept>

namespace siltsms {

namespace {

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::describe() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar Field::reduce(const Scalar& x) const {
  if (p_ == 0) return x;
  // Values in prime mode are integers; denominators never appear.
  BigInt n = numerator(x) % p_;
  if (n < 0) n += p_;
  return Scalar(n);
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (p_ == 0) return Scalar(1) / a;
  // Fermat: a^(p-2).
  BigInt base = numerator(a) % p_;
  BigInt result = 1;
  std::uint64_t e = p_ - 2;
  while (e) {
    if (e & 1) result = (result * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return Scalar(result);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::column(std::size_t c) const { return columns(c, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  Matrix m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
  return m;
}

Matrix Matrix::rows_range(std::size_t first, std::size_t count) const {
  Matrix m(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(first + r, c);
  return m;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in multiply");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
    }
  if (!f.is_rational())
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = f.reduce(out(i, j));
  return out;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch in add");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.add(a(i, j), b(i, j));
  return out;
}

Matrix scale(const Field& f, const Scalar& s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.mul(s, a(i, j));
  return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("row mismatch in hconcat");
  Matrix out(a.rows(), a.cols() + b.cols());
  place(out, a, 0, 0);
  place(out, b, 0, a.cols());
  return out;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("column mismatch in vconcat");
  Matrix out(a.rows() + b.rows(), a.cols());
  place(out, a, 0, 0);
  place(out, b, a.rows(), 0);
  return out;
}

void place(Matrix& dst, const Matrix& block, std::size_t r, std::size_t c) {
  if (r + block.rows() > dst.rows() || c + block.cols() > dst.cols())
    throw std::invalid_argument("block does not fit");
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) dst(r + i, c + j) = block(i, j);
}

Echelon rref(const Field& f, Matrix a) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    Scalar inv = f.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = f.mul(a(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Scalar factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (a(row, j) != 0) a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const Field& f, const Matrix& a) {
  if (a.empty()) return 0;
  return rref(f, a).pivots.size();
}

Matrix kernel(const Field& f, const Matrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return Matrix::identity(n);
  Echelon e = rref(f, a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis(n, n - e.pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = f.neg(e.reduced(r, free));
    ++k;
  }
  return basis;
}

Matrix column_complement(const Field& f, const Matrix& a, std::size_t dim) {
  // Pivots of [a | I] beyond a's columns pick the completing unit vectors.
  Matrix aug(dim, a.cols() + dim);
  if (a.cols() > 0) place(aug, a, 0, 0);
  for (std::size_t i = 0; i < dim; ++i) aug(i, a.cols() + i) = 1;
  Echelon e = rref(f, aug);
  std::vector<std::size_t> picks;
  for (auto p : e.pivots)
    if (p >= a.cols()) picks.push_back(p - a.cols());
  Matrix out(dim, picks.size());
  for (std::size_t k = 0; k < picks.size(); ++k) out(picks[k], k) = 1;
  return out;
}

std::optional<Matrix> solve(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("row mismatch in solve");
  const std::size_t n = a.cols();
  Matrix x(n, b.cols());
  if (a.rows() == 0) return x;
  Echelon e = rref(f, hconcat(a, b));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
  }
  return x;
}

}  // namespace siltsms

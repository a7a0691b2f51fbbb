#pragma once

// Dense exact linear algebra over Q or F_p.
//
// Elements are always stored as cpp_rational. In prime-field mode every value
// is kept reduced to an integer in [0, p) and inverses are modular.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace siltsms {

using BigInt = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string describe() const;

  Scalar from_int(long v) const { return reduce(Scalar(v)); }
  Scalar reduce(const Scalar& x) const;
  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  Matrix columns(std::size_t first, std::size_t count) const;
  Matrix rows_range(std::size_t first, std::size_t count) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix scale(const Field& f, const Scalar& s, const Matrix& a);
Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);
/// Copies `block` into `dst` with its top-left corner at (r, c).
void place(Matrix& dst, const Matrix& block, std::size_t r, std::size_t c);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form.
Echelon rref(const Field& f, Matrix a);
std::size_t rank(const Field& f, const Matrix& a);
/// Columns form a basis of {x : a x = 0}.
Matrix kernel(const Field& f, const Matrix& a);
/// Standard basis vectors of k^dim completing the column span of `a` to k^dim.
Matrix column_complement(const Field& f, const Matrix& a, std::size_t dim);
/// Some x with a x = b, or nullopt when inconsistent.
std::optional<Matrix> solve(const Field& f, const Matrix& a, const Matrix& b);

}  // namespace siltsms

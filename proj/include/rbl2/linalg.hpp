#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rbl2/scalar.hpp"

namespace rbl2 {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
Vector& operator-=(Vector& a, const Vector& b);
bool is_zero(const Vector& v);
/// Concatenation; used for residuals living in a direct sum.
Vector concat(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

/// rows x cols matrix; column j is the image of basis vector j.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t rows, std::size_t cols);
  static LinearMap identity(std::size_t n);
  static LinearMap from_rows(const std::vector<std::vector<Scalar>>& rows);
  /// Matrix with the given images of the basis vectors as columns.
  static LinearMap from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vector apply(const Vector& v) const;
  Vector column(std::size_t c) const;
  LinearMap transpose() const;
  bool is_zero() const;
  /// Row-major entries, used as a residual vector.
  const Vector& flat() const { return e_; }

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator*(const Scalar& s, const LinearMap& a);
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector e_;
};

/// c[k][i][j] = coordinate k of m(e_i, f_j).
class BilinearMap {
 public:
  BilinearMap() = default;
  BilinearMap(std::size_t dim_a, std::size_t dim_b, std::size_t dim_out);

  std::size_t dim_a() const { return a_; }
  std::size_t dim_b() const { return b_; }
  std::size_t dim_out() const { return out_; }
  Scalar& at(std::size_t k, std::size_t i, std::size_t j) { return c_[(k * a_ + i) * b_ + j]; }
  const Scalar& at(std::size_t k, std::size_t i, std::size_t j) const { return c_[(k * a_ + i) * b_ + j]; }

  Vector apply(const Vector& x, const Vector& y) const;
  Vector on_basis(std::size_t i, std::size_t j) const;
  void set_on_basis(std::size_t i, std::size_t j, const Vector& value);
  /// Left multiplication by x as a dim_out x dim_b matrix.
  LinearMap left(const Vector& x) const;
  bool is_skew() const;
  bool is_zero() const;

  friend bool operator==(const BilinearMap&, const BilinearMap&) = default;

 private:
  std::size_t a_ = 0, b_ = 0, out_ = 0;
  Vector c_;
};

/// d[l][i][j][k] = coordinate l of m(e_i, e_j, e_k).
class TrilinearMap {
 public:
  TrilinearMap() = default;
  TrilinearMap(std::size_t dim, std::size_t dim_out);

  std::size_t dim() const { return n_; }
  std::size_t dim_out() const { return out_; }
  Scalar& at(std::size_t l, std::size_t i, std::size_t j, std::size_t k) { return d_[((l * n_ + i) * n_ + j) * n_ + k]; }
  const Scalar& at(std::size_t l, std::size_t i, std::size_t j, std::size_t k) const {
    return d_[((l * n_ + i) * n_ + j) * n_ + k];
  }

  Vector apply(const Vector& x, const Vector& y, const Vector& z) const;
  Vector on_basis(std::size_t i, std::size_t j, std::size_t k) const;
  /// Sets value at (i,j,k) and the signed values at every permutation.
  void set_alternating(std::size_t i, std::size_t j, std::size_t k, const Vector& value);
  bool is_alternating() const;
  bool is_zero() const;

  friend bool operator==(const TrilinearMap&, const TrilinearMap&) = default;

 private:
  std::size_t n_ = 0, out_ = 0;
  Vector d_;
};

/// Solves A w = b. Free variables are set to zero, so the solution is
/// supported on the pivot columns chosen in left-to-right order.
std::optional<Vector> solve(const LinearMap& a, const Vector& b);

std::size_t rank(const LinearMap& a);

/// Throws ShapeMismatch with `what` when `ok` is false.
void require_shape(bool ok, const std::string& what);

}  // namespace rbl2

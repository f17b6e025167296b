#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "homakivis/scalar.hpp"

namespace homakivis {

/// Coordinate vector over the rationals. Basis indices are 0-based.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim) {}
  explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  Vector(std::initializer_list<Scalar> coords) : coords_(coords) {}

  static Vector basis(std::size_t dim, std::size_t i);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Scalar> coords() const noexcept { return coords_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Scalar& s);

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> coords_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator-(Vector a);
Vector operator*(const Scalar& s, Vector v);

/// Dense rectangular matrix; the workhorse for exact elimination.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by Gauss-Jordan elimination over Q.
RowEchelon rref(Matrix m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> null_space(const Matrix& m);

/// The unique solution of m x = b, or nullopt when the system is
/// inconsistent or underdetermined.
std::optional<Vector> solve_unique(const Matrix& m, const Vector& b);

/// Square matrix acting on column vectors; column j is the image of e_j.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix m);

  static LinearMap identity(std::size_t dim);
  static LinearMap zero(std::size_t dim);
  /// images[j] is the image of e_j.
  static LinearMap from_images(std::span<const Vector> images);

  std::size_t dim() const noexcept { return m_.rows(); }
  const Scalar& at(std::size_t row, std::size_t col) const { return m_(row, col); }
  const Matrix& matrix() const noexcept { return m_; }
  Vector image(std::size_t j) const;
  bool is_identity() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Matrix m_;
};

Vector apply(const LinearMap& a, const Vector& x);
/// (a ∘ b)(x) = a(b(x)).
LinearMap compose(const LinearMap& a, const LinearMap& b);
/// Throws NotInvertible when a is singular.
LinearMap invert(const LinearMap& a);
LinearMap power(const LinearMap& a, unsigned k);

/// Structure constants of a bilinear map: mu(e_i, e_j) = sum_k c(i,j,k) e_k.
class BilinearMap {
 public:
  BilinearMap() = default;
  explicit BilinearMap(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  /// Tensor whose value on the basis pair (i, j) is f(i, j).
  static BilinearMap from_basis(std::size_t dim, const std::function<Vector(std::size_t, std::size_t)>& f);

  std::size_t dim() const noexcept { return dim_; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[index(i, j, k)]; }
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) { c_[index(i, j, k)] = value; }
  /// mu(e_i, e_j).
  Vector product(std::size_t i, std::size_t j) const;
  bool is_skew() const;

  friend bool operator==(const BilinearMap&, const BilinearMap&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }

  std::size_t dim_ = 0;
  std::vector<Scalar> c_;
};

/// Structure constants of a trilinear map: T(e_i, e_j, e_k) = sum_l d(i,j,k,l) e_l.
class TrilinearMap {
 public:
  TrilinearMap() = default;
  explicit TrilinearMap(std::size_t dim) : dim_(dim), d_(dim * dim * dim * dim) {}

  static TrilinearMap from_basis(std::size_t dim,
                                 const std::function<Vector(std::size_t, std::size_t, std::size_t)>& f);

  std::size_t dim() const noexcept { return dim_; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return d_[index(i, j, k, l)];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Scalar& value) {
    d_[index(i, j, k, l)] = value;
  }
  Vector product(std::size_t i, std::size_t j, std::size_t k) const;
  bool is_zero() const;

  friend bool operator==(const TrilinearMap&, const TrilinearMap&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return ((i * dim_ + j) * dim_ + k) * dim_ + l;
  }

  std::size_t dim_ = 0;
  std::vector<Scalar> d_;
};

Vector eval_bilinear(const BilinearMap& b, const Vector& x, const Vector& y);
Vector eval_trilinear(const TrilinearMap& t, const Vector& x, const Vector& y, const Vector& z);

/// a ∘ b: the bilinear map (x, y) -> a(b(x, y)).
BilinearMap compose(const LinearMap& a, const BilinearMap& b);
/// a ∘ t: the trilinear map (x, y, z) -> a(t(x, y, z)).
TrilinearMap compose(const LinearMap& a, const TrilinearMap& t);

}  // namespace homakivis

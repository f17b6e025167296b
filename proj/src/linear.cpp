#include "homakivis/linear.hpp"

#include <algorithm>
#include <string>

#include "homakivis/errors.hpp"

namespace homakivis {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Vector Vector::basis(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return homakivis::is_zero(s); });
}

Vector& Vector::operator+=(const Vector& other) {
  require_same_dim(dim(), other.dim(), "vector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_same_dim(dim(), other.dim(), "vector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator-(Vector a) { return a *= Scalar(-1); }
Vector operator*(const Scalar& s, Vector v) { return v *= s; }

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Scalar inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<Vector> null_space(const Matrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
      v[e.pivot_columns[r]] = -e.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_unique(const Matrix& m, const Vector& b) {
  require_same_dim(m.rows(), b.dim(), "solve");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
  if (e.pivot_columns.size() != m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < m.cols(); ++r) x[r] = e.reduced(r, m.cols());
  return x;
}

LinearMap::LinearMap(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw DimensionMismatch("linear map must be square, got " + std::to_string(m_.rows()) + "x" +
                            std::to_string(m_.cols()));
  }
}

LinearMap LinearMap::identity(std::size_t dim) { return LinearMap(Matrix::identity(dim)); }

LinearMap LinearMap::zero(std::size_t dim) { return LinearMap(Matrix(dim, dim)); }

LinearMap LinearMap::from_images(std::span<const Vector> images) {
  const std::size_t n = images.size();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    require_same_dim(images[j].dim(), n, "linear map image");
    for (std::size_t r = 0; r < n; ++r) m(r, j) = images[j][r];
  }
  return LinearMap(std::move(m));
}

Vector LinearMap::image(std::size_t j) const {
  Vector v(dim());
  for (std::size_t r = 0; r < dim(); ++r) v[r] = m_(r, j);
  return v;
}

bool LinearMap::is_identity() const { return m_ == Matrix::identity(dim()); }

Vector apply(const LinearMap& a, const Vector& x) {
  require_same_dim(a.dim(), x.dim(), "apply");
  Vector y(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (is_zero(x[j])) continue;
    for (std::size_t r = 0; r < a.dim(); ++r) {
      if (!is_zero(a.at(r, j))) y[r] += a.at(r, j) * x[j];
    }
  }
  return y;
}

LinearMap compose(const LinearMap& a, const LinearMap& b) {
  require_same_dim(a.dim(), b.dim(), "compose");
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(a.at(r, k))) continue;
      for (std::size_t c = 0; c < n; ++c) m(r, c) += a.at(r, k) * b.at(k, c);
    }
  }
  return LinearMap(std::move(m));
}

LinearMap invert(const LinearMap& a) {
  const std::size_t n = a.dim();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a.at(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.pivot_columns.size() < n || e.pivot_columns[n - 1] != n - 1) {
    throw NotInvertible("linear map is singular (rank " +
                        std::to_string(std::count_if(e.pivot_columns.begin(), e.pivot_columns.end(),
                                                     [n](std::size_t c) { return c < n; })) +
                        " < " + std::to_string(n) + ")");
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  }
  return LinearMap(std::move(inv));
}

LinearMap power(const LinearMap& a, unsigned k) {
  LinearMap result = LinearMap::identity(a.dim());
  for (unsigned i = 0; i < k; ++i) result = compose(a, result);
  return result;
}

BilinearMap BilinearMap::from_basis(std::size_t dim, const std::function<Vector(std::size_t, std::size_t)>& f) {
  BilinearMap b(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Vector v = f(i, j);
      require_same_dim(v.dim(), dim, "bilinear map value");
      for (std::size_t k = 0; k < dim; ++k) b.set(i, j, k, v[k]);
    }
  }
  return b;
}

Vector BilinearMap::product(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = at(i, j, k);
  return v;
}

bool BilinearMap::is_skew() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if (at(i, j, k) != -at(j, i, k)) return false;
      }
    }
  }
  return true;
}

TrilinearMap TrilinearMap::from_basis(std::size_t dim,
                                      const std::function<Vector(std::size_t, std::size_t, std::size_t)>& f) {
  TrilinearMap t(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        const Vector v = f(i, j, k);
        require_same_dim(v.dim(), dim, "trilinear map value");
        for (std::size_t l = 0; l < dim; ++l) t.set(i, j, k, l, v[l]);
      }
    }
  }
  return t;
}

Vector TrilinearMap::product(std::size_t i, std::size_t j, std::size_t k) const {
  Vector v(dim_);
  for (std::size_t l = 0; l < dim_; ++l) v[l] = at(i, j, k, l);
  return v;
}

bool TrilinearMap::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](const Scalar& s) { return homakivis::is_zero(s); });
}

Vector eval_bilinear(const BilinearMap& b, const Vector& x, const Vector& y) {
  require_same_dim(b.dim(), x.dim(), "eval_bilinear");
  require_same_dim(b.dim(), y.dim(), "eval_bilinear");
  const std::size_t n = b.dim();
  Vector out(n);
  Scalar w;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(b.at(i, j, k))) out[k] += w * b.at(i, j, k);
      }
    }
  }
  return out;
}

Vector eval_trilinear(const TrilinearMap& t, const Vector& x, const Vector& y, const Vector& z) {
  require_same_dim(t.dim(), x.dim(), "eval_trilinear");
  require_same_dim(t.dim(), y.dim(), "eval_trilinear");
  require_same_dim(t.dim(), z.dim(), "eval_trilinear");
  const std::size_t n = t.dim();
  Vector out(n);
  Scalar w;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(z[k])) continue;
        w = x[i] * y[j] * z[k];
        for (std::size_t l = 0; l < n; ++l) {
          if (!is_zero(t.at(i, j, k, l))) out[l] += w * t.at(i, j, k, l);
        }
      }
    }
  }
  return out;
}

BilinearMap compose(const LinearMap& a, const BilinearMap& b) {
  require_same_dim(a.dim(), b.dim(), "compose");
  return BilinearMap::from_basis(b.dim(), [&](std::size_t i, std::size_t j) { return apply(a, b.product(i, j)); });
}

TrilinearMap compose(const LinearMap& a, const TrilinearMap& t) {
  require_same_dim(a.dim(), t.dim(), "compose");
  return TrilinearMap::from_basis(
      t.dim(), [&](std::size_t i, std::size_t j, std::size_t k) { return apply(a, t.product(i, j, k)); });
}

}  // namespace homakivis

#include "rbl2/linalg.hpp"

#include <array>

#include "rbl2/errors.hpp"

namespace rbl2 {

void require_shape(bool ok, const std::string& what) {
  if (!ok) throw ShapeMismatch(what);
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector basis_vector(std::size_t n, std::size_t i) {
  require_shape(i < n, "basis index out of range");
  Vector v(n);
  v[i] = 1;
  return v;
}

Vector& operator+=(Vector& a, const Vector& b) {
  require_shape(a.size() == b.size(), "vector sizes differ");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector& operator-=(Vector& a, const Vector& b) {
  require_shape(a.size() == b.size(), "vector sizes differ");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  return r += b;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  return r -= b;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector concat(const Vector& a, const Vector& b) {
  Vector r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::string to_string(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  return s + "]";
}

// LinearMap

LinearMap::LinearMap(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

LinearMap LinearMap::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  LinearMap m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_shape(rows[r].size() == cols, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

LinearMap LinearMap::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  LinearMap m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require_shape(columns[c].size() == rows, "column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

Vector LinearMap::apply(const Vector& v) const {
  require_shape(v.size() == cols_, "matrix applied to vector of wrong length");
  Vector r(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t row = 0; row < rows_; ++row) {
      const Scalar& a = at(row, c);
      if (!a.is_zero()) r[row] += a * v[c];
    }
  }
  return r;
}

Vector LinearMap::column(std::size_t c) const {
  require_shape(c < cols_, "column index out of range");
  Vector r(rows_);
  for (std::size_t row = 0; row < rows_; ++row) r[row] = at(row, c);
  return r;
}

LinearMap LinearMap::transpose() const {
  LinearMap t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool LinearMap::is_zero() const { return rbl2::is_zero(e_); }

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  require_shape(a.cols_ == b.rows_, "matrix product of incompatible shapes");
  LinearMap m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) m.at(i, j) += x * b.at(k, j);
    }
  return m;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum of different shapes");
  LinearMap m = a;
  m.e_ += b.e_;
  return m;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference of different shapes");
  LinearMap m = a;
  m.e_ -= b.e_;
  return m;
}

LinearMap operator*(const Scalar& s, const LinearMap& a) {
  LinearMap m = a;
  m.e_ = s * a.e_;
  return m;
}

// BilinearMap

BilinearMap::BilinearMap(std::size_t dim_a, std::size_t dim_b, std::size_t dim_out)
    : a_(dim_a), b_(dim_b), out_(dim_out), c_(dim_a * dim_b * dim_out) {}

Vector BilinearMap::apply(const Vector& x, const Vector& y) const {
  require_shape(x.size() == a_ && y.size() == b_, "bilinear map applied to vectors of wrong length");
  Vector r(out_);
  for (std::size_t i = 0; i < a_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < b_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < out_; ++k) {
        const Scalar& c = at(k, i, j);
        if (!c.is_zero()) r[k] += c * w;
      }
    }
  }
  return r;
}

Vector BilinearMap::on_basis(std::size_t i, std::size_t j) const {
  require_shape(i < a_ && j < b_, "basis index out of range");
  Vector r(out_);
  for (std::size_t k = 0; k < out_; ++k) r[k] = at(k, i, j);
  return r;
}

void BilinearMap::set_on_basis(std::size_t i, std::size_t j, const Vector& value) {
  require_shape(i < a_ && j < b_ && value.size() == out_, "bilinear assignment out of range");
  for (std::size_t k = 0; k < out_; ++k) at(k, i, j) = value[k];
}

LinearMap BilinearMap::left(const Vector& x) const {
  require_shape(x.size() == a_, "bilinear map applied to vector of wrong length");
  LinearMap m(out_, b_);
  for (std::size_t i = 0; i < a_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t k = 0; k < out_; ++k)
      for (std::size_t j = 0; j < b_; ++j)
        if (!at(k, i, j).is_zero()) m.at(k, j) += x[i] * at(k, i, j);
  }
  return m;
}

bool BilinearMap::is_skew() const {
  if (a_ != b_) return false;
  for (std::size_t k = 0; k < out_; ++k)
    for (std::size_t i = 0; i < a_; ++i)
      for (std::size_t j = i; j < b_; ++j)
        if (!(at(k, i, j) + at(k, j, i)).is_zero()) return false;
  return true;
}

bool BilinearMap::is_zero() const { return rbl2::is_zero(c_); }

// TrilinearMap

TrilinearMap::TrilinearMap(std::size_t dim, std::size_t dim_out)
    : n_(dim), out_(dim_out), d_(dim * dim * dim * dim_out) {}

Vector TrilinearMap::apply(const Vector& x, const Vector& y, const Vector& z) const {
  require_shape(x.size() == n_ && y.size() == n_ && z.size() == n_, "trilinear map applied to vectors of wrong length");
  Vector r(out_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k) {
        if (z[k].is_zero()) continue;
        const Scalar w = xy * z[k];
        for (std::size_t l = 0; l < out_; ++l) {
          const Scalar& c = at(l, i, j, k);
          if (!c.is_zero()) r[l] += c * w;
        }
      }
    }
  }
  return r;
}

Vector TrilinearMap::on_basis(std::size_t i, std::size_t j, std::size_t k) const {
  require_shape(i < n_ && j < n_ && k < n_, "basis index out of range");
  Vector r(out_);
  for (std::size_t l = 0; l < out_; ++l) r[l] = at(l, i, j, k);
  return r;
}

void TrilinearMap::set_alternating(std::size_t i, std::size_t j, std::size_t k, const Vector& value) {
  require_shape(i < n_ && j < n_ && k < n_ && value.size() == out_, "trilinear assignment out of range");
  const std::array<std::array<std::size_t, 3>, 6> perms{{{i, j, k}, {j, k, i}, {k, i, j}, {j, i, k}, {i, k, j}, {k, j, i}}};
  for (std::size_t p = 0; p < perms.size(); ++p) {
    const Scalar sign = p < 3 ? Scalar(1) : Scalar(-1);
    for (std::size_t l = 0; l < out_; ++l) at(l, perms[p][0], perms[p][1], perms[p][2]) = sign * value[l];
  }
}

bool TrilinearMap::is_alternating() const {
  for (std::size_t l = 0; l < out_; ++l)
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) {
          const Scalar& v = at(l, i, j, k);
          if (v != -at(l, j, i, k) || v != -at(l, i, k, j)) return false;
        }
  return true;
}

bool TrilinearMap::is_zero() const { return rbl2::is_zero(d_); }

// Row reduction

namespace {

struct Reduced {
  std::vector<Vector> rows;  // augmented
  std::vector<std::size_t> pivots;
};

Reduced reduce(const LinearMap& a, const Vector* b) {
  Reduced red;
  const std::size_t cols = a.cols();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector row(cols + (b ? 1 : 0));
    for (std::size_t c = 0; c < cols; ++c) row[c] = a.at(r, c);
    if (b) row[cols] = (*b)[r];
    red.rows.push_back(std::move(row));
  }
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < red.rows.size(); ++c) {
    std::size_t p = lead;
    while (p < red.rows.size() && red.rows[p][c].is_zero()) ++p;
    if (p == red.rows.size()) continue;
    std::swap(red.rows[p], red.rows[lead]);
    const Scalar inv = Scalar(1) / red.rows[lead][c];
    red.rows[lead] = inv * red.rows[lead];
    for (std::size_t r = 0; r < red.rows.size(); ++r) {
      if (r == lead || red.rows[r][c].is_zero()) continue;
      red.rows[r] -= red.rows[r][c] * red.rows[lead];
    }
    red.pivots.push_back(c);
    ++lead;
  }
  return red;
}

}  // namespace

std::optional<Vector> solve(const LinearMap& a, const Vector& b) {
  require_shape(b.size() == a.rows(), "right-hand side length differs from row count");
  const Reduced red = reduce(a, &b);
  const std::size_t cols = a.cols();
  for (std::size_t r = red.pivots.size(); r < red.rows.size(); ++r)
    if (!red.rows[r][cols].is_zero()) return std::nullopt;
  Vector x(cols);
  for (std::size_t r = 0; r < red.pivots.size(); ++r) x[red.pivots[r]] = red.rows[r][cols];
  return x;
}

std::size_t rank(const LinearMap& a) { return reduce(a, nullptr).pivots.size(); }

}  // namespace rbl2

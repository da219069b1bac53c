#include "cohom/exact.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace cohom {

Scalar make_scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

Scalar dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionError("dot: length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0 && sgn(y[i]) != 0) s += x[i] * y[i];
  }
  return s;
}

bool is_zero(const Vector& x) {
  return std::all_of(x.begin(), x.end(), [](const Scalar& v) { return sgn(v) == 0; });
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector e(n, Scalar(0));
  e.at(i) = 1;
  return e;
}

Vector add(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionError("add: length mismatch");
  Vector r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Vector sub(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionError("sub: length mismatch");
  Vector r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

Vector scale(const Scalar& c, const Vector& x) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

void axpy(Vector& x, const Scalar& c, const Vector& y) {
  if (x.size() != y.size()) throw DimensionError("axpy: length mismatch");
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(y[i]) != 0) x[i] += c * y[i];
  }
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_rows: ragged input");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("from_columns: ragged input");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionError("from_ints: ragged input");
    std::size_t c = 0;
    for (long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product: shape mismatch");
  Matrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o(k, c);
        if (sgn(b) != 0) p(r, c) += a * b;
      }
    }
  }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
  Matrix s(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] += o.entries_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shape mismatch");
  Matrix s(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] -= o.entries_[i];
  return s;
}

Matrix Matrix::operator-() const { return scaled(Scalar(-1)); }

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix s(*this);
  for (auto& e : s.entries_) e *= c;
  return s;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw DimensionError("apply: length mismatch");
  Vector y(rows_, Scalar(0));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(x[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (sgn(a) != 0) y[r] += a * x[c];
    }
  }
  return y;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw DimensionError("trace of non-square matrix");
  Scalar t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& v) { return sgn(v) == 0; });
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

// ---------------------------------------------------------------- elimination

Echelon echelon(const Matrix& input) {
  Matrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(m(i, c)) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t k = c; k < cols; ++k) std::swap(m(sel, k), m(r, k));
    }
    const Scalar inv = 1 / m(r, c);
    for (std::size_t k = c; k < cols; ++k) {
      if (sgn(m(r, k)) != 0) m(r, k) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (sgn(m(r, k)) != 0) m(i, k) -= f * m(r, k);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return echelon(m).form; }

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
  const Echelon e = echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Scalar(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.form(i, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(basis, cols);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const Echelon e = echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.form(r, n + c);
  return inv;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const Echelon e = echelon(aug);
  Vector x(a.cols(), Scalar(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.form(i, a.cols());
  }
  return x;
}

Scalar bilinear(const Matrix& form, const Vector& x, const Vector& y) {
  return dot(x, form.apply(y));
}

bool is_positive_definite(const Matrix& sym) {
  if (sym.rows() != sym.cols()) return false;
  if (!(sym == sym.transpose())) return false;
  Matrix m = sym;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(m(k, k)) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m(i, k)) == 0) continue;
      const Scalar f = m(i, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(i, c) -= f * m(k, c);
    }
  }
  return true;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::row_space(const Matrix& m) {
  Echelon e = echelon(m);
  Subspace s(m.cols());
  const std::size_t r = e.pivots.size();
  Matrix b(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) b(i, c) = e.form(i, c);
  s.basis_ = std::move(b);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::full(std::size_t ambient) { return row_space(Matrix::identity(ambient)); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("contains: ambient dimension mismatch");
  Vector w = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = w[pivots_[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t k = pivots_[i]; k < ambient_; ++k) {
      if (sgn(basis_(i, k)) != 0) w[k] -= c * basis_(i, k);
    }
  }
  return cohom::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("contains: ambient dimension mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw std::invalid_argument("coordinates: vector outside subspace");
  Vector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("subspace_sum: ambient dimension mismatch");
  std::vector<Vector> rows = u.vectors();
  for (auto& r : v.vectors()) rows.push_back(std::move(r));
  return Subspace::span(u.ambient_dim(), rows);
}

Subspace subspace_sum(const std::vector<Subspace>& parts, std::size_t ambient) {
  std::vector<Vector> rows;
  for (const auto& p : parts) {
    if (p.ambient_dim() != ambient) throw DimensionError("subspace_sum: ambient dimension mismatch");
    for (auto& r : p.vectors()) rows.push_back(std::move(r));
  }
  return Subspace::span(ambient, rows);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionError("subspace_intersect: ambient dimension mismatch");
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace(n);
  // Columns u_1..u_p, -v_1..-v_q; a kernel vector (a, b) gives Σ a_i u_i ∈ u ∩ v.
  Matrix stacked(n, u.dim() + v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) stacked(r, i) = u.basis()(i, r);
  for (std::size_t j = 0; j < v.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) stacked(r, u.dim() + j) = -v.basis()(j, r);
  const Matrix ker = kernel(stacked);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Vector x(n, Scalar(0));
    for (std::size_t i = 0; i < u.dim(); ++i) {
      if (sgn(ker(k, i)) != 0) axpy(x, ker(k, i), u.basis_vector(i));
    }
    out.push_back(std::move(x));
  }
  return Subspace::span(n, out);
}

Subspace orthocomplement_in(const Subspace& v, const Subspace& w, const Matrix& form) {
  const std::size_t n = w.ambient_dim();
  if (v.ambient_dim() != n || form.rows() != n || form.cols() != n)
    throw DimensionError("orthocomplement_in: dimension mismatch");
  if (!w.contains(v)) throw std::invalid_argument("orthocomplement_in: v is not contained in w");
  const Matrix wf = w.basis() * form;              // dim w × n
  const Matrix gram = wf * w.basis().transpose();  // dim w × dim w
  if (!is_positive_definite(gram))
    throw std::domain_error("orthocomplement_in: form is not positive definite on w");
  if (v.is_zero()) return w;
  // c ∈ ℚ^{dim w} with form(Σ c_k w_k, v_i) = 0 for all i.
  const Matrix constraints = v.basis() * wf.transpose();  // dim v × dim w
  const Matrix ker = kernel(constraints);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Vector x(n, Scalar(0));
    for (std::size_t i = 0; i < w.dim(); ++i) {
      if (sgn(ker(k, i)) != 0) axpy(x, ker(k, i), w.basis_vector(i));
    }
    out.push_back(std::move(x));
  }
  return Subspace::span(n, out);
}

Subspace image(const Matrix& map, const Subspace& u) {
  if (map.cols() != u.ambient_dim()) throw DimensionError("image: dimension mismatch");
  std::vector<Vector> out;
  out.reserve(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out.push_back(map.apply(u.basis_vector(i)));
  return Subspace::span(map.rows(), out);
}

Subspace solve_inclusion_constraint(const Subspace& candidates, const InclusionAction& action,
                                    const Subspace& target) {
  const std::size_t n = candidates.ambient_dim();
  const std::size_t m = target.ambient_dim();
  if (candidates.is_zero()) return Subspace(n);
  // Annihilator rows a with a·y = 0 for every y in target.
  const Matrix ann = kernel(target.basis());
  std::vector<std::vector<Vector>> images;
  images.reserve(candidates.dim());
  std::size_t slots = 0;
  for (std::size_t i = 0; i < candidates.dim(); ++i) {
    images.push_back(action(candidates.basis_vector(i)));
    if (i == 0) slots = images.back().size();
    if (images.back().size() != slots)
      throw DimensionError("solve_inclusion_constraint: action image count varies");
    for (const auto& y : images.back()) {
      if (y.size() != m) throw DimensionError("solve_inclusion_constraint: image outside target ambient");
    }
  }
  if (ann.rows() == 0 || slots == 0) return candidates;
  Matrix system(slots * ann.rows(), candidates.dim());
  for (std::size_t s = 0; s < slots; ++s) {
    for (std::size_t a = 0; a < ann.rows(); ++a) {
      const Vector arow = ann.row(a);
      for (std::size_t i = 0; i < candidates.dim(); ++i) system(s * ann.rows() + a, i) = dot(arow, images[i][s]);
    }
  }
  const Matrix ker = kernel(system);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Vector x(n, Scalar(0));
    for (std::size_t i = 0; i < candidates.dim(); ++i) {
      if (sgn(ker(k, i)) != 0) axpy(x, ker(k, i), candidates.basis_vector(i));
    }
    out.push_back(std::move(x));
  }
  return Subspace::span(n, out);
}

std::map<Scalar, Subspace> rational_eigenspaces(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("rational_eigenspaces: non-square matrix");
  const std::size_t n = m.rows();
  std::map<Scalar, Subspace> out;
  if (n == 0) return out;
  // Eigenvalues of d·M are algebraic integers; rational ones are integers
  // bounded by the row-sum norm, so scanning k/d over that window is complete.
  mpz_class d = 1;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(r, c).get_den_mpz_t());
  Scalar norm = 0;
  for (std::size_t r = 0; r < n; ++r) {
    Scalar s = 0;
    for (std::size_t c = 0; c < n; ++c) s += abs(m(r, c));
    if (s > norm) norm = s;
  }
  Scalar scaled_bound = norm * d;
  mpz_class bound = scaled_bound.get_num() / scaled_bound.get_den();
  std::size_t found = 0;
  for (mpz_class k = -bound; k <= bound && found < n; ++k) {
    Scalar lambda(k, d);
    lambda.canonicalize();
    Matrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    Matrix ker = kernel(shifted);
    if (ker.rows() == 0) continue;
    found += ker.rows();
    out.emplace(lambda, Subspace::row_space(ker));
  }
  if (found != n) throw std::domain_error("rational_eigenspaces: non-rational eigenvalues or not diagonalizable");
  return out;
}

}  // namespace cohom

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohom {

/// Arbitrary precision rational. GMP keeps results canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Scalar make_scalar(long num, long den = 1);
std::string to_string(const Scalar& x);
Scalar dot(const Vector& x, const Vector& y);
bool is_zero(const Vector& x);
Vector unit_vector(std::size_t n, std::size_t i);
Vector add(const Vector& x, const Vector& y);
Vector sub(const Vector& x, const Vector& y);
Vector scale(const Scalar& c, const Vector& x);
/// x += c * y
void axpy(Vector& x, const Scalar& c, const Vector& y);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  /// M x for a column vector x.
  Vector apply(const Vector& x) const;
  Scalar trace() const;

  bool is_zero() const;
  bool operator==(const Matrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

struct Echelon {
  Matrix form;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to the unique reduced row echelon form.
Echelon echelon(const Matrix& m);
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Rows of the result form a basis of {x : m x = 0}.
Matrix kernel(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Some solution of a x = b, if one exists.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// xᵀ F y.
Scalar bilinear(const Matrix& form, const Vector& x, const Vector& y);

/// True iff the symmetric matrix is positive definite (exact pivots test).
bool is_positive_definite(const Matrix& sym);

/// Linear subspace of ℚ^n stored as the nonzero rows of an RREF basis.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of ℚ^ambient.
  explicit Subspace(std::size_t ambient);

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> vectors() const { return basis_.row_vectors(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the stored basis; throws if v is not in the subspace.
  Vector coordinates(const Vector& v) const;

  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_sum(const std::vector<Subspace>& parts, std::size_t ambient);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
/// w ⊖ v with respect to form; form must be positive definite on w.
Subspace orthocomplement_in(const Subspace& v, const Subspace& w, const Matrix& form);
/// Image of a subspace under x ↦ map·x.
Subspace image(const Matrix& map, const Subspace& u);

/// For a candidate basis vector X, the vectors whose membership in the target
/// is required. Must be linear in X.
using InclusionAction = std::function<std::vector<Vector>(const Vector&)>;

/// {X ∈ candidates : every vector of action(X) lies in target}.
Subspace solve_inclusion_constraint(const Subspace& candidates, const InclusionAction& action,
                                    const Subspace& target);

/// Rational eigenvalues of a square matrix with their eigenspaces (as row
/// subspaces of column-vector eigenvectors). Throws std::domain_error when the
/// eigenspaces do not fill the space, i.e. the matrix is not diagonalizable
/// over ℚ.
std::map<Scalar, Subspace> rational_eigenspaces(const Matrix& m);

}  // namespace cohom

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohom/exact.hpp"

namespace cohom {

enum class FactorKind { sl, rh, ch };

/// One simple ideal of a model: where its coordinates and matrix block live.
struct FactorInfo {
  FactorKind kind = FactorKind::sl;
  std::size_t param = 0;  ///< k for sl(k), n for rh(n) and ch(n)
  std::string name;
  std::size_t coord_offset = 0;
  std::size_t dim = 0;
  std::size_t matrix_offset = 0;
  std::size_t matrix_size = 0;
};

std::string factor_name(FactorKind kind, std::size_t param);

/// A real semisimple Lie algebra given by a basis of real matrices. Every
/// element is handled through its coordinate vector in that basis.
class LieModel {
 public:
  struct Input {
    std::string name;
    std::size_t matrix_size = 0;
    std::vector<Matrix> basis;
    std::vector<Matrix> a_basis;
    /// Element of 𝔞 whose positive ad-eigenspaces span 𝔫.
    Matrix regular;
    std::vector<FactorInfo> factors;
    std::optional<Matrix> complex_structure;
  };

  explicit LieModel(Input input);

  const std::string& name() const { return name_; }
  std::size_t matrix_size() const { return matrix_size_; }
  std::size_t dim() const { return basis_.size(); }
  const Matrix& basis_matrix(std::size_t i) const { return basis_.at(i); }
  const std::vector<FactorInfo>& factors() const { return factors_; }
  const std::optional<Matrix>& complex_structure() const { return complex_structure_; }

  /// Coordinates of a matrix in the basis; throws std::domain_error if the
  /// matrix is outside span(basis).
  Vector coordinates(const Matrix& x) const;
  Matrix matrix(const Vector& x) const;

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad(x) acting on coordinate columns.
  Matrix ad(const Vector& x) const;

  const Matrix& theta() const { return theta_; }
  Vector apply_theta(const Vector& x) const { return theta_.apply(x); }
  const Matrix& killing() const { return killing_; }
  const Matrix& inner() const { return inner_; }
  Scalar killing_form(const Vector& x, const Vector& y) const { return bilinear(killing_, x, y); }
  Scalar inner_product(const Vector& x, const Vector& y) const { return bilinear(inner_, x, y); }

  const Subspace& k() const { return k_; }
  const Subspace& p() const { return p_; }
  const Subspace& a() const { return a_; }
  const Subspace& n() const { return n_; }
  const Vector& regular_element() const { return regular_; }

  /// (id+θ)/2 and (id−θ)/2 as coordinate matrices.
  const Matrix& pi_k() const { return pi_k_; }
  const Matrix& pi_p() const { return pi_p_; }

  struct IwasawaParts {
    Vector k, a, n;
  };
  IwasawaParts iwasawa_project(const Vector& x) const;

  /// Coordinates of the i-th factor ideal as a subspace.
  Subspace factor_block(std::size_t i) const;
  /// Index of the factor whose block contains every nonzero coordinate of x.
  std::optional<std::size_t> factor_of(const Vector& x) const;

 private:
  std::string name_;
  std::size_t matrix_size_ = 0;
  std::vector<Matrix> basis_;
  std::vector<FactorInfo> factors_;
  std::optional<Matrix> complex_structure_;

  std::vector<std::size_t> coord_positions_;
  Matrix coord_inverse_;
  /// sc_[i * dim + j]: nonzero (k, c) with [b_i, b_j] = Σ c b_k.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sc_;

  Matrix theta_;
  Matrix killing_;
  Matrix inner_;
  Matrix pi_k_;
  Matrix pi_p_;
  Subspace k_, p_, a_, n_;
  Vector regular_;
  Matrix iwasawa_inverse_;
  std::size_t dim_k_ = 0;
  std::size_t dim_a_ = 0;
};

using ModelPtr = std::shared_ptr<const LieModel>;

/// sl(n+1, ℝ): traceless matrices, 𝔞 diagonal, 𝔫 strictly upper triangular.
ModelPtr build_sl(std::size_t n_plus_1);
/// so(1,n) for real hyperbolic space ℝH^n.
ModelPtr build_so1n(std::size_t n);
/// su(1,n) realified to 2(n+1)×2(n+1) real matrices commuting with J.
ModelPtr build_su1n(std::size_t n);
ModelPtr build_factor(FactorKind kind, std::size_t param);

struct ProductModel {
  std::vector<ModelPtr> factors;
  std::vector<std::size_t> block_offsets;
  ModelPtr model;  ///< block-diagonal assembly
};

ProductModel direct_sum(const std::vector<ModelPtr>& models);

Vector bracket(const LieModel& model, const Vector& x, const Vector& y);
Scalar killing_form(const LieModel& model, const Vector& x, const Vector& y);
LieModel::IwasawaParts iwasawa_project(const LieModel& model, const Vector& x);

/// span{[u, v] : u ∈ U, v ∈ V}.
Subspace bracket_span(const LieModel& model, const Subspace& u, const Subspace& v);
bool is_subalgebra(const LieModel& model, const Subspace& h);
/// {X ∈ candidates : [X, target] ⊆ target}.
Subspace normalizer(const LieModel& model, const Subspace& candidates, const Subspace& target);
Subspace theta_image(const LieModel& model, const Subspace& u);
bool is_theta_invariant(const LieModel& model, const Subspace& u);

/// Matrix unit E_{rc} of the given size.
Matrix matrix_unit(std::size_t size, std::size_t r, std::size_t c);

}  // namespace cohom

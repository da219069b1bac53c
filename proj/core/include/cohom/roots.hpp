#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cohom/exact.hpp"
#include "cohom/lie_model.hpp"

namespace cohom {

/// Subset of the simple roots, bit i standing for α_{i+1}.
using RootMask = std::uint32_t;

RootMask mask_of(const std::vector<std::size_t>& indices);
std::vector<std::size_t> mask_indices(RootMask mask);
std::size_t mask_size(RootMask mask);
bool mask_contains(RootMask outer, RootMask inner);
/// "{1,3}" with 1-based root labels.
std::string mask_label(RootMask mask);

struct Root {
  Vector covector;     ///< λ evaluated on the stored basis of 𝔞
  Vector root_vector;  ///< H_λ in 𝔤 coordinates
  std::vector<long> simple_coeffs;
  Subspace space;
  bool positive = false;
  std::size_t factor = 0;
};

struct RootDatum {
  ModelPtr model;
  std::vector<Vector> a_basis;  ///< the basis of 𝔞 the covectors refer to
  Matrix a_gram;                ///< ⟨·,·⟩ on that basis
  std::vector<Root> roots;
  std::vector<std::size_t> positive;
  std::vector<std::size_t> simple;  ///< ordered Λ, as indices into roots
  Subspace zero_space;
  Subspace k0;
  std::vector<std::vector<long>> cartan;  ///< 2⟨H_i,H_j⟩/⟨H_j,H_j⟩, integers
  std::map<Vector, std::size_t> by_covector;

  std::size_t rank() const { return simple.size(); }
  std::size_t dim() const { return model->dim(); }
  RootMask all_simple() const { return rank() == 0 ? 0 : static_cast<RootMask>((1u << rank()) - 1); }
  const Root& simple_root(std::size_t i) const { return roots.at(simple.at(i)); }
  std::size_t multiplicity(std::size_t root) const { return roots.at(root).space.dim(); }
  bool dynkin_edge(std::size_t i, std::size_t j) const { return i != j && cartan[i][j] != 0; }
  /// Index of the root with the given simple coefficients, if it is a root.
  std::optional<std::size_t> find_by_coeffs(const std::vector<long>& coeffs) const;
  /// Evaluate a covector on an element of 𝔞 (given in 𝔤 coordinates).
  Scalar evaluate(const Vector& covector, const Vector& h) const;
  /// Coordinates of h ∈ 𝔞 in a_basis.
  Vector a_coordinates(const Vector& h) const;
  /// Simple roots of the given factor, in order.
  RootMask factor_mask(std::size_t factor) const;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

/// Simultaneous eigenspace decomposition of ad(𝔞).
DatumPtr decompose(ModelPtr model);

/// Connected components of phi under the Dynkin adjacency, ordered by lowest root.
std::vector<RootMask> dynkin_components(const RootDatum& datum, RootMask phi);

struct SigmaPhi {
  std::vector<std::size_t> all;       ///< Σ_Φ
  std::vector<std::size_t> positive;  ///< Σ_Φ⁺
};
SigmaPhi sigma_phi(const RootDatum& datum, RootMask phi);

/// Sum of root spaces for the given root indices.
Subspace root_space_sum(const RootDatum& datum, const std::vector<std::size_t>& roots);

}  // namespace cohom

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cohom/roots.hpp"

namespace cohom {

struct ParabolicDatum {
  DatumPtr datum;
  RootMask phi = 0;
  SigmaPhi sigma;
  Subspace l;        ///< 𝔩_Φ
  Subspace a_phi;    ///< 𝔞_Φ
  Subspace n_phi;    ///< 𝔫_Φ
  Subspace m;        ///< 𝔪_Φ
  Subspace k_phi;    ///< 𝔨_Φ
  Subspace a_upper;  ///< 𝔞^Φ
  Subspace n_upper;  ///< 𝔫^Φ
  Subspace b;        ///< 𝔟_Φ
  Subspace s;        ///< 𝔰_Φ
  Subspace q;        ///< 𝔮_Φ
  /// Set only when Φ = Λ∖{α_j}.
  std::optional<std::size_t> removed;
  std::optional<Vector> h_j;
  std::map<long, Subspace> grading;

  const LieModel& model() const { return *datum->model; }
};

using ParabolicPtr = std::shared_ptr<const ParabolicDatum>;

ParabolicPtr build_parabolic(DatumPtr datum, RootMask phi);

/// ν ↦ 𝔫_Φ^ν for Φ = Λ∖{α_j}.
std::map<long, Subspace> grade_nilpotent(const ParabolicDatum& pd);

struct NestedParabolicDatum {
  RootMask psi = 0;
  RootMask phi = 0;
  Subspace l_np;  ///< 𝔩_{Ψ,Φ}
  Subspace n_np;  ///< 𝔫_{Ψ,Φ}
  Subspace a_np;  ///< 𝔞_{Ψ,Φ}
  Subspace m_np;  ///< 𝔪_{Ψ,Φ}
  Subspace k_np;  ///< 𝔨_{Ψ,Φ}
  Subspace q_np;  ///< 𝔮_{Ψ,Φ}
};

/// Throws std::logic_error if 𝔮_{Ψ,Φ} differs from 𝔮_Ψ ∩ 𝔰_Φ.
NestedParabolicDatum build_nested(const ParabolicDatum& psi, const ParabolicDatum& phi);

/// Memoizes parabolic data of one root datum by Φ.
class ParabolicCache {
 public:
  explicit ParabolicCache(DatumPtr datum) : datum_(std::move(datum)) {}
  const DatumPtr& datum() const { return datum_; }
  ParabolicPtr get(RootMask phi);
  const NestedParabolicDatum& nested(RootMask psi, RootMask phi);

 private:
  DatumPtr datum_;
  std::map<RootMask, ParabolicPtr> cache_;
  std::map<std::pair<RootMask, RootMask>, NestedParabolicDatum> nested_;
};

struct TensorPair {
  std::size_t i = 0;  ///< e_i, 1-based
  std::size_t l = 0;  ///< f^l, 1-based
  std::size_t root = 0;
  Vector generator;
};

struct TensorIdentification {
  std::size_t n = 0;
  std::size_t j = 0;
  std::vector<TensorPair> pairs;  ///< ordered by (i, l)
  bool spans_nilradical = false;
  bool action_matches = false;
  /// Coordinates of x ∈ 𝔫_{Λ∖{α_j}} in the e_i⊗f^l basis.
  Vector tensor_coordinates(const Vector& x) const;
  /// Element of 𝔫_{Λ∖{α_j}} with the given tensor coordinates.
  Vector from_tensor(const Vector& t) const;
};

/// Identifies 𝔫_{Λ∖{α_j}} of sl(n+1) with ℝ^j ⊗ (ℝ^{n−j+1})* and checks that
/// 𝔩_Φ acts by A ⊗ 1 − 1 ⊗ Bᵀ. j is 1-based.
TensorIdentification tensor_model_check(const DatumPtr& datum, std::size_t j);

}  // namespace cohom

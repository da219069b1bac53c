#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cohom/parabolic.hpp"

namespace cohom {

enum class ActionKind { FH, FS, CEI, CER, NC, Product };

std::string kind_name(ActionKind kind);

struct ActionSpec;
using SpecPtr = std::shared_ptr<const ActionSpec>;

struct FhData {
  Vector line;  ///< generator of ℓ ⊂ 𝔞
};

struct FsData {
  std::size_t root = 0;  ///< 0-based simple root index
  Vector line;           ///< generator of ℓ ⊂ 𝔤_{α_j}
};

struct CeiData {
  RootMask phi = 0;
  std::string name;
  Subspace h_phi;
};

struct CerData {
  std::size_t left = 0;   ///< simple root index, or factor index when factor_level
  std::size_t right = 0;
  bool factor_level = false;
  bool theta_equivariant = false;
  Matrix sigma;  ///< coordinate map, meaningful on source
  Subspace source;
  Subspace target;
  Subspace h_phi;  ///< {X + σX : X ∈ source}
  RootMask phi = 0;
};

struct NcData {
  std::size_t removed = 0;  ///< 0-based j with Φ = Λ∖{α_j}
  Subspace v;
  Subspace complement;  ///< 𝔫_Φ ⊖ 𝔳
  Subspace normalizer;  ///< N_{𝔩_Φ}(𝔫_Φ ⊖ 𝔳)
  bool theta_dual_holds = false;
  /// Set by builders whose 𝔳 is expected to give 𝔥 ⊇ 𝔞 ⊕ (𝔫 ⊖ 𝔳).
  bool expect_a_plus_n = false;
};

struct ProductData {
  std::size_t factor = 0;
  SpecPtr inner;
  /// Coordinate offset of the factor inside the product model.
  std::size_t offset = 0;
};

struct ActionSpec {
  ActionKind kind = ActionKind::FH;
  std::variant<FhData, FsData, CeiData, CerData, NcData, ProductData> data;
  DatumPtr datum;
  /// Parabolic datum the construction used, if any.
  ParabolicPtr parabolic;
  Subspace algebra;

  const LieModel& model() const { return *datum->model; }
};

/// Raised when a constructor's precondition fails.
class ActionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SpecPtr make_fh(DatumPtr datum, const Vector& line);
SpecPtr make_fs(DatumPtr datum, std::size_t root, const Vector& line);
/// 𝔥_Φ ⊕ 𝔞_Φ ⊕ 𝔫_Φ.
SpecPtr canonical_extend(const ParabolicPtr& pd, const Subspace& h_phi, std::string name = {});

/// h_Ψ ⊕ 𝔞_{Ψ,Φ} ⊕ 𝔫_{Ψ,Φ}, the extension from B_Ψ to B_Φ.
Subspace extend_within(const NestedParabolicDatum& nd, const Subspace& h_psi);

/// Bracket-preserving bijection check on a basis of source.
bool is_isomorphism(const LieModel& g, const Matrix& sigma, const Subspace& source, const Subspace& target);

struct SigmaChoice {
  Matrix sigma;
  bool theta_equivariant = false;
};

/// 𝔰_{α_j} → 𝔰_{α_k}: block shift between identical factors when it lands in
/// the target, otherwise an 𝔰𝔩₂-triple map.
SigmaChoice default_sigma(ParabolicCache& cache, std::size_t j, std::size_t k);

/// {X + σX : X ∈ 𝔰_{α_j}} canonically extended over Φ = {α_j, α_k}.
SpecPtr make_cer(ParabolicCache& cache, std::size_t j, std::size_t k, const SigmaChoice& sigma);

/// {X + σX : X ∈ 𝔤_j} for two factor ideals of a product, with σ the block
/// shift. Not extended; used for the diagonal slice checks.
SpecPtr make_diagonal(DatumPtr datum, std::size_t left, std::size_t right);

/// N_{𝔩_Φ}(𝔫_Φ ⊖ 𝔳) ⊕ (𝔫_Φ ⊖ 𝔳) for Φ = Λ∖{α_j}.
SpecPtr nilpotent_construct(const ParabolicPtr& pd, const Subspace& v, bool expect_a_plus_n = false);

/// Embed a factor-local vector into product coordinates.
Vector embed_factor_vector(const ProductModel& pm, std::size_t factor, const Vector& x);
Subspace embed_factor_subspace(const ProductModel& pm, std::size_t factor, const Subspace& u);

/// ⊕_{i≠j} 𝔤_i ⊕ 𝔥_j.
SpecPtr product_assemble(const ProductModel& pm, DatumPtr product_datum, std::size_t factor, SpecPtr inner);

struct NamedSubalgebra {
  std::string name;
  Subspace algebra;
};

/// Standard embeddings of the subalgebras 𝔥_Φ ⊆ 𝔰_Φ used by the tables.
/// Φ must be connected and lie in a single factor. ch(n) entries need
/// allow_ch.
std::vector<NamedSubalgebra> builtin_cei_catalog(ParabolicCache& cache, RootMask phi, bool allow_ch = false);

/// 𝔩_{Ψ,Φ} with Ψ = Φ minus its first root, the mirror of the catalog entry.
NamedSubalgebra mirrored_levi(ParabolicCache& cache, RootMask phi);

}  // namespace cohom

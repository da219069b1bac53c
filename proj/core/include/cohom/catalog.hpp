#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohom/verify.hpp"

namespace cohom {

struct FactorSpec {
  FactorKind kind = FactorKind::sl;
  std::size_t param = 0;
  bool operator==(const FactorSpec&) const = default;
};

struct CatalogOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 32;
  std::size_t max_sl_rank = 7;
  /// Extension-chain checks run only up to this rank.
  std::size_t max_chain_rank = 4;
  bool su1n = false;
  bool nc_search = false;
  std::size_t oracle_probes = 256;
};

struct CatalogEntry {
  std::string label;
  SpecPtr spec;
  std::string h_name;    ///< name of 𝔥_Φ or of the family
  std::string phi;       ///< e.g. "{1,2}"
  std::string boundary;  ///< description of B_Φ
  std::string comment;
  std::size_t expected_codim = 0;  ///< table value
  VerificationReport report;
};

struct OracleCandidate {
  std::string source;  ///< "coordinate" or "random"
  std::vector<std::size_t> coords;
  Subspace v;
  TriState nc1 = TriState::not_checked;
  TriState nc2 = TriState::not_checked;
  Nc2Certificate nc2_certificate = Nc2Certificate::none;
  /// "exact-tangent", "type-and-dimension", "none", or empty when not passing.
  std::string match;
  bool passes() const { return nc1 == TriState::yes && nc2 == TriState::yes; }
};

struct OracleReport {
  std::size_t n = 0;
  std::size_t j = 0;  ///< 1-based
  std::size_t grade_one_dim = 0;
  std::size_t subsets = 0;
  std::size_t rejected_small = 0;  ///< candidates with dim 𝔳 < 2
  std::size_t probes = 0;
  std::size_t passing = 0;
  std::size_t unmatched = 0;
  std::vector<OracleCandidate> candidates;
};

struct Catalog {
  std::string space;
  std::vector<CatalogEntry> entries;
  std::vector<IdentityResult> identities;
  std::vector<std::string> notes;
  std::vector<OracleReport> oracle;

  bool passed() const;
};

/// Families of cohomogeneity one actions on SL_{n+1}(ℝ)/SO_{n+1}.
Catalog enumerate_sl(std::size_t n, const CatalogOptions& options);
Catalog enumerate_sl_model(ModelPtr model, const CatalogOptions& options);

/// Products of rank-one factors rh(n), ch(n).
Catalog enumerate_rank1_product(const std::vector<FactorSpec>& factors, const CatalogOptions& options);
Catalog enumerate_rank1_model(const ProductModel& pm, const CatalogOptions& options);

/// Any product: product-level FH and CER plus factor entries assembled.
Catalog enumerate_mixed_product(const std::vector<FactorSpec>& factors, const CatalogOptions& options);

/// Relabel a table label under the diagram flip j ↦ n+1−j.
std::string reverse_label(const std::string& label, std::size_t n);

struct ChainReport {
  std::size_t chains = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;
};

/// (𝔥_Ψ^Φ)^Λ = 𝔥_Ψ^Λ for every Ψ ⊆ Φ ⊆ Λ with 𝔥_Ψ = 𝔨 ∩ 𝔰_Ψ.
ChainReport check_extension_chains(ParabolicCache& cache);

struct StandardNcCase {
  std::size_t j = 0;  ///< 1-based removed root
  std::size_t k = 0;  ///< dim 𝔳
  bool mirrored = false;
  RootMask phi = 0;
  RootMask psi = 0;
  Subspace v;
};

/// Subspaces ⊕_i 𝔤_{α_i+…+α_j} (and their diagram mirrors) of dimension ≥ 2
/// in sl(n+1).
std::vector<StandardNcCase> standard_nc_cases(const RootDatum& datum);

struct StandardNcReport {
  bool extension_contained = false;  ///< 𝔥_Φ^Λ ⊆ 𝔥_{Λ∖{α_j},𝔳}
  bool nc1 = false;
  bool nc2_contains_so = false;
  bool projection = false;  ///< (𝔩_{Ψ,Φ}^Λ)_{𝔞⊕𝔫} = 𝔞 ⊕ (𝔫 ⊖ 𝔳)
  bool contains_a_plus_n = false;
  bool ok() const { return extension_contained && nc1 && nc2_contains_so && projection && contains_a_plus_n; }
};

StandardNcReport check_standard_nc(ParabolicCache& cache, const StandardNcCase& c, std::uint64_t seed, std::size_t samples);

/// Brute-force search over coordinate subspaces of 𝔫_Φ¹ (tensor basis) plus
/// seeded random subspaces, Φ = Λ∖{α_j}, sl(n+1) with n ≤ 3.
OracleReport nc_oracle_search(std::size_t n, std::size_t j, const CatalogOptions& options);

}  // namespace cohom

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cohom/actions.hpp"

namespace cohom {

enum class Certainty { exact, sampled };
enum class TriState { yes, no, not_checked };
enum class Nc2Certificate { none, contains_so, sampled_tangent, failed_witness };

std::string to_string(Certainty c);
std::string to_string(TriState t);
std::string to_string(Nc2Certificate c);

/// Seeded source of small rational combinations, coefficients in {−3..3}.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  long coefficient() { return static_cast<long>(rng_() % 7) - 3; }
  std::uint64_t next() { return rng_(); }
  /// Nonzero combination of the given vectors (which must not all vanish).
  Vector combination(const std::vector<Vector>& basis);

 private:
  std::mt19937_64 rng_;
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 32;
};

/// π_𝔭(𝔥).
Subspace orbit_tangent_at_o(const LieModel& g, const Subspace& h);

struct SliceResult {
  std::size_t normal_dim = 0;
  std::size_t isotropy_dim = 0;
  std::size_t max_rank = 0;
  std::size_t cohomogeneity = 0;
  Certainty certainty = Certainty::exact;
};

/// Cohomogeneity of 𝔥∩𝔨 acting on ν = 𝔭 ⊖ π_𝔭(𝔥). Throws std::domain_error if
/// [𝔥∩𝔨, ν] ⊄ ν.
SliceResult slice_cohomogeneity(const LieModel& g, const Subspace& h, std::uint64_t seed, std::size_t samples);

/// [[b,b],b] ⊆ b. Throws std::invalid_argument if b ⊄ 𝔭.
bool check_lie_triple(const LieModel& g, const Subspace& b);

struct Nc1Result {
  bool passed = false;
  bool contains_a_upper = false;  ///< π_𝔭(N) ⊇ 𝔞^Φ
  Subspace projected;             ///< π_𝔭 N_{𝔪_Φ}(𝔫_Φ ⊖ 𝔳)
};

Nc1Result check_nc1(const ParabolicDatum& pd, const Subspace& v);

struct Nc2Result {
  TriState verdict = TriState::not_checked;
  Nc2Certificate certificate = Nc2Certificate::none;
  std::size_t image_dim = 0;  ///< dim of N_{𝔨_Φ}(𝔳) restricted to 𝔳
  std::size_t samples_used = 0;
};

Nc2Result check_nc2(const ParabolicDatum& pd, const Subspace& v, std::uint64_t seed, std::size_t samples);

struct PolarCertificate {
  bool in_p = false;
  bool abelian = false;
  bool orthogonal_to_tangent = false;
  bool orthogonal_display = false;
  std::size_t section_dim = 0;
  bool passed() const { return in_p && abelian && orthogonal_to_tangent && orthogonal_display; }
};

/// Section 𝔞_σ of a CER spec: the complement of {X + σX : X ∈ 𝔞 ∩ source}
/// inside (𝔞 ∩ source) ⊕ σ(𝔞 ∩ source).
PolarCertificate check_polar_certificate(const ActionSpec& cer);

struct IdentityResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::size_t dim_m = 0;
  std::size_t orbit_dim_at_o = 0;
  std::size_t codim_at_o = 0;
  SliceResult slice;
  TriState totally_geodesic = TriState::not_checked;
  std::string tg_scope;  ///< "ambient", "boundary-component" or empty
  TriState nc1 = TriState::not_checked;
  TriState nc2 = TriState::not_checked;
  Nc2Certificate nc2_certificate = Nc2Certificate::none;
  std::vector<IdentityResult> notes;

  std::size_t cohomogeneity() const { return slice.cohomogeneity; }
  bool identities_pass() const;
};

VerificationReport verify(const ActionSpec& spec, const VerifyConfig& config);

/// Structural checks of one model and its parabolic data: Jacobi, θ as an
/// automorphism, ad-invariance of ℬ, root-grading containments, the Lie
/// triple property of every 𝔟_Φ and the nested parabolic identities for
/// every Ψ ⊆ Φ. Parabolic checks are skipped above max_rank.
std::vector<IdentityResult> structural_invariants(ParabolicCache& cache, std::size_t max_rank = 4);

}  // namespace cohom

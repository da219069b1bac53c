#include <gtest/gtest.h>

#include "cohom/verify.hpp"
#include "test_support.hpp"

using namespace cohom;

namespace {

RootMask bit(std::size_t i) { return static_cast<RootMask>(1u << i); }

}  // namespace

TEST(Verify, IsotropyOfTheBasePoint) {
  // K fixes o; its slice representation is the isotropy representation, of
  // cohomogeneity equal to the rank.
  const ModelPtr rh = build_so1n(3);
  const SliceResult r1 = slice_cohomogeneity(*rh, rh->k(), 1, 32);
  EXPECT_EQ(r1.normal_dim, 3u);
  EXPECT_EQ(r1.cohomogeneity, 1u);
  EXPECT_EQ(r1.certainty, Certainty::exact);

  const ModelPtr sl3 = build_sl(3);
  const SliceResult r2 = slice_cohomogeneity(*sl3, sl3->k(), 1, 32);
  EXPECT_EQ(r2.normal_dim, 5u);
  EXPECT_EQ(r2.cohomogeneity, 2u);
  EXPECT_EQ(r2.certainty, Certainty::sampled);
}

TEST(Verify, TransitiveGroupHasCohomogeneityZero) {
  const ModelPtr g = build_sl(3);
  const SliceResult r = slice_cohomogeneity(*g, subspace_sum(g->a(), g->n()), 1, 8);
  EXPECT_EQ(r.normal_dim, 0u);
  EXPECT_EQ(r.cohomogeneity, 0u);
}

TEST(Verify, LieTripleAgainstMatrixOracle) {
  const ModelPtr g = build_sl(3);
  EXPECT_TRUE(check_lie_triple(*g, g->p()));
  EXPECT_TRUE(check_lie_triple(*g, g->a()));
  EXPECT_THROW(check_lie_triple(*g, g->k()), std::invalid_argument);
  // Two-dimensional b = span{X, Y} ⊂ 𝔭; [[X,Y],X] and [[X,Y],Y] by matrices.
  auto e = [](std::size_t r, std::size_t c) { return matrix_unit(3, r, c); };
  const Matrix x0 = e(0, 1) + e(1, 0);
  const std::vector<Matrix> ys = {e(1, 2) + e(2, 1), e(0, 2) + e(2, 0) + e(0, 0) - e(1, 1),
                                  e(1, 2) + e(2, 1) + e(0, 0) - e(2, 2)};
  std::size_t non_triples = 0;
  for (const auto& ym : ys) {
    const Subspace b = Subspace::span(g->dim(), {g->coordinates(x0), g->coordinates(ym)});
    const Matrix xy = x0 * ym - ym * x0;
    const bool oracle = b.contains(g->coordinates(xy * x0 - x0 * xy)) && b.contains(g->coordinates(xy * ym - ym * xy));
    EXPECT_EQ(check_lie_triple(*g, b), oracle);
    non_triples += oracle ? 0 : 1;
  }
  EXPECT_GT(non_triples, 0u);
}

TEST(Verify, BoundaryPointActionsHaveRankCohomogeneity) {
  // (𝔨 ∩ 𝔰_Φ)^Λ fixes o in B_Φ; codim = dim 𝔟_Φ and cohomogeneity = |Φ|.
  const DatumPtr d = decompose(build_sl(4));
  ParabolicCache cache(d);
  for (RootMask phi : {RootMask{0b001}, RootMask{0b101}, RootMask{0b011}}) {
    const auto pd = cache.get(phi);
    const auto spec = canonical_extend(pd, subspace_intersect(d->model->k(), pd->s));
    const VerificationReport r = verify(*spec, {3, 32});
    EXPECT_EQ(r.codim_at_o, pd->b.dim()) << mask_label(phi);
    EXPECT_EQ(r.cohomogeneity(), mask_size(phi)) << mask_label(phi);
  }
}

TEST(Verify, NcConditionsOnTypeA) {
  const DatumPtr d = decompose(build_sl(4));
  ParabolicCache cache(d);
  const auto pd = cache.get(0b101);
  const TensorIdentification tm = tensor_model_check(d, 2);
  auto gen = [&](std::size_t i, std::size_t l) {
    for (const auto& p : tm.pairs)
      if (p.i == i && p.l == l) return p.generator;
    throw std::logic_error("missing pair");
  };
  const std::size_t dim = d->model->dim();
  // ℝ² ⊗ f¹: passes both with the so-containment certificate.
  const Subspace good = Subspace::span(dim, {gen(1, 1), gen(2, 1)});
  EXPECT_TRUE(check_nc1(*pd, good).passed);
  const Nc2Result nc2 = check_nc2(*pd, good, 1, 32);
  EXPECT_EQ(nc2.verdict, TriState::yes);
  EXPECT_EQ(nc2.certificate, Nc2Certificate::contains_so);
  // Contains e₁⊗f¹ + e₂⊗f²: the 𝔞^Φ-deficiency rules it out.
  const Subspace bad = Subspace::span(dim, {add(gen(1, 1), gen(2, 2)), gen(1, 2)});
  const Nc1Result r = check_nc1(*pd, bad);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.contains_a_upper);
  EXPECT_EQ(check_nc2(*pd, bad, 1, 32).verdict, TriState::no);
}

TEST(Verify, ReportOfNcEntry) {
  const DatumPtr d = decompose(build_sl(4));
  ParabolicCache cache(d);
  const auto pd = cache.get(0b101);
  const auto spec = nilpotent_construct(pd, pd->grading.at(1));
  // 𝔳 = 𝔫_Φ¹: ℝ²⊗ℝ² is not protohomogeneous under SO₂×SO₂.
  const VerificationReport r = verify(*spec, {1, 32});
  EXPECT_EQ(r.nc2, TriState::no);
  EXPECT_NE(r.cohomogeneity(), 1u);
}

TEST(Verify, DiagonalSlices) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const ProductModel pm = direct_sum({build_so1n(n), build_so1n(n)});
    const auto spec = make_diagonal(decompose(pm.model), 0, 1);
    const VerificationReport r = verify(*spec, {1, 32});
    EXPECT_EQ(r.codim_at_o, n);
    EXPECT_EQ(r.cohomogeneity(), 1u);
    EXPECT_TRUE(check_polar_certificate(*spec).passed());
  }
  const ProductModel sl = direct_sum({build_sl(3), build_sl(3)});
  const auto spec = make_diagonal(decompose(sl.model), 0, 1);
  for (std::uint64_t seed : {1u, 2u, 3u}) EXPECT_EQ(verify(*spec, {seed, 32}).cohomogeneity(), 2u);
  const PolarCertificate pc = check_polar_certificate(*spec);
  EXPECT_TRUE(pc.passed());
  EXPECT_EQ(pc.section_dim, 2u);
}

TEST(Verify, StructuralInvariantsPass) {
  const DatumPtr d = decompose(direct_sum({build_sl(3), build_so1n(2)}).model);
  ParabolicCache cache(d);
  for (const auto& r : structural_invariants(cache)) EXPECT_TRUE(r.passed) << r.name << " " << r.detail;
}

TEST(VerifyProperty, ThetaDualNormalizer) {
  // N_𝔩(𝔫 ⊖ 𝔳) = θ N_𝔩(𝔳) for random 𝔳 ⊆ 𝔫_Φ¹.
  const DatumPtr d = decompose(build_sl(5));
  ParabolicCache cache(d);
  const LieModel& g = *d->model;
  testsupport::Gen gen(31);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t j = 1 + gen.below(4);
    const auto pd = cache.get(d->all_simple() & ~bit(j - 1));
    const Subspace& n1 = pd->grading.at(1);
    std::vector<Vector> rows;
    const std::size_t k = 1 + gen.below(n1.dim());
    for (std::size_t t = 0; t < k; ++t) rows.push_back(gen.combination(n1.vectors()));
    const Subspace v = Subspace::span(g.dim(), rows);
    const Subspace comp = orthocomplement_in(v, pd->n_phi, g.inner());
    EXPECT_EQ(normalizer(g, pd->l, comp), theta_image(g, normalizer(g, pd->l, v)));
  }
}

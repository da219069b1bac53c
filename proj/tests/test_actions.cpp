#include <gtest/gtest.h>

#include "cohom/actions.hpp"

using namespace cohom;

namespace {

RootMask bit(std::size_t i) { return static_cast<RootMask>(1u << i); }

struct Sl {
  explicit Sl(std::size_t size) : datum(decompose(build_sl(size))), cache(datum) {}
  DatumPtr datum;
  ParabolicCache cache;
  const LieModel& g() const { return *datum->model; }
};

}  // namespace

TEST(Actions, FhAndFsDimensions) {
  Sl s(4);
  const auto fh = make_fh(s.datum, s.datum->simple_root(0).root_vector);
  EXPECT_EQ(fh->kind, ActionKind::FH);
  EXPECT_EQ(fh->algebra.dim(), 2u + 6u);  // (𝔞 ⊖ ℓ) ⊕ 𝔫
  const auto fs = make_fs(s.datum, 1, s.datum->simple_root(1).space.basis_vector(0));
  EXPECT_EQ(fs->algebra.dim(), 3u + 5u);  // 𝔞 ⊕ (𝔫 ⊖ ℓ)
  EXPECT_TRUE(is_subalgebra(s.g(), fs->algebra));
}

TEST(Actions, ConstructorPreconditions) {
  Sl s(4);
  const Vector n_vec = s.datum->simple_root(0).space.basis_vector(0);
  EXPECT_THROW(make_fh(s.datum, n_vec), ActionError);
  EXPECT_THROW(make_fh(s.datum, Vector(s.g().dim())), ActionError);
  EXPECT_THROW(make_fs(s.datum, 7, n_vec), ActionError);
  EXPECT_THROW(make_fs(s.datum, 1, n_vec), ActionError);
  // 𝔥_Φ outside 𝔰_Φ.
  EXPECT_THROW(canonical_extend(s.cache.get(bit(0)), s.g().k()), ActionError);
  // Adjacent roots for the diagonal construction.
  EXPECT_THROW(make_cer(s.cache, 0, 1, SigmaChoice{Matrix::identity(s.g().dim()), true}), ActionError);
  EXPECT_THROW(make_cer(s.cache, 0, 0, SigmaChoice{Matrix::identity(s.g().dim()), true}), ActionError);
  // 𝔳 too small, and Φ not maximal.
  const auto pd = s.cache.get(0b101);
  EXPECT_THROW(nilpotent_construct(pd, Subspace::span(s.g().dim(), {n_vec})), ActionError);
  EXPECT_THROW(nilpotent_construct(s.cache.get(0b001), Subspace::span(s.g().dim(), {n_vec})), ActionError);
}

TEST(Actions, CanonicalExtensionContainsBoundaryData) {
  Sl s(4);
  const RootMask phi = 0b011;
  const auto pd = s.cache.get(phi);
  const auto h = builtin_cei_catalog(s.cache, phi).at(0);
  EXPECT_EQ(h.name, "sl(2)+R");
  const auto spec = canonical_extend(pd, h.algebra, h.name);
  EXPECT_TRUE(spec->algebra.contains(pd->n_phi));
  EXPECT_TRUE(spec->algebra.contains(pd->a_phi));
  EXPECT_EQ(spec->algebra.dim(), h.algebra.dim() + pd->a_phi.dim() + pd->n_phi.dim());
}

TEST(Actions, BuiltinCatalogNames) {
  Sl s(5);
  EXPECT_EQ(builtin_cei_catalog(s.cache, 0b0001).at(0).name, "so(2)");
  const auto three = builtin_cei_catalog(s.cache, 0b0111);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[1].name, "sp(2,R)");
  // sp(2,ℝ) has dimension 10.
  EXPECT_EQ(three[1].algebra.dim(), 10u);
  EXPECT_THROW(builtin_cei_catalog(s.cache, 0b0101), ActionError);

  const DatumPtr rh = decompose(build_so1n(4));
  ParabolicCache rc(rh);
  const auto list = builtin_cei_catalog(rc, 1);
  ASSERT_EQ(list.size(), 4u);
  EXPECT_EQ(list[0].name, "so(4)");
  EXPECT_EQ(list[2].name, "so(1,2)+so(2)");
  EXPECT_EQ(list[3].name, "so(1,3)");
  // so(1,k) ⊕ so(4−k) dimensions.
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(list[k].algebra.dim(), k * (k + 1) / 2 + (4 - k) * (3 - k) / 2);

  const DatumPtr ch = decompose(build_su1n(2));
  ParabolicCache cc(ch);
  EXPECT_THROW(builtin_cei_catalog(cc, 1), ActionError);
  EXPECT_EQ(builtin_cei_catalog(cc, 1, true).size(), 3u);
}

TEST(Actions, DefaultSigmaOnTypeA) {
  Sl s(4);
  const SigmaChoice c = default_sigma(s.cache, 0, 2);
  EXPECT_TRUE(c.theta_equivariant);
  EXPECT_TRUE(is_isomorphism(s.g(), c.sigma, s.cache.get(bit(0))->s, s.cache.get(bit(2))->s));
  const auto spec = make_cer(s.cache, 0, 2, c);
  const auto& data = std::get<CerData>(spec->data);
  EXPECT_EQ(data.h_phi.dim(), 3u);
}

TEST(Actions, MultiplicityMismatchRejected) {
  const ProductModel pm = direct_sum({build_so1n(2), build_so1n(3)});
  const DatumPtr d = decompose(pm.model);
  ParabolicCache cache(d);
  EXPECT_THROW(make_cer(cache, 0, 1, SigmaChoice{Matrix::identity(pm.model->dim()), true}), ActionError);
}

TEST(Actions, NilpotentConstructionOfFullGradeOne) {
  // 𝔳 = 𝔫_Φ¹ gives 𝔥 = 𝔩_Φ.
  Sl s(3);
  const auto pd = s.cache.get(0b10);
  const auto spec = nilpotent_construct(pd, pd->grading.at(1));
  EXPECT_EQ(spec->algebra, pd->l);
  const auto& nc = std::get<NcData>(spec->data);
  EXPECT_TRUE(nc.complement.is_zero());
  EXPECT_TRUE(nc.theta_dual_holds);
}

TEST(Actions, ProductAssembly) {
  const ProductModel pm = direct_sum({build_so1n(3), build_so1n(3)});
  const DatumPtr d = decompose(pm.model);
  const DatumPtr f0 = decompose(pm.factors[0]);
  ParabolicCache fc(f0);
  const auto inner = canonical_extend(fc.get(1), builtin_cei_catalog(fc, 1).at(0).algebra);
  const auto spec = product_assemble(pm, d, 0, inner);
  EXPECT_EQ(spec->algebra.dim(), inner->algebra.dim() + 6u);
  EXPECT_TRUE(spec->algebra.contains(pm.model->factor_block(1)));
  EXPECT_THROW(product_assemble(pm, d, 5, inner), ActionError);
  EXPECT_THROW(product_assemble(pm, decompose(pm.factors[0]), 0, inner), ActionError);
  const Vector e = embed_factor_vector(pm, 1, unit_vector(6, 2));
  EXPECT_EQ(e, unit_vector(12, 8));
}

TEST(Actions, DiagonalNeedsIsomorphicFactors) {
  const ProductModel same = direct_sum({build_so1n(2), build_so1n(2)});
  const auto diag = make_diagonal(decompose(same.model), 0, 1);
  EXPECT_EQ(diag->algebra.dim(), 3u);
  const ProductModel diff = direct_sum({build_so1n(2), build_so1n(3)});
  EXPECT_THROW(make_diagonal(decompose(diff.model), 0, 1), ActionError);
}

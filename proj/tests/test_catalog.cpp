#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cohom/catalog.hpp"

using namespace cohom;

namespace {

std::set<std::string> labels(const Catalog& c) {
  std::set<std::string> out;
  for (const auto& e : c.entries) out.insert(e.label);
  return out;
}

std::set<std::string> kinds(const Catalog& c) {
  std::set<std::string> out;
  for (const auto& e : c.entries) {
    const auto& l = e.label;
    out.insert(l.substr(0, std::min(l.find('('), l.find('['))));
  }
  return out;
}

CatalogOptions fast() {
  CatalogOptions o;
  o.max_chain_rank = 2;
  return o;
}

}  // namespace

TEST(Catalog, Sl3Families) {
  const Catalog c = enumerate_sl(2, fast());
  EXPECT_EQ(labels(c), (std::set<std::string>{"FH", "FS(1)", "FS(2)", "CE1(1)", "CE1(2)", "CE2(1,2)"}));
  EXPECT_TRUE(c.passed());
}

TEST(Catalog, Sl4AddsRowsThreeAndFour) {
  const Catalog c = enumerate_sl(3, fast());
  const auto l = labels(c);
  EXPECT_TRUE(l.count("CE3(1)"));
  EXPECT_TRUE(l.count("CE4(1,3)"));
  EXPECT_EQ(l.size(), 12u);
  for (const auto& e : c.entries) {
    if (e.label == "CE3(1)") EXPECT_EQ(e.report.codim_at_o, 3u);
    if (e.label == "CE4(1,3)") EXPECT_EQ(e.report.codim_at_o, 2u);
    EXPECT_EQ(e.report.cohomogeneity(), 1u) << e.label;
  }
  EXPECT_TRUE(c.passed());
}

TEST(Catalog, RankOneSl) {
  const Catalog c = enumerate_sl(1, fast());
  EXPECT_EQ(labels(c), (std::set<std::string>{"FH", "FS(1)", "CE1(1)"}));
}

TEST(Catalog, BoundsEnforced) {
  EXPECT_THROW(enumerate_sl(0, fast()), std::invalid_argument);
  EXPECT_THROW(enumerate_sl(8, fast()), std::invalid_argument);
  EXPECT_THROW(enumerate_rank1_product({{FactorKind::sl, 3}}, fast()), ActionError);
  EXPECT_THROW(enumerate_rank1_product({{FactorKind::ch, 2}}, fast()), ActionError);
  EXPECT_THROW(nc_oracle_search(4, 1, fast()), std::invalid_argument);
}

TEST(Catalog, ReverseLabel) {
  EXPECT_EQ(reverse_label("FH", 4), "FH");
  EXPECT_EQ(reverse_label("FS(1)", 4), "FS(4)");
  EXPECT_EQ(reverse_label("CE2(1,3)", 4), "CE2(2,4)");
  EXPECT_EQ(reverse_label("CE3(1)", 4), "CE3(2)");
  EXPECT_EQ(reverse_label("CE4(1,3)", 4), "CE4(2,4)");
  for (const std::string l : {"CE3(2)", "CE2(2,3)", "CE1(3)"}) EXPECT_EQ(reverse_label(reverse_label(l, 5), 5), l);
}

TEST(Catalog, RealHyperbolicProducts) {
  const Catalog c33 = enumerate_rank1_product({{FactorKind::rh, 3}, {FactorKind::rh, 3}}, fast());
  EXPECT_EQ(kinds(c33), (std::set<std::string>{"FH", "FS", "CEI", "CER", "NC"}));
  EXPECT_TRUE(labels(c33).count("NC[1]:R^2"));
  EXPECT_TRUE(labels(c33).count("NC[2]:R^2"));
  EXPECT_TRUE(c33.passed());

  const Catalog c23 = enumerate_rank1_product({{FactorKind::rh, 2}, {FactorKind::rh, 3}}, fast());
  EXPECT_EQ(kinds(c23), (std::set<std::string>{"FH", "FS", "CEI", "NC"}));
  EXPECT_FALSE(labels(c23).count("NC[1]:R^2"));

  const Catalog c2 = enumerate_rank1_product({{FactorKind::rh, 2}}, fast());
  EXPECT_EQ(kinds(c2), (std::set<std::string>{"FH", "FS", "CEI"}));
}

TEST(Catalog, NcDimensionsForRh4) {
  const Catalog c = enumerate_rank1_product({{FactorKind::rh, 4}}, fast());
  std::set<std::size_t> dims;
  for (const auto& e : c.entries)
    if (e.spec->kind == ActionKind::Product && e.label.rfind("NC", 0) == 0) dims.insert(e.report.codim_at_o);
  EXPECT_EQ(dims, (std::set<std::size_t>{2, 3}));
}

TEST(Catalog, ComplexHyperbolicNeedsFeature) {
  CatalogOptions o = fast();
  o.su1n = true;
  const Catalog c = enumerate_rank1_product({{FactorKind::ch, 3}}, o);
  const auto l = labels(c);
  EXPECT_TRUE(l.count("NC[1]:C^1"));
  EXPECT_TRUE(l.count("NC[1]:C^2"));
  EXPECT_TRUE(l.count("NC[1]:R^2 totally real"));
  EXPECT_TRUE(c.passed());
}

TEST(Catalog, StandardNcCaseCount) {
  // Σ_j (j−1) plain cases plus Σ_j (n−j) mirrored ones.
  for (std::size_t n = 1; n <= 4; ++n) {
    const DatumPtr d = decompose(build_sl(n + 1));
    EXPECT_EQ(standard_nc_cases(*d).size(), n * (n - 1));
  }
}

TEST(Catalog, OracleSl3) {
  const OracleReport r = nc_oracle_search(2, 1, fast());
  std::size_t coordinate_passing = 0;
  for (const auto& c : r.candidates) {
    if (c.source != "coordinate") continue;
    EXPECT_EQ(c.v.dim(), 2u);
    EXPECT_TRUE(c.passes());
    ++coordinate_passing;
  }
  EXPECT_EQ(coordinate_passing, 1u);
  EXPECT_EQ(r.unmatched, 0u);
}

TEST(Catalog, OracleSl4MiddleRoot) {
  const OracleReport r = nc_oracle_search(3, 2, fast());
  EXPECT_EQ(r.subsets, 15u);
  EXPECT_EQ(r.grade_one_dim, 4u);
  // Tensor pairs ordered (1,1), (1,2), (2,1), (2,2). A coordinate subset of
  // size ≥ 2 passes iff all its pairs share i (row type) or share l (column type).
  const std::vector<std::pair<int, int>> pairs{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  for (const auto& c : r.candidates) {
    if (c.source != "coordinate") continue;
    bool same_i = true, same_l = true;
    for (auto t : c.coords) {
      same_i = same_i && pairs[t].first == pairs[c.coords[0]].first;
      same_l = same_l && pairs[t].second == pairs[c.coords[0]].second;
    }
    EXPECT_EQ(c.passes(), same_i || same_l);
    if (c.passes()) EXPECT_EQ(c.match, "exact-tangent");
  }
  EXPECT_EQ(r.unmatched, 0u);
  EXPECT_EQ(r.probes, 256u);
}

TEST(Catalog, MixedProduct) {
  const Catalog c = enumerate_mixed_product({{FactorKind::sl, 3}, {FactorKind::rh, 2}}, fast());
  const auto l = labels(c);
  EXPECT_TRUE(l.count("FH"));
  EXPECT_TRUE(l.count("Prod[1]:CE2(1,2)"));
  EXPECT_TRUE(l.count("Prod[2]:FS(1)"));
  EXPECT_TRUE(l.count("CER(1,3)"));
  EXPECT_TRUE(l.count("CER(2,3)"));
  EXPECT_TRUE(c.passed());
}

TEST(Catalog, ExtensionChainsSl3) {
  const DatumPtr d = decompose(build_sl(4));
  ParabolicCache cache(d);
  const ChainReport r = check_extension_chains(cache);
  EXPECT_EQ(r.chains, 27u);  // 3^rank chains Ψ ⊆ Φ ⊆ Λ
  EXPECT_EQ(r.passed, r.chains);
}

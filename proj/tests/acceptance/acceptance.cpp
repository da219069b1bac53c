// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cohom/atlas.hpp"

using namespace cohom;

namespace {

// Pinned limits.
constexpr double kSl5Seconds = 120.0;
constexpr double kInvariantSeconds = 300.0;
constexpr std::size_t kSamples = 32;
constexpr std::size_t kMinProbes = 200;
const std::vector<std::uint64_t> kSeeds = {1, 2, 3};

RootMask bit(std::size_t i) { return static_cast<RootMask>(1u << i); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool passed = true;
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

/// Table labels and codimensions for sl(n+1), written out from the row rules.
std::map<std::string, std::size_t> expected_sl_table(std::size_t n) {
  std::map<std::string, std::size_t> t;
  auto s = [](std::size_t x) { return std::to_string(x); };
  t["FH"] = 1;
  for (std::size_t j = 1; j <= n; ++j) t["FS(" + s(j) + ")"] = 1;
  for (std::size_t j = 1; j <= n; ++j) t["CE1(" + s(j) + ")"] = 2;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = j + 1; k <= n; ++k) t["CE2(" + s(j) + "," + s(k) + ")"] = k - j + 1;
  for (std::size_t j = 1; j + 2 <= n; ++j) t["CE3(" + s(j) + ")"] = 3;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = j + 2; k <= n; ++k) t["CE4(" + s(j) + "," + s(k) + ")"] = 2;
  return t;
}

Outcome criterion_table_sl() {
  Outcome o;
  CatalogOptions opts;
  opts.samples = kSamples;
  double t5 = 0;
  std::size_t rows = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const Catalog c = enumerate_sl(n, opts);
    if (n == 5) t5 = seconds_since(t0);
    std::map<std::string, std::size_t> got;
    for (const auto& e : c.entries) {
      got[e.label] = e.report.codim_at_o;
      o.require(e.report.cohomogeneity() == 1, "n=" + std::to_string(n) + " " + e.label + " cohomogeneity");
      o.require(e.report.orbit_dim_at_o + e.report.codim_at_o == e.report.dim_m, e.label + " dimension count");
    }
    o.require(got == expected_sl_table(n), "n=" + std::to_string(n) + " family set or codimensions differ");
    o.require(c.passed(), "n=" + std::to_string(n) + " catalog identities");
    rows += got.size();
  }
  o.require(t5 < kSl5Seconds, "n=5 took " + std::to_string(t5) + " s");
  std::ostringstream s;
  s << rows << " rows for n=2..5, n=5 in " << t5 << " s (limit " << kSl5Seconds << " s)";
  o.summary = s.str();
  return o;
}

Outcome criterion_chains() {
  Outcome o;
  std::size_t total = 0;
  auto check = [&](ModelPtr m) {
    ParabolicCache cache(decompose(m));
    const ChainReport r = check_extension_chains(cache);
    total += r.chains;
    o.require(r.passed == r.chains && r.failures.empty(), m->name() + ": " + std::to_string(r.failures.size()) +
                                                              " chains fail");
  };
  for (std::size_t n = 1; n <= 4; ++n) check(build_sl(n + 1));
  check(direct_sum({build_so1n(2), build_so1n(3)}).model);
  check(direct_sum({build_so1n(3), build_so1n(3)}).model);
  check(direct_sum({build_so1n(2), build_so1n(2), build_so1n(3)}).model);
  check(direct_sum({build_su1n(2), build_so1n(2), build_so1n(4)}).model);
  o.summary = std::to_string(total) + " chains, exact equality";
  return o;
}

Outcome criterion_standard_nc() {
  Outcome o;
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const DatumPtr d = decompose(build_sl(n + 1));
    ParabolicCache cache(d);
    for (const auto& c : standard_nc_cases(*d)) {
      ++total;
      const StandardNcReport r = check_standard_nc(cache, c, 1, kSamples);
      const std::string tag = "n=" + std::to_string(n) + " j=" + std::to_string(c.j) + " k=" + std::to_string(c.k) +
                              (c.mirrored ? " mirrored" : "");
      o.require(r.extension_contained, tag + " containment");
      o.require(r.nc1, tag + " NC1");
      o.require(r.nc2_contains_so, tag + " NC2 certificate");
      o.require(r.projection, tag + " projection identity");
    }
  }
  o.require(total == 0 + 2 + 6 + 12, "unexpected number of subspaces");
  o.summary = std::to_string(total) + " subspaces, all exact";
  return o;
}

Outcome criterion_diagonal() {
  Outcome o;
  std::ostringstream s;
  auto check = [&](const ProductModel& pm, std::size_t expected, const std::string& name) {
    const auto spec = make_diagonal(decompose(pm.model), 0, 1);
    std::set<std::size_t> seen;
    for (auto seed : kSeeds) seen.insert(verify(*spec, {seed, kSamples}).cohomogeneity());
    o.require(seen.size() == 1, name + " unstable across seeds");
    o.require(seen.size() == 1 && *seen.begin() == expected, name + " slice cohomogeneity");
    const PolarCertificate pc = check_polar_certificate(*spec);
    o.require(pc.passed(), name + " polar certificate");
    s << name << "=" << *seen.begin() << " ";
  };
  for (std::size_t n = 2; n <= 4; ++n) {
    check(direct_sum({build_so1n(n), build_so1n(n)}), 1, "RH" + std::to_string(n) + "^2");
  }
  check(direct_sum({build_su1n(2), build_su1n(2)}), 1, "CH2^2");
  check(direct_sum({build_sl(3), build_sl(3)}), 2, "(SL3/SO3)^2");

  // The (SL3/SO3)^2 catalog must not contain the factor-level diagonal.
  CatalogOptions opts;
  opts.samples = kSamples;
  opts.max_chain_rank = 0;
  const Catalog c = enumerate_mixed_product({{FactorKind::sl, 3}, {FactorKind::sl, 3}}, opts);
  for (const auto& e : c.entries) {
    if (const auto* d = std::get_if<CerData>(&e.spec->data)) o.require(!d->factor_level, e.label + " factor diagonal");
  }
  s << "seeds 1,2,3 x " << kSamples << " samples";
  o.summary = s.str();
  return o;
}

Outcome criterion_negative() {
  Outcome o;
  const DatumPtr d = decompose(build_sl(4));
  ParabolicCache cache(d);
  const auto pd = cache.get(d->all_simple() & ~bit(1));
  const TensorIdentification tm = tensor_model_check(d, 2);
  std::map<std::pair<std::size_t, std::size_t>, Vector> e;
  for (const auto& p : tm.pairs) e[{p.i, p.l}] = p.generator;
  const Vector diag = add(e[{1, 1}], e[{2, 2}]);
  const std::size_t dim = d->model->dim();
  const std::vector<Subspace> bad = {
      Subspace::span(dim, {diag, e[{1, 2}]}),
      Subspace::span(dim, {diag, e[{2, 1}]}),
      Subspace::span(dim, {diag, e[{1, 2}], e[{2, 1}]}),
      Subspace::span(dim, {diag, add(e[{1, 2}], e[{2, 1}])}),
  };
  for (std::size_t t = 0; t < bad.size(); ++t) {
    const Nc1Result r = check_nc1(*pd, bad[t]);
    o.require(!r.passed, "subspace " + std::to_string(t) + " passes NC1");
    o.require(!r.contains_a_upper, "subspace " + std::to_string(t) + " contains a^Phi");
  }
  CatalogOptions opts;
  opts.samples = kSamples;
  const OracleReport rep = nc_oracle_search(3, 2, opts);
  o.require(rep.subsets + 1 == 16, "coordinate subsets");
  o.require(rep.probes >= kMinProbes, "probe count");
  o.require(rep.unmatched == 0, std::to_string(rep.unmatched) + " passing candidates unmatched");
  std::ostringstream s;
  s << bad.size() << " diagonal subspaces fail NC1; oracle " << rep.subsets + 1 << " subsets + " << rep.probes
    << " probes, " << rep.passing << " passing, " << rep.unmatched << " unmatched";
  o.summary = s.str();
  return o;
}

Outcome criterion_rank_one_products() {
  Outcome o;
  CatalogOptions opts;
  opts.samples = kSamples;
  auto types = [](const Catalog& c) {
    std::set<std::string> out;
    for (const auto& e : c.entries) out.insert(e.label.substr(0, std::min(e.label.find('('), e.label.find('['))));
    return out;
  };
  struct Case {
    std::size_t a, b;
    std::set<std::string> expected;
  };
  const std::vector<Case> cases = {
      {2, 2, {"FH", "FS", "CEI", "CER"}},
      {3, 3, {"FH", "FS", "CEI", "CER", "NC"}},
      {2, 3, {"FH", "FS", "CEI", "NC"}},
  };
  for (const auto& c : cases) {
    const std::string name = "rh(" + std::to_string(c.a) + ")*rh(" + std::to_string(c.b) + ")";
    const Catalog cat = enumerate_rank1_product({{FactorKind::rh, c.a}, {FactorKind::rh, c.b}}, opts);
    o.require(types(cat) == c.expected, name + " type set");
    bool split = false;
    for (const auto& i : cat.identities)
      if (i.name == "product-nc-split") split = i.passed;
    o.require(split, name + " product NC split");
    o.require(cat.passed(), name + " identities");
  }
  o.summary = "3 products, type sets and NC split exact";
  return o;
}

Outcome criterion_structural() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<ModelPtr> ms;
  for (std::size_t k = 2; k <= 5; ++k) ms.push_back(build_sl(k));
  for (std::size_t n = 2; n <= 5; ++n) ms.push_back(build_so1n(n));
  for (std::size_t n = 2; n <= 4; ++n) ms.push_back(build_su1n(n));
  ms.push_back(direct_sum({build_so1n(3), build_so1n(3)}).model);
  ms.push_back(direct_sum({build_sl(3), build_so1n(2)}).model);
  ms.push_back(direct_sum({build_so1n(2), build_su1n(2), build_so1n(3)}).model);
  ms.push_back(direct_sum({build_sl(3), build_sl(3)}).model);
  std::size_t checks = 0;
  for (const auto& m : ms) {
    ParabolicCache cache(decompose(m));
    for (const auto& r : structural_invariants(cache, 4)) {
      ++checks;
      o.require(r.passed, r.name + " " + r.detail);
    }
  }
  const double t = seconds_since(t0);
  o.require(t < kInvariantSeconds, "took " + std::to_string(t) + " s");
  std::ostringstream s;
  s << checks << " checks on " << ms.size() << " models in " << t << " s (limit " << kInvariantSeconds << " s)";
  o.summary = s.str();
  return o;
}

Outcome criterion_determinism() {
  Outcome o;
  RunConfig cfg;
  cfg.seed = 7;
  const SpaceSpec s = parse_space("sl(4)");
  const RunResult a = run(s, cfg);
  const RunResult b = run(s, cfg);
  o.require(a.output == b.output, "outputs differ");
  o.require(a.exit_code == 0, "exit code " + std::to_string(a.exit_code));
  o.summary = std::to_string(a.output.size()) + " bytes, identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 sl table reproduction", criterion_table_sl},
      {"2 extension chains", criterion_chains},
      {"3 standard nilpotent family", criterion_standard_nc},
      {"4 diagonal slices", criterion_diagonal},
      {"5 nilpotent negatives and oracle", criterion_negative},
      {"6 rank one product table", criterion_rank_one_products},
      {"7 structural invariants", criterion_structural},
      {"8 determinism", criterion_determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.passed = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s: %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.summary.c_str());
    for (const auto& f : o.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    failed += o.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

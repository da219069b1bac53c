#include "cohom/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace cohom {
namespace {

RootMask bit(std::size_t i) { return static_cast<RootMask>(1u << i); }

/// Simple roots lo..hi (0-based, inclusive).
RootMask interval(std::size_t lo, std::size_t hi) {
  RootMask m = 0;
  for (std::size_t i = lo; i <= hi; ++i) m |= bit(i);
  return m;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string num(std::size_t x) { return std::to_string(x); }

std::string boundary_name(const RootDatum& datum, RootMask phi) {
  if (phi == 0) return "point";
  std::vector<std::string> parts;
  for (RootMask comp : dynkin_components(datum, phi)) {
    const std::size_t lo = static_cast<std::size_t>(std::countr_zero(comp));
    const FactorInfo& fi = datum.model->factors().at(datum.simple_root(lo).factor);
    const std::size_t m = mask_size(comp);
    switch (fi.kind) {
      case FactorKind::sl:
        parts.push_back(m == 1 ? "RH^2" : "SL(" + num(m + 1) + ")/SO(" + num(m + 1) + ")");
        break;
      case FactorKind::rh:
        parts.push_back("RH^" + num(fi.param));
        break;
      case FactorKind::ch:
        parts.push_back("CH^" + num(fi.param));
        break;
    }
  }
  return join(parts, " x ");
}

/// Dimension of the boundary component of a single simple root.
std::size_t rank_one_boundary_dim(const FactorInfo& fi) {
  switch (fi.kind) {
    case FactorKind::sl:
      return 2;
    case FactorKind::rh:
      return fi.param;
    case FactorKind::ch:
      return 2 * fi.param;
  }
  return 0;
}

/// Verifies entries, keeps those passing the cohomogeneity one gate and
/// records aggregate identities at the end.
class Collector {
 public:
  Collector(Catalog& cat, const CatalogOptions& opts) : cat_(cat), config_{opts.seed, opts.samples} {}

  void admit(CatalogEntry e) {
    try {
      e.report = verify(*e.spec, config_);
    } catch (const std::exception& ex) {
      gate_.push_back(e.label + " (" + ex.what() + ")");
      return;
    }
    if (e.report.cohomogeneity() != 1) {
      gate_.push_back(e.label + " (cohomogeneity " + num(e.report.cohomogeneity()) + ")");
      return;
    }
    if (e.report.codim_at_o != e.expected_codim)
      codim_.push_back(e.label + " (" + num(e.report.codim_at_o) + " vs " + num(e.expected_codim) + ")");
    for (const auto& n : e.report.notes)
      if (!n.passed) notes_.push_back(e.label + ":" + n.name);
    cat_.entries.push_back(std::move(e));
  }

  void finish(const std::string& prefix = {}) {
    const std::string count = num(cat_.entries.size()) + " entries";
    add(prefix + "cohomogeneity-one-gate", gate_, count);
    add(prefix + "table-codimensions", codim_, count);
    add(prefix + "entry-identities", notes_, count);
  }

 private:
  void add(std::string name, const std::vector<std::string>& failures, const std::string& ok_detail) {
    cat_.identities.push_back({std::move(name), failures.empty(), failures.empty() ? ok_detail : join(failures, "; ")});
  }

  Catalog& cat_;
  VerifyConfig config_;
  std::vector<std::string> gate_, codim_, notes_;
};

void add_identity(Catalog& cat, std::string name, const std::vector<std::string>& failures, std::size_t checked) {
  cat.identities.push_back(
      {std::move(name), failures.empty(), failures.empty() ? num(checked) + " checked" : join(failures, "; ")});
}

void add_structural(Catalog& cat, ParabolicCache& cache, const CatalogOptions& opts) {
  for (auto& r : structural_invariants(cache, opts.max_chain_rank)) cat.identities.push_back(std::move(r));
  if (cache.datum()->rank() <= opts.max_chain_rank) {
    const ChainReport chains = check_extension_chains(cache);
    add_identity(cat, "extension-chains", chains.failures, chains.chains);
  } else {
    cat.notes.push_back("extension chains and nested parabolic checks skipped above rank " + num(opts.max_chain_rank));
  }
}

Subspace graph_of_shift(const LieModel& g, std::size_t from, std::size_t to) {
  const FactorInfo& a = g.factors().at(from);
  const FactorInfo& b = g.factors().at(to);
  std::vector<Vector> rows;
  for (std::size_t t = 0; t < a.dim; ++t) {
    Vector x(g.dim());
    x[a.coord_offset + t] = 1;
    x[b.coord_offset + t] = 1;
    rows.push_back(std::move(x));
  }
  return Subspace::span(g.dim(), rows);
}

std::size_t root_of_factor(const RootDatum& datum, std::size_t factor) {
  const RootMask m = datum.factor_mask(factor);
  if (mask_size(m) != 1) throw ActionError("expected a rank one factor");
  return static_cast<std::size_t>(std::countr_zero(m));
}

/// 𝔤_α ⊖ (𝔳 + J𝔳) style greedy builders on a rank one ch(n) root space.
struct ComplexRootSpace {
  const LieModel* g = nullptr;
  Subspace space;
  Matrix j;  ///< Ad(diag(1,1,i,…,i)) on coordinates

  Vector apply(const Vector& x) const { return j.apply(x); }

  Subspace next_orthogonal(const Subspace& used) const {
    return orthocomplement_in(used, space, g->inner());
  }
};

ComplexRootSpace complex_root_space(const LieModel& g, const Subspace& space) {
  const FactorInfo& fi = g.factors().at(0);
  const std::size_t s = fi.param + 1;
  Matrix d(2 * s, 2 * s);
  Matrix dinv(2 * s, 2 * s);
  // Realified diag(1, 1, i, …, i): real part on the first two, J part after.
  for (std::size_t r = 0; r < s; ++r) {
    if (r < 2) {
      d(r, r) = 1;
      d(s + r, s + r) = 1;
      dinv(r, r) = 1;
      dinv(s + r, s + r) = 1;
    } else {
      d(r, s + r) = -1;
      d(s + r, r) = 1;
      dinv(r, s + r) = 1;
      dinv(s + r, r) = -1;
    }
  }
  Matrix jm(g.dim(), g.dim());
  for (std::size_t c = 0; c < g.dim(); ++c) {
    const Vector col = g.coordinates(d * g.basis_matrix(c) * dinv);
    for (std::size_t r = 0; r < g.dim(); ++r) jm(r, c) = col[r];
  }
  ComplexRootSpace out{&g, space, jm};
  if (image(jm, space) != space) throw std::logic_error("complex structure does not preserve 𝔤_α");
  return out;
}

Subspace complex_subspace(const ComplexRootSpace& cs, std::size_t k) {
  Subspace v(cs.space.ambient_dim());
  for (std::size_t t = 0; t < k; ++t) {
    const Vector x = cs.next_orthogonal(v).basis_vector(0);
    v = subspace_sum(v, Subspace::span(v.ambient_dim(), {x, cs.apply(x)}));
  }
  return v;
}

Subspace totally_real_subspace(const ComplexRootSpace& cs, std::size_t k) {
  Subspace v(cs.space.ambient_dim());
  Subspace jv(cs.space.ambient_dim());
  for (std::size_t t = 0; t < k; ++t) {
    const Vector x = cs.next_orthogonal(subspace_sum(v, jv)).basis_vector(0);
    v = subspace_sum(v, Subspace::span(v.ambient_dim(), {x}));
    jv = subspace_sum(jv, Subspace::span(v.ambient_dim(), {cs.apply(x)}));
  }
  return v;
}

Catalog rank1_catalog(const ProductModel& pm, const CatalogOptions& opts, bool with_structural) {
  const LieModel& g = *pm.model;
  for (const auto& f : g.factors()) {
    if (f.kind == FactorKind::sl) throw ActionError("rank one enumeration: sl factor present");
    if (f.kind == FactorKind::ch && !opts.su1n) throw ActionError("ch(n) factors need the su1n feature");
  }
  const auto datum = decompose(pm.model);
  ParabolicCache cache(datum);
  Catalog cat;
  cat.space = g.name();
  Collector col(cat, opts);
  const std::size_t nf = pm.factors.size();
  const RootMask all = datum->all_simple();

  col.admit({"FH", make_fh(datum, datum->simple_root(0).root_vector), "(a - l) + n", "{}", "point", "", 1, {}});
  for (std::size_t f = 0; f < nf; ++f) {
    const std::size_t r = root_of_factor(*datum, f);
    col.admit({"FS(" + num(f + 1) + ")", make_fs(datum, r, datum->simple_root(r).space.basis_vector(0)), "a + (n - l)",
               mask_label(bit(r)), "point", "", 1, {}});
  }

  std::vector<std::string> ext_fail, cer_fail, split_fail;
  std::size_t ext_checked = 0, cer_checked = 0, split_checked = 0;

  for (std::size_t f = 0; f < nf; ++f) {
    const FactorInfo& fi = g.factors()[f];
    const std::size_t r = root_of_factor(*datum, f);
    const auto fdatum = decompose(pm.factors[f]);
    ParabolicCache fcache(fdatum);
    const auto fpd = fcache.get(1);
    const auto subs = builtin_cei_catalog(fcache, 1, opts.su1n);
    for (std::size_t t = 0; t < subs.size(); ++t) {
      const auto& h = subs[t];
      const std::string label = "CEI[" + num(f + 1) + "]:" + h.name;
      std::size_t expected = 0;
      if (fi.kind == FactorKind::rh) {
        expected = fi.param - t;
      } else {
        expected = t + 1 == subs.size() ? fi.param : 2 * (fi.param - t);
      }
      const auto outer = product_assemble(pm, datum, f, canonical_extend(fpd, h.algebra, h.name));
      const auto ext = canonical_extend(cache.get(bit(r)), embed_factor_subspace(pm, f, h.algebra), h.name);
      ++ext_checked;
      if (!outer->algebra.contains(ext->algebra)) ext_fail.push_back(label);
      col.admit({label, outer, h.name, mask_label(bit(r)), boundary_name(*datum, bit(r)), "", expected, {}});
    }
  }

  for (std::size_t f = 0; f < nf; ++f) {
    for (std::size_t f2 = f + 1; f2 < nf; ++f2) {
      const FactorInfo& a = g.factors()[f];
      const FactorInfo& b = g.factors()[f2];
      if (a.kind != b.kind || a.param != b.param) continue;
      const std::size_t r1 = root_of_factor(*datum, f);
      const std::size_t r2 = root_of_factor(*datum, f2);
      const std::string label = "CER(" + num(f + 1) + "," + num(f2 + 1) + ")";
      const auto spec = make_cer(cache, r1, r2, default_sigma(cache, r1, r2));
      std::vector<Subspace> parts{graph_of_shift(g, f, f2)};
      for (std::size_t i = 0; i < nf; ++i)
        if (i != f && i != f2) parts.push_back(g.factor_block(i));
      ++cer_checked;
      if (!subspace_sum(parts, g.dim()).contains(spec->algebra)) cer_fail.push_back(label);
      const std::string hname = "diag " + a.name;
      col.admit({label, spec, hname, mask_label(bit(r1) | bit(r2)), boundary_name(*datum, bit(r1) | bit(r2)),
                 "sigma = block shift", rank_one_boundary_dim(a), {}});
    }
  }

  for (std::size_t f = 0; f < nf; ++f) {
    const FactorInfo& fi = g.factors()[f];
    const std::size_t r = root_of_factor(*datum, f);
    const auto fdatum = decompose(pm.factors[f]);
    ParabolicCache fcache(fdatum);
    const auto fpd = fcache.get(0);
    const Subspace& ga = fdatum->simple_root(0).space;
    std::vector<std::pair<std::string, Subspace>> vs;
    if (fi.kind == FactorKind::rh) {
      for (std::size_t d = 2; d <= ga.dim(); ++d) {
        std::vector<Vector> rows;
        for (std::size_t t = 0; t < d; ++t) rows.push_back(ga.basis_vector(t));
        vs.emplace_back("R^" + num(d), Subspace::span(ga.ambient_dim(), rows));
      }
    } else {
      const ComplexRootSpace cs = complex_root_space(*pm.factors[f], ga);
      const std::size_t cdim = ga.dim() / 2;
      for (std::size_t k = 1; k <= cdim; ++k) vs.emplace_back("C^" + num(k), complex_subspace(cs, k));
      for (std::size_t k = 2; k <= cdim; ++k) vs.emplace_back("R^" + num(k) + " totally real", totally_real_subspace(cs, k));
    }
    for (const auto& [name, v] : vs) {
      const std::string label = "NC[" + num(f + 1) + "]:" + name;
      const auto outer = product_assemble(pm, datum, f, nilpotent_construct(fpd, v));
      const auto whole = nilpotent_construct(cache.get(all & ~bit(r)), embed_factor_subspace(pm, f, v));
      ++split_checked;
      if (whole->algebra != outer->algebra) split_fail.push_back(label);
      col.admit({label, outer, "N(n - v) + (n - v)", mask_label(all & ~bit(r)), boundary_name(*datum, all & ~bit(r)),
                 "", v.dim(), {}});
    }
  }

  col.finish();
  add_identity(cat, "boundary-extension-contained", ext_fail, ext_checked);
  add_identity(cat, "cer-product-form", cer_fail, cer_checked);
  add_identity(cat, "product-nc-split", split_fail, split_checked);
  if (with_structural) add_structural(cat, cache, opts);
  if (nf >= 2) cat.notes.push_back("CER entries pair isometric factors through the block shift");
  return cat;
}

/// Tangent spaces π_𝔭(𝔥) of every canonical extension in sl(n+1).
std::vector<Subspace> canonical_tangents(ParabolicCache& cache) {
  const RootDatum& datum = *cache.datum();
  const LieModel& g = *datum.model;
  const std::size_t n = datum.rank();
  std::vector<Subspace> out;
  auto push = [&](const Subspace& algebra) {
    Subspace t = orbit_tangent_at_o(g, algebra);
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  };
  for (std::size_t lo = 0; lo < n; ++lo) {
    for (std::size_t hi = lo; hi < n; ++hi) {
      const RootMask phi = interval(lo, hi);
      const auto pd = cache.get(phi);
      for (const auto& h : builtin_cei_catalog(cache, phi)) push(canonical_extend(pd, h.algebra)->algebra);
      if (hi > lo) push(canonical_extend(pd, mirrored_levi(cache, phi).algebra)->algebra);
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 2; k < n; ++k) push(make_cer(cache, j, k, default_sigma(cache, j, k))->algebra);
  return out;
}

/// Ad(g) on coordinates for signed permutation matrices g = diag(P, Q) with
/// det g = 1, P of size j.
std::vector<Matrix> signed_permutation_adjoints(const LieModel& g, std::size_t j) {
  const std::size_t size = g.matrix_size();
  std::vector<Matrix> blocks_p, blocks_q;
  auto signed_perms = [](std::size_t m) {
    std::vector<Matrix> out;
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t signs = 0; signs < (std::size_t{1} << m); ++signs) {
        Matrix p(m, m);
        for (std::size_t r = 0; r < m; ++r) p(r, perm[r]) = (signs >> r) & 1 ? -1 : 1;
        out.push_back(std::move(p));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  };
  auto det_sign = [](const Matrix& p) {
    // Signed permutation: determinant is ±1, found by exact elimination rank trick.
    const std::size_t m = p.rows();
    std::vector<std::size_t> target(m);
    int sign = 1;
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        if (p(r, c) != 0) {
          target[r] = c;
          if (p(r, c) < 0) sign = -sign;
        }
      }
    }
    for (std::size_t r = 0; r < m; ++r) {
      while (target[r] != r) {
        std::swap(target[r], target[target[r]]);
        sign = -sign;
      }
    }
    return sign;
  };
  const auto ps = signed_perms(j);
  const auto qs = signed_perms(size - j);
  std::vector<Matrix> out;
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      if (det_sign(p) * det_sign(q) != 1) continue;
      Matrix m(size, size);
      for (std::size_t r = 0; r < j; ++r)
        for (std::size_t c = 0; c < j; ++c) m(r, c) = p(r, c);
      for (std::size_t r = 0; r < size - j; ++r)
        for (std::size_t c = 0; c < size - j; ++c) m(j + r, j + c) = q(r, c);
      const Matrix mt = m.transpose();
      Matrix ad(g.dim(), g.dim());
      for (std::size_t c = 0; c < g.dim(); ++c) {
        const Vector col = g.coordinates(m * g.basis_matrix(c) * mt);
        for (std::size_t r = 0; r < g.dim(); ++r) ad(r, c) = col[r];
      }
      out.push_back(std::move(ad));
    }
  }
  return out;
}

}  // namespace

bool Catalog::passed() const {
  return std::all_of(identities.begin(), identities.end(), [](const IdentityResult& r) { return r.passed; });
}

std::string reverse_label(const std::string& label, std::size_t n) {
  const auto open = label.find('(');
  if (open == std::string::npos) return label;
  const std::string name = label.substr(0, open);
  std::vector<std::size_t> args;
  std::size_t pos = open + 1;
  while (pos < label.size() && label[pos] != ')') {
    std::size_t used = 0;
    args.push_back(std::stoul(label.substr(pos), &used));
    pos += used;
    if (pos < label.size() && label[pos] == ',') ++pos;
  }
  auto flip = [n](std::size_t j) { return n + 1 - j; };
  if (args.size() == 1) {
    const std::size_t width = name == "CE3" ? 3 : 1;
    return name + "(" + num(flip(args[0] + width - 1)) + ")";
  }
  if (args.size() == 2) return name + "(" + num(flip(args[1])) + "," + num(flip(args[0])) + ")";
  throw std::invalid_argument("reverse_label: cannot parse " + label);
}

ChainReport check_extension_chains(ParabolicCache& cache) {
  const RootDatum& datum = *cache.datum();
  const LieModel& g = *datum.model;
  const RootMask all = datum.all_simple();
  ChainReport out;
  for (RootMask lam_phi = 0; lam_phi <= all; ++lam_phi) {
    for (RootMask psi = lam_phi;; psi = (psi - 1) & lam_phi) {
      ++out.chains;
      const std::string tag = mask_label(psi) + "<" + mask_label(lam_phi);
      try {
        const auto pd_psi = cache.get(psi);
        const Subspace h_psi = subspace_intersect(g.k(), pd_psi->s);
        const Subspace inner = extend_within(cache.nested(psi, lam_phi), h_psi);
        const auto lhs = canonical_extend(cache.get(lam_phi), inner);
        const auto rhs = canonical_extend(pd_psi, h_psi);
        if (lhs->algebra == rhs->algebra) {
          ++out.passed;
        } else {
          out.failures.push_back(tag);
        }
      } catch (const std::exception& ex) {
        out.failures.push_back(tag + " (" + ex.what() + ")");
      }
      if (psi == 0) break;
    }
  }
  return out;
}

std::vector<StandardNcCase> standard_nc_cases(const RootDatum& datum) {
  const std::size_t n = datum.rank();
  std::vector<StandardNcCase> out;
  auto root_space = [&](std::size_t lo, std::size_t hi) {
    std::vector<long> coeffs(n, 0);
    for (std::size_t i = lo; i <= hi; ++i) coeffs[i] = 1;
    const auto idx = datum.find_by_coeffs(coeffs);
    if (!idx) throw std::logic_error("standard_nc_cases: missing root");
    return *idx;
  };
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = 2; k <= j; ++k) {
      StandardNcCase c{j, k, false, interval(j - k, j - 1), 0, {}};
      c.psi = c.phi & ~bit(j - 1);
      std::vector<std::size_t> roots;
      for (std::size_t i = j - k; i < j; ++i) roots.push_back(root_space(i, j - 1));
      c.v = root_space_sum(datum, roots);
      out.push_back(std::move(c));
    }
    for (std::size_t k = 2; k + j <= n + 1; ++k) {
      StandardNcCase c{j, k, true, interval(j - 1, j + k - 2), 0, {}};
      c.psi = c.phi & ~bit(j - 1);
      std::vector<std::size_t> roots;
      for (std::size_t l = j - 1; l < j + k - 1; ++l) roots.push_back(root_space(j - 1, l));
      c.v = root_space_sum(datum, roots);
      out.push_back(std::move(c));
    }
  }
  return out;
}

StandardNcReport check_standard_nc(ParabolicCache& cache, const StandardNcCase& c, std::uint64_t seed, std::size_t samples) {
  const RootDatum& datum = *cache.datum();
  const LieModel& g = *datum.model;
  const auto pd = cache.get(datum.all_simple() & ~bit(c.j - 1));
  StandardNcReport out;
  const auto spec = nilpotent_construct(pd, c.v, true);

  const NestedParabolicDatum& nd = cache.nested(c.psi, c.phi);
  const Subspace inner_comp = orthocomplement_in(c.v, nd.n_np, g.inner());
  const Subspace h_phi = subspace_sum(normalizer(g, nd.l_np, inner_comp), inner_comp);
  const auto ext = canonical_extend(cache.get(c.phi), h_phi);
  out.extension_contained = spec->algebra.contains(ext->algebra);

  out.nc1 = check_nc1(*pd, c.v).passed;
  out.nc2_contains_so = check_nc2(*pd, c.v, seed, samples).certificate == Nc2Certificate::contains_so;

  const Subspace n_minus_v = orthocomplement_in(c.v, g.n(), g.inner());
  const Subspace a_plus = subspace_sum(g.a(), n_minus_v);
  std::vector<Vector> projected;
  for (const auto& x : ext->algebra.vectors()) {
    const auto parts = g.iwasawa_project(x);
    projected.push_back(add(parts.a, parts.n));
  }
  out.projection = Subspace::span(g.dim(), projected) == a_plus;
  out.contains_a_plus_n = spec->algebra.contains(a_plus);
  return out;
}

OracleReport nc_oracle_search(std::size_t n, std::size_t j, const CatalogOptions& options) {
  if (n < 1 || n > 3) throw std::invalid_argument("nc_oracle_search: bound exceeded, need 1 <= n <= 3");
  if (j < 1 || j > n) throw std::invalid_argument("nc_oracle_search: j out of range");
  const auto model = build_sl(n + 1);
  const auto datum = decompose(model);
  ParabolicCache cache(datum);
  const LieModel& g = *model;
  const auto pd = cache.get(datum->all_simple() & ~bit(j - 1));
  const TensorIdentification tm = tensor_model_check(datum, j);
  const std::size_t w = n - j + 1;

  OracleReport rep;
  rep.n = n;
  rep.j = j;
  rep.grade_one_dim = tm.pairs.size();
  std::vector<Vector> gens;
  for (const auto& p : tm.pairs) gens.push_back(p.generator);

  std::vector<Subspace> known;
  {
    const auto adjoints = signed_permutation_adjoints(g, j);
    for (const auto& t : canonical_tangents(cache)) {
      for (const auto& ad : adjoints) {
        Subspace img = image(ad, t);
        if (std::find(known.begin(), known.end(), img) == known.end()) known.push_back(std::move(img));
      }
    }
  }
  auto is_known = [&](const Subspace& v) {
    const Subspace t = orbit_tangent_at_o(g, nilpotent_construct(pd, v)->algebra);
    return std::find(known.begin(), known.end(), t) != known.end();
  };
  auto standard = [&](bool column, std::size_t k) {
    std::vector<Vector> rows;
    for (std::size_t t = 0; t < k; ++t) {
      Vector tc(j * w);
      tc[column ? t * w : t] = 1;
      rows.push_back(tm.from_tensor(tc));
    }
    return Subspace::span(g.dim(), rows);
  };
  // Column type: every tensor lies in ℝ^j ⊗ f for one f; row type: e ⊗ (ℝ^w)*.
  auto classify = [&](const Subspace& v) -> std::optional<bool> {
    std::vector<Vector> rows, cols;
    for (const auto& x : v.vectors()) {
      const Vector t = tm.tensor_coordinates(x);
      for (std::size_t i = 0; i < j; ++i) rows.emplace_back(t.begin() + static_cast<long>(i * w),
                                                            t.begin() + static_cast<long>((i + 1) * w));
      for (std::size_t l = 0; l < w; ++l) {
        Vector c(j);
        for (std::size_t i = 0; i < j; ++i) c[i] = t[i * w + l];
        cols.push_back(std::move(c));
      }
    }
    if (Subspace::span(w, rows).dim() == 1) return true;
    if (Subspace::span(j, cols).dim() == 1) return false;
    return std::nullopt;
  };

  auto evaluate = [&](OracleCandidate c) {
    c.nc1 = check_nc1(*pd, c.v).passed ? TriState::yes : TriState::no;
    if (c.nc1 == TriState::yes) {
      const Nc2Result r = check_nc2(*pd, c.v, options.seed, options.samples);
      c.nc2 = r.verdict;
      c.nc2_certificate = r.certificate;
    }
    if (c.passes()) {
      ++rep.passing;
      if (is_known(c.v)) {
        c.match = "exact-tangent";
      } else if (const auto type = classify(c.v); type && is_known(standard(*type, c.v.dim()))) {
        c.match = "type-and-dimension";
      } else {
        c.match = "none";
        ++rep.unmatched;
      }
    }
    rep.candidates.push_back(std::move(c));
  };

  const std::size_t d = gens.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
    ++rep.subsets;
    OracleCandidate c;
    c.source = "coordinate";
    std::vector<Vector> rows;
    for (std::size_t t = 0; t < d; ++t) {
      if ((mask >> t) & 1) {
        c.coords.push_back(t);
        rows.push_back(gens[t]);
      }
    }
    if (rows.size() < 2) {
      ++rep.rejected_small;
      continue;
    }
    c.v = Subspace::span(g.dim(), rows);
    evaluate(std::move(c));
  }

  if (d >= 2) {
    Sampler sampler(options.seed);
    for (std::size_t p = 0; p < options.oracle_probes; ++p) {
      ++rep.probes;
      const std::size_t r = 2 + static_cast<std::size_t>(sampler.next() % (d - 1));
      std::vector<Vector> rows;
      for (std::size_t t = 0; t < r; ++t) rows.push_back(sampler.combination(gens));
      OracleCandidate c;
      c.source = "random";
      c.v = Subspace::span(g.dim(), rows);
      if (c.v.dim() < 2) {
        ++rep.rejected_small;
        continue;
      }
      evaluate(std::move(c));
    }
  }
  return rep;
}

Catalog enumerate_sl_model(ModelPtr model, const CatalogOptions& opts) {
  const auto datum = decompose(model);
  ParabolicCache cache(datum);
  const std::size_t n = datum->rank();
  if (model->factors().size() != 1 || model->factors()[0].kind != FactorKind::sl)
    throw ActionError("enumerate_sl: model is not sl(n+1)");
  if (n < 1 || n > opts.max_sl_rank)
    throw std::invalid_argument("enumerate_sl: bound exceeded, rank must lie in 1.." + num(opts.max_sl_rank));

  Catalog cat;
  cat.space = model->name();
  Collector col(cat, opts);

  col.admit({"FH", make_fh(datum, datum->simple_root(0).root_vector), "(a - l) + n", "{}", "point", "", 1, {}});
  for (std::size_t j = 0; j < n; ++j)
    col.admit({"FS(" + num(j + 1) + ")", make_fs(datum, j, datum->simple_root(j).space.basis_vector(0)),
               "a + (n - l)", mask_label(bit(j)), "point", "", 1, {}});
  for (std::size_t j = 0; j < n; ++j) {
    const auto h = builtin_cei_catalog(cache, bit(j)).at(0);
    col.admit({"CE1(" + num(j + 1) + ")", canonical_extend(cache.get(bit(j)), h.algebra, h.name), h.name,
               mask_label(bit(j)), boundary_name(*datum, bit(j)), "", 2, {}});
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const RootMask phi = interval(j, k);
      const auto h = builtin_cei_catalog(cache, phi).at(0);
      col.admit({"CE2(" + num(j + 1) + "," + num(k + 1) + ")", canonical_extend(cache.get(phi), h.algebra, h.name),
                 h.name, mask_label(phi), boundary_name(*datum, phi), "", k - j + 1, {}});
    }
  }
  for (std::size_t j = 0; j + 2 < n; ++j) {
    const RootMask phi = interval(j, j + 2);
    const auto h = builtin_cei_catalog(cache, phi).at(1);
    col.admit({"CE3(" + num(j + 1) + ")", canonical_extend(cache.get(phi), h.algebra, h.name), h.name,
               mask_label(phi), boundary_name(*datum, phi), "", 3, {}});
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 2; k < n; ++k) {
      const SigmaChoice sigma = default_sigma(cache, j, k);
      col.admit({"CE4(" + num(j + 1) + "," + num(k + 1) + ")", make_cer(cache, j, k, sigma), "diag so(2,1)",
                 mask_label(bit(j) | bit(k)), boundary_name(*datum, bit(j) | bit(k)),
                 sigma.theta_equivariant ? "sigma theta-equivariant" : "sigma not theta-equivariant", 2, {}});
    }
  }
  col.finish();

  {
    std::vector<std::string> labels, failures;
    for (const auto& e : cat.entries) labels.push_back(e.label);
    for (const auto& l : labels) {
      const std::string r = reverse_label(l, n);
      if (std::find(labels.begin(), labels.end(), r) == labels.end()) failures.push_back(l + " -> " + r);
    }
    add_identity(cat, "dynkin-reversal", failures, labels.size());
  }
  {
    std::vector<std::string> failures;
    for (std::size_t j = 1; j <= n; ++j) {
      const TensorIdentification tm = tensor_model_check(datum, j);
      if (!tm.spans_nilradical || !tm.action_matches) failures.push_back("j=" + num(j));
    }
    add_identity(cat, "tensor-model", failures, n);
  }
  {
    std::vector<std::string> failures;
    const auto cases = standard_nc_cases(*datum);
    for (const auto& c : cases) {
      const StandardNcReport r = check_standard_nc(cache, c, opts.seed, opts.samples);
      if (!r.ok()) {
        std::string tag = std::string(c.mirrored ? "mirror" : "plain") + "(j=" + num(c.j) + ",k=" + num(c.k) + ")";
        if (!r.extension_contained) tag += " containment";
        if (!r.nc1) tag += " nc1";
        if (!r.nc2_contains_so) tag += " nc2";
        if (!r.projection) tag += " projection";
        if (!r.contains_a_plus_n) tag += " a+n";
        failures.push_back(tag);
      }
    }
    add_identity(cat, "nilpotent-standard-family", failures, cases.size());
  }
  add_structural(cat, cache, opts);

  if (opts.nc_search) {
    if (n > 3) {
      cat.notes.push_back("nilpotent oracle search needs n <= 3; skipped");
    } else {
      std::vector<std::string> failures;
      std::size_t checked = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        OracleReport rep = nc_oracle_search(n, j, opts);
        checked += rep.candidates.size();
        if (rep.unmatched > 0) failures.push_back("j=" + num(j) + " unmatched " + num(rep.unmatched));
        cat.oracle.push_back(std::move(rep));
      }
      add_identity(cat, "nc-oracle", failures, checked);
    }
  }
  return cat;
}

Catalog enumerate_sl(std::size_t n, const CatalogOptions& options) {
  if (n < 1 || n > options.max_sl_rank)
    throw std::invalid_argument("enumerate_sl: bound exceeded, rank must lie in 1.." + num(options.max_sl_rank));
  return enumerate_sl_model(build_sl(n + 1), options);
}

Catalog enumerate_rank1_model(const ProductModel& pm, const CatalogOptions& options) {
  return rank1_catalog(pm, options, true);
}

Catalog enumerate_rank1_product(const std::vector<FactorSpec>& factors, const CatalogOptions& options) {
  if (factors.empty()) throw std::invalid_argument("enumerate_rank1_product: no factors");
  std::vector<ModelPtr> models;
  for (const auto& f : factors) {
    if (f.kind == FactorKind::sl) throw ActionError("enumerate_rank1_product: sl factor present");
    if (f.kind == FactorKind::ch && !options.su1n) throw ActionError("ch(n) factors need the su1n feature");
    models.push_back(build_factor(f.kind, f.param));
  }
  return enumerate_rank1_model(direct_sum(models), options);
}

Catalog enumerate_mixed_product(const std::vector<FactorSpec>& factors, const CatalogOptions& options) {
  if (factors.empty()) throw std::invalid_argument("enumerate_mixed_product: no factors");
  std::vector<ModelPtr> models;
  for (const auto& f : factors) {
    if (f.kind == FactorKind::ch && !options.su1n) throw ActionError("ch(n) factors need the su1n feature");
    models.push_back(build_factor(f.kind, f.param));
  }
  const ProductModel pm = direct_sum(models);
  const LieModel& g = *pm.model;
  const auto datum = decompose(pm.model);
  ParabolicCache cache(datum);
  Catalog cat;
  cat.space = g.name();
  Collector col(cat, options);

  col.admit({"FH", make_fh(datum, datum->simple_root(0).root_vector), "(a - l) + n", "{}", "point", "", 1, {}});

  for (std::size_t f = 0; f < pm.factors.size(); ++f) {
    CatalogOptions sub_opts = options;
    sub_opts.nc_search = false;
    Catalog sub = g.factors()[f].kind == FactorKind::sl ? enumerate_sl_model(pm.factors[f], sub_opts)
                                                        : rank1_catalog(direct_sum({pm.factors[f]}), sub_opts, false);
    const std::string prefix = "factor[" + num(f + 1) + "]:";
    for (auto& r : sub.identities) cat.identities.push_back({prefix + r.name, r.passed, r.detail});
    for (auto& n : sub.notes) cat.notes.push_back(prefix + n);
    for (const auto& e : sub.entries) {
      if (e.label == "FH") continue;
      CatalogEntry out = e;
      out.label = "Prod[" + num(f + 1) + "]:" + e.label;
      out.spec = product_assemble(pm, datum, f, e.spec);
      col.admit(std::move(out));
    }
  }

  for (std::size_t j = 0; j < datum->rank(); ++j) {
    for (std::size_t k = j + 1; k < datum->rank(); ++k) {
      const std::size_t fj = datum->simple_root(j).factor;
      const std::size_t fk = datum->simple_root(k).factor;
      if (fj == fk) continue;
      SpecPtr spec;
      SigmaChoice sigma;
      try {
        sigma = default_sigma(cache, j, k);
        spec = make_cer(cache, j, k, sigma);
      } catch (const ActionError&) {
        continue;  // multiplicities differ: no such entry
      }
      const RootMask phi = bit(j) | bit(k);
      col.admit({"CER(" + num(j + 1) + "," + num(k + 1) + ")", spec, "diagonal", mask_label(phi),
                 boundary_name(*datum, phi),
                 sigma.theta_equivariant ? "sigma theta-equivariant" : "sigma not theta-equivariant",
                 rank_one_boundary_dim(g.factors()[fj]), {}});
    }
  }
  col.finish();
  add_structural(cat, cache, options);
  return cat;
}

}  // namespace cohom

#include "cohom/verify.hpp"

#include <stdexcept>

namespace cohom {

namespace {

/// Gram–Schmidt with respect to the model inner product; no normalization.
std::vector<Vector> orthogonal_basis(const LieModel& g, const Subspace& v) {
  std::vector<Vector> q;
  std::vector<Scalar> norms;
  for (auto x : v.vectors()) {
    for (std::size_t a = 0; a < q.size(); ++a) axpy(x, -g.inner_product(x, q[a]) / norms[a], q[a]);
    norms.push_back(g.inner_product(x, x));
    q.push_back(std::move(x));
  }
  return q;
}

std::size_t rank_of(const std::vector<Vector>& vs, std::size_t ambient) {
  if (vs.empty()) return 0;
  return rank(Matrix::from_rows(vs, ambient));
}

void note(VerificationReport& r, std::string name, bool passed, std::string detail = {}) {
  r.notes.push_back(IdentityResult{std::move(name), passed, std::move(detail)});
}

}  // namespace

std::string to_string(Certainty c) { return c == Certainty::exact ? "exact" : "sampled"; }

std::string to_string(TriState t) {
  switch (t) {
    case TriState::yes:
      return "yes";
    case TriState::no:
      return "no";
    case TriState::not_checked:
      return "not-checked";
  }
  return "?";
}

std::string to_string(Nc2Certificate c) {
  switch (c) {
    case Nc2Certificate::none:
      return "none";
    case Nc2Certificate::contains_so:
      return "contains-so";
    case Nc2Certificate::sampled_tangent:
      return "sampled-tangent";
    case Nc2Certificate::failed_witness:
      return "failed-witness";
  }
  return "?";
}

Vector Sampler::combination(const std::vector<Vector>& basis) {
  if (basis.empty()) throw std::invalid_argument("Sampler::combination: empty basis");
  for (;;) {
    Vector x(basis.front().size(), Scalar(0));
    bool any = false;
    for (const auto& b : basis) {
      const long c = coefficient();
      if (c == 0) continue;
      axpy(x, Scalar(c), b);
      any = true;
    }
    if (any && !is_zero(x)) return x;
  }
}

Subspace orbit_tangent_at_o(const LieModel& g, const Subspace& h) { return image(g.pi_p(), h); }

SliceResult slice_cohomogeneity(const LieModel& g, const Subspace& h, std::uint64_t seed, std::size_t samples) {
  const std::size_t d = g.dim();
  const Subspace nu = orthocomplement_in(orbit_tangent_at_o(g, h), g.p(), g.inner());
  const Subspace iso = subspace_intersect(h, g.k());
  const auto nus = nu.vectors();
  const auto isos = iso.vectors();
  SliceResult out;
  out.normal_dim = nu.dim();
  out.isotropy_dim = iso.dim();

  bool trivial = true;
  for (const auto& t : isos) {
    for (const auto& xi : nus) {
      const Vector b = g.bracket(t, xi);
      if (!nu.contains(b)) throw std::domain_error("slice_cohomogeneity: [𝔥∩𝔨, ν] ⊄ ν");
      trivial = trivial && is_zero(b);
    }
  }
  if (nu.dim() <= 1 || trivial) {
    out.cohomogeneity = nu.dim();
    out.certainty = Certainty::exact;
    return out;
  }
  Sampler rng(seed);
  for (std::size_t s = 0; s < samples && out.max_rank + 1 < nu.dim(); ++s) {
    const Vector xi = rng.combination(nus);
    std::vector<Vector> tangent;
    for (const auto& t : isos) tangent.push_back(g.bracket(t, xi));
    out.max_rank = std::max(out.max_rank, rank_of(tangent, d));
  }
  out.cohomogeneity = nu.dim() - out.max_rank;
  // Orbits of an orthogonal action lie in spheres, so rank ≤ dim ν − 1.
  out.certainty = out.max_rank + 1 == nu.dim() ? Certainty::exact : Certainty::sampled;
  return out;
}

bool check_lie_triple(const LieModel& g, const Subspace& b) {
  if (!g.p().contains(b)) throw std::invalid_argument("check_lie_triple: b is not inside 𝔭");
  return b.contains(bracket_span(g, bracket_span(g, b, b), b));
}

Nc1Result check_nc1(const ParabolicDatum& pd, const Subspace& v) {
  const LieModel& g = pd.model();
  const Subspace complement = orthocomplement_in(v, pd.n_phi, g.inner());
  Nc1Result out;
  out.projected = image(g.pi_p(), normalizer(g, pd.m, complement));
  out.passed = out.projected.contains(pd.b);
  out.contains_a_upper = out.projected.contains(pd.a_upper);
  return out;
}

Nc2Result check_nc2(const ParabolicDatum& pd, const Subspace& v, std::uint64_t seed, std::size_t samples) {
  const LieModel& g = pd.model();
  const std::size_t k = v.dim();
  const auto q = orthogonal_basis(g, v);
  std::vector<Scalar> norms;
  for (const auto& x : q) norms.push_back(g.inner_product(x, x));
  const auto nk = normalizer(g, pd.k_phi, v).vectors();

  // Restrictions to 𝔳 in the basis q, flattened row-major.
  std::vector<Vector> restricted;
  for (const auto& x : nk) {
    Vector flat(k * k, Scalar(0));
    for (std::size_t b = 0; b < k; ++b) {
      const Vector y = g.bracket(x, q[b]);
      for (std::size_t a = 0; a < k; ++a) flat[a * k + b] = g.inner_product(y, q[a]) / norms[a];
    }
    restricted.push_back(std::move(flat));
  }
  const Subspace image_algebra = Subspace::span(k * k, restricted);
  Nc2Result out;
  out.image_dim = image_algebra.dim();

  bool full = true;
  for (std::size_t a = 0; a < k && full; ++a) {
    for (std::size_t b = a + 1; b < k && full; ++b) {
      Vector r(k * k, Scalar(0));
      r[a * k + b] = norms[b];
      r[b * k + a] = -norms[a];
      full = image_algebra.contains(r);
    }
  }
  if (full) {
    out.verdict = TriState::yes;
    out.certificate = Nc2Certificate::contains_so;
    return out;
  }
  Sampler rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    ++out.samples_used;
    const Vector u = rng.combination(q);
    std::vector<Vector> span{u};
    for (const auto& x : nk) span.push_back(g.bracket(x, u));
    if (rank_of(span, g.dim()) < k) {
      out.verdict = TriState::no;
      out.certificate = Nc2Certificate::failed_witness;
      return out;
    }
  }
  out.verdict = TriState::yes;
  out.certificate = Nc2Certificate::sampled_tangent;
  return out;
}

PolarCertificate check_polar_certificate(const ActionSpec& cer) {
  const auto* data = std::get_if<CerData>(&cer.data);
  if (data == nullptr) throw std::invalid_argument("check_polar_certificate: spec is not of CER kind");
  const LieModel& g = cer.model();
  const Subspace a_left = subspace_intersect(g.a(), data->source);
  // Orthogonal complement of the diagonal in 𝔞_j ⊕ σ𝔞_j; equals {X − σX} when σ is an isometry.
  std::vector<Vector> diagonal;
  for (const auto& x : a_left.vectors()) diagonal.push_back(add(x, data->sigma.apply(x)));
  const Subspace both = subspace_sum(a_left, image(data->sigma, a_left));
  const Subspace sec = orthocomplement_in(Subspace::span(g.dim(), diagonal), both, g.inner());
  PolarCertificate out;
  out.section_dim = sec.dim();
  out.in_p = g.p().contains(sec);
  const Subspace sq = bracket_span(g, sec, sec);
  out.abelian = sq.is_zero();
  const Subspace tangent = orbit_tangent_at_o(g, cer.algebra);
  out.orthogonal_to_tangent = true;
  for (const auto& s : sec.vectors())
    for (const auto& t : tangent.vectors()) out.orthogonal_to_tangent = out.orthogonal_to_tangent && sgn(g.inner_product(s, t)) == 0;
  out.orthogonal_display = true;
  const Subspace display = subspace_sum(sec, sq);
  for (const auto& s : display.vectors())
    for (const auto& y : cer.algebra.vectors()) out.orthogonal_display = out.orthogonal_display && sgn(g.inner_product(s, y)) == 0;
  return out;
}

bool VerificationReport::identities_pass() const {
  for (const auto& n : notes)
    if (!n.passed) return false;
  return true;
}

VerificationReport verify(const ActionSpec& spec, const VerifyConfig& config) {
  const LieModel& g = spec.model();
  const Subspace& h = spec.algebra;
  VerificationReport r;
  r.dim_m = g.p().dim();
  const Subspace tangent = orbit_tangent_at_o(g, h);
  r.orbit_dim_at_o = tangent.dim();
  r.codim_at_o = r.dim_m - r.orbit_dim_at_o;

  note(r, "subalgebra", is_subalgebra(g, h));
  try {
    r.slice = slice_cohomogeneity(g, h, config.seed, config.samples);
    note(r, "slice-closure", true);
  } catch (const std::domain_error& e) {
    note(r, "slice-closure", false, e.what());
    r.slice.cohomogeneity = r.codim_at_o;
    r.slice.certainty = Certainty::sampled;
  }

  // Total geodesy of the orbit through o.
  const Subspace* boundary = nullptr;
  if (const auto* c = std::get_if<CeiData>(&spec.data)) boundary = &c->h_phi;
  if (const auto* c = std::get_if<CerData>(&spec.data)) boundary = &c->h_phi;
  if (is_theta_invariant(g, h)) {
    r.tg_scope = "ambient";
    r.totally_geodesic = check_lie_triple(g, tangent) ? TriState::yes : TriState::no;
  } else if (boundary != nullptr && is_theta_invariant(g, *boundary)) {
    r.tg_scope = "boundary-component";
    r.totally_geodesic = check_lie_triple(g, orbit_tangent_at_o(g, *boundary)) ? TriState::yes : TriState::no;
  }

  switch (spec.kind) {
    case ActionKind::FH:
    case ActionKind::FS: {
      const bool ok = h.dim() + 1 == g.a().dim() + g.n().dim();
      note(r, spec.kind == ActionKind::FH ? "fh-dimension" : "fs-dimension", ok);
      break;
    }
    case ActionKind::CEI: {
      const auto& c = std::get<CeiData>(spec.data);
      const auto& pd = *spec.parabolic;
      note(r, "extension-direct-sum", h.dim() == c.h_phi.dim() + pd.a_phi.dim() + pd.n_phi.dim());
      break;
    }
    case ActionKind::CER: {
      const auto& c = std::get<CerData>(spec.data);
      if (c.theta_equivariant) {
        const PolarCertificate pc = check_polar_certificate(spec);
        note(r, "polar-certificate", pc.passed(), "section dim " + std::to_string(pc.section_dim));
        note(r, "diagonal-lie-triple", check_lie_triple(g, orbit_tangent_at_o(g, c.h_phi)));
      }
      break;
    }
    case ActionKind::NC: {
      const auto& c = std::get<NcData>(spec.data);
      const auto& pd = *spec.parabolic;
      const Nc1Result n1 = check_nc1(pd, c.v);
      const Nc2Result n2 = check_nc2(pd, c.v, config.seed, config.samples);
      r.nc1 = n1.passed ? TriState::yes : TriState::no;
      r.nc2 = n2.verdict;
      r.nc2_certificate = n2.certificate;
      note(r, "theta-dual-normalizer", c.theta_dual_holds);
      if (c.expect_a_plus_n) {
        const Subspace an = subspace_sum(g.a(), orthocomplement_in(c.v, g.n(), g.inner()));
        note(r, "contains-a-plus-n-minus-v", h.contains(an));
      }
      break;
    }
    case ActionKind::Product: {
      const auto& c = std::get<ProductData>(spec.data);
      const VerificationReport inner = verify(*c.inner, config);
      r.nc1 = inner.nc1;
      r.nc2 = inner.nc2;
      r.nc2_certificate = inner.nc2_certificate;
      if (r.totally_geodesic == TriState::not_checked && inner.tg_scope == "boundary-component") {
        r.totally_geodesic = inner.totally_geodesic;
        r.tg_scope = inner.tg_scope;
      }
      for (const auto& n : inner.notes) note(r, "factor:" + n.name, n.passed, n.detail);
      note(r, "factor-codim", inner.codim_at_o == r.codim_at_o);
      break;
    }
  }
  return r;
}

std::vector<IdentityResult> structural_invariants(ParabolicCache& cache, std::size_t max_rank) {
  const RootDatum& datum = *cache.datum();
  const LieModel& g = *datum.model;
  const std::size_t d = g.dim();
  std::vector<IdentityResult> out;
  const std::string tag = g.name() + ":";

  bool jacobi = true;
  bool theta_auto = true;
  for (std::size_t i = 0; i < d && (jacobi || theta_auto); ++i) {
    const Vector x = unit_vector(d, i);
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector y = unit_vector(d, j);
      const Vector xy = g.bracket(x, y);
      theta_auto = theta_auto && g.apply_theta(xy) == g.bracket(g.apply_theta(x), g.apply_theta(y));
      for (std::size_t k = j + 1; k < d && jacobi; ++k) {
        const Vector z = unit_vector(d, k);
        Vector s = g.bracket(xy, z);
        s = add(s, g.bracket(g.bracket(y, z), x));
        s = add(s, g.bracket(g.bracket(z, x), y));
        jacobi = is_zero(s);
      }
    }
  }
  out.push_back({tag + "jacobi", jacobi, {}});
  out.push_back({tag + "theta-automorphism", theta_auto, {}});

  bool invariant = true;
  for (std::size_t i = 0; i < d && invariant; ++i) {
    const Matrix a = g.ad(unit_vector(d, i));
    invariant = (a.transpose() * g.killing() + g.killing() * a).is_zero();
  }
  out.push_back({tag + "killing-invariance", invariant, {}});

  bool grading = true;
  std::vector<std::pair<Vector, Subspace>> spaces{{Vector(datum.rank(), Scalar(0)), datum.zero_space}};
  for (const auto& root : datum.roots) spaces.emplace_back(root.covector, root.space);
  for (const auto& [l1, s1] : spaces) {
    for (const auto& [l2, s2] : spaces) {
      const Vector sum = add(l1, l2);
      const Subspace br = bracket_span(g, s1, s2);
      if (br.is_zero()) continue;
      if (is_zero(sum)) {
        grading = grading && datum.zero_space.contains(br);
        continue;
      }
      auto it = datum.by_covector.find(sum);
      grading = grading && it != datum.by_covector.end() && datum.roots[it->second].space.contains(br);
    }
  }
  out.push_back({tag + "root-grading", grading, {}});

  if (datum.rank() > max_rank) return out;
  const RootMask all = datum.all_simple();
  bool triples = true;
  for (RootMask phi = 0; phi <= all; ++phi) triples = triples && check_lie_triple(g, cache.get(phi)->b);
  out.push_back({tag + "boundary-lie-triple", triples, {}});

  bool nested = true;
  std::string detail;
  for (RootMask phi = 0; phi <= all; ++phi) {
    for (RootMask psi = phi;; psi = (psi - 1) & phi) {
      try {
        cache.nested(psi, phi);
      } catch (const std::logic_error& e) {
        nested = false;
        detail = mask_label(psi) + "⊆" + mask_label(phi) + ": " + e.what();
      }
      if (psi == 0) break;
    }
  }
  out.push_back({tag + "nested-parabolic", nested, detail});
  return out;
}

}  // namespace cohom

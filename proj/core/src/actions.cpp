#include "cohom/actions.hpp"

#include <gmpxx.h>

#include <bit>
#include <stdexcept>

namespace cohom {

namespace {

std::shared_ptr<ActionSpec> new_spec(ActionKind kind, DatumPtr datum) {
  auto s = std::make_shared<ActionSpec>();
  s->kind = kind;
  s->datum = std::move(datum);
  return s;
}

void require_subalgebra(const LieModel& g, const Subspace& h, const char* who) {
  if (!is_subalgebra(g, h)) throw std::logic_error(std::string(who) + ": result is not a subalgebra");
}

RootMask bit(std::size_t i) { return static_cast<RootMask>(1u << i); }

/// Span of the entries (r, c) of matrix(x) listed in cells.
InclusionAction entry_probe(const LieModel& g, std::vector<std::pair<std::size_t, std::size_t>> cells) {
  return [&g, cells = std::move(cells)](const Vector& x) {
    const Matrix m = g.matrix(x);
    Vector out;
    out.reserve(cells.size());
    for (const auto& [r, c] : cells) out.push_back(m(r, c));
    return std::vector<Vector>{out};
  };
}

Subspace vanishing_entries(const LieModel& g, const Subspace& candidates,
                           std::vector<std::pair<std::size_t, std::size_t>> cells) {
  const std::size_t n = cells.size();
  return solve_inclusion_constraint(candidates, entry_probe(g, std::move(cells)), Subspace(n));
}

std::optional<Scalar> rational_sqrt(const Scalar& x) {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Scalar r(rn, rd);
  r.canonicalize();
  return r;
}

/// σ = T (SᵀS)⁻¹ Sᵀ sends the columns of S to those of T and kills S^⊥.
Matrix map_columns(const std::vector<Vector>& from, const std::vector<Vector>& to, std::size_t d) {
  const Matrix s = Matrix::from_columns(from, d);
  const Matrix t = Matrix::from_columns(to, d);
  const auto gram_inv = inverse(s.transpose() * s);
  if (!gram_inv) throw std::logic_error("map_columns: source vectors are dependent");
  return t * *gram_inv * s.transpose();
}

std::size_t first_root_of_factor(const RootDatum& datum, std::size_t factor) {
  const RootMask m = datum.factor_mask(factor);
  if (m == 0) throw std::logic_error("factor without simple roots");
  return static_cast<std::size_t>(std::countr_zero(m));
}

std::size_t multiplicity_of(const RootDatum& datum, const Vector& covector) {
  auto it = datum.by_covector.find(covector);
  return it == datum.by_covector.end() ? 0 : datum.multiplicity(it->second);
}

bool commutes_with_theta(const LieModel& g, const Matrix& sigma, const Subspace& source) {
  for (const auto& x : source.vectors()) {
    if (g.apply_theta(sigma.apply(x)) != sigma.apply(g.apply_theta(x))) return false;
  }
  return true;
}

Subspace graph_of(const Matrix& sigma, const Subspace& source) {
  std::vector<Vector> vs;
  for (const auto& x : source.vectors()) vs.push_back(add(x, sigma.apply(x)));
  return Subspace::span(source.ambient_dim(), vs);
}

}  // namespace

std::string kind_name(ActionKind kind) {
  switch (kind) {
    case ActionKind::FH:
      return "FH";
    case ActionKind::FS:
      return "FS";
    case ActionKind::CEI:
      return "CEI";
    case ActionKind::CER:
      return "CER";
    case ActionKind::NC:
      return "NC";
    case ActionKind::Product:
      return "Prod";
  }
  return "?";
}

SpecPtr make_fh(DatumPtr datum, const Vector& line) {
  const LieModel& g = *datum->model;
  if (line.size() != g.dim() || is_zero(line)) throw ActionError("make_fh: ℓ must be a line");
  if (!g.a().contains(line)) throw ActionError("make_fh: ℓ is not inside 𝔞");
  auto s = new_spec(ActionKind::FH, datum);
  const Subspace ell = Subspace::span(g.dim(), {line});
  s->algebra = subspace_sum(orthocomplement_in(ell, g.a(), g.inner()), g.n());
  require_subalgebra(g, s->algebra, "make_fh");
  s->data = FhData{line};
  return s;
}

SpecPtr make_fs(DatumPtr datum, std::size_t root, const Vector& line) {
  const LieModel& g = *datum->model;
  if (root >= datum->rank()) throw ActionError("make_fs: α_j is not a simple root");
  if (line.size() != g.dim() || is_zero(line)) throw ActionError("make_fs: ℓ must be a line");
  if (!datum->simple_root(root).space.contains(line)) throw ActionError("make_fs: ℓ is not inside a simple root space");
  auto s = new_spec(ActionKind::FS, datum);
  const Subspace ell = Subspace::span(g.dim(), {line});
  s->algebra = subspace_sum(g.a(), orthocomplement_in(ell, g.n(), g.inner()));
  require_subalgebra(g, s->algebra, "make_fs");
  s->data = FsData{root, line};
  return s;
}

SpecPtr canonical_extend(const ParabolicPtr& pd, const Subspace& h_phi, std::string name) {
  const LieModel& g = pd->model();
  if (!pd->s.contains(h_phi)) throw ActionError("canonical_extend: 𝔥_Φ is not inside 𝔰_Φ");
  if (!is_subalgebra(g, h_phi)) throw ActionError("canonical_extend: 𝔥_Φ is not a subalgebra");
  auto s = new_spec(ActionKind::CEI, pd->datum);
  s->parabolic = pd;
  s->algebra = subspace_sum({h_phi, pd->a_phi, pd->n_phi}, g.dim());
  require_subalgebra(g, s->algebra, "canonical_extend");
  s->data = CeiData{pd->phi, std::move(name), h_phi};
  return s;
}

Subspace extend_within(const NestedParabolicDatum& nd, const Subspace& h_psi) {
  return subspace_sum({h_psi, nd.a_np, nd.n_np}, h_psi.ambient_dim());
}

bool is_isomorphism(const LieModel& g, const Matrix& sigma, const Subspace& source, const Subspace& target) {
  if (source.dim() != target.dim()) return false;
  if (image(sigma, source) != target) return false;
  const auto b = source.vectors();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      const Vector lhs = sigma.apply(g.bracket(b[i], b[j]));
      const Vector rhs = g.bracket(sigma.apply(b[i]), sigma.apply(b[j]));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

SigmaChoice default_sigma(ParabolicCache& cache, std::size_t j, std::size_t k) {
  const RootDatum& datum = *cache.datum();
  const LieModel& g = *datum.model;
  const std::size_t d = g.dim();
  const Subspace& sj = cache.get(bit(j))->s;
  const Subspace& sk = cache.get(bit(k))->s;
  const std::size_t fj = datum.simple_root(j).factor;
  const std::size_t fk = datum.simple_root(k).factor;
  const FactorInfo& ij = g.factors().at(fj);
  const FactorInfo& ik = g.factors().at(fk);

  if (fj != fk && ij.kind == ik.kind && ij.param == ik.param) {
    Matrix shift(d, d);
    for (std::size_t t = 0; t < ij.dim; ++t) shift(ik.coord_offset + t, ij.coord_offset + t) = 1;
    if (is_isomorphism(g, shift, sj, sk)) return {shift, commutes_with_theta(g, shift, sj)};
  }
  if (sj.dim() != 3 || sk.dim() != 3) throw ActionError("default_sigma: no standard isomorphism 𝔰_{α_j} → 𝔰_{α_k}");

  const Root& rj = datum.simple_root(j);
  const Root& rk = datum.simple_root(k);
  const Vector x = rj.space.basis_vector(0);
  const Vector y = rk.space.basis_vector(0);
  const Vector tx = g.apply_theta(x);
  const Vector ty = g.apply_theta(y);
  const Vector hx = g.bracket(x, tx);
  const Vector hy = g.bracket(y, ty);
  const Scalar mu_x = -datum.evaluate(rj.covector, hx);
  const Scalar mu_y = -datum.evaluate(rk.covector, hy);
  const Scalar ratio = mu_x / mu_y;
  SigmaChoice out;
  if (const auto c = rational_sqrt(ratio)) {
    // X ↦ cX', θX ↦ cθX', [X,θX] ↦ c²[X',θX'] commutes with θ.
    out.sigma = map_columns({x, tx, hx}, {scale(*c, y), scale(*c, ty), scale(*c * *c, hy)}, d);
  } else {
    // Standard triples to standard triples; rational but not θ-equivariant.
    out.sigma = map_columns({x, tx, hx}, {y, scale(ratio, ty), scale(ratio, hy)}, d);
  }
  if (!is_isomorphism(g, out.sigma, sj, sk)) throw std::logic_error("default_sigma: triple map is not an isomorphism");
  out.theta_equivariant = commutes_with_theta(g, out.sigma, sj);
  return out;
}

SpecPtr make_cer(ParabolicCache& cache, std::size_t j, std::size_t k, const SigmaChoice& choice) {
  const RootDatum& datum = *cache.datum();
  const LieModel& g = *datum.model;
  if (j == k || j >= datum.rank() || k >= datum.rank()) throw ActionError("make_cer: need two distinct simple roots");
  if (datum.dynkin_edge(j, k)) throw ActionError("make_cer: α_j and α_k are joined in the Dynkin diagram");
  const Vector& cj = datum.simple_root(j).covector;
  const Vector& ck = datum.simple_root(k).covector;
  if (multiplicity_of(datum, cj) != multiplicity_of(datum, ck) ||
      multiplicity_of(datum, scale(Scalar(2), cj)) != multiplicity_of(datum, scale(Scalar(2), ck)))
    throw ActionError("make_cer: multiplicity mismatch");
  const Subspace& sj = cache.get(bit(j))->s;
  const Subspace& sk = cache.get(bit(k))->s;
  if (!is_isomorphism(g, choice.sigma, sj, sk)) throw ActionError("make_cer: σ is not a Lie algebra isomorphism");

  const RootMask phi = bit(j) | bit(k);
  const auto pd = cache.get(phi);
  CerData data;
  data.left = j;
  data.right = k;
  data.sigma = choice.sigma;
  data.theta_equivariant = choice.theta_equivariant;
  data.source = sj;
  data.target = sk;
  data.h_phi = graph_of(choice.sigma, sj);
  data.phi = phi;
  if (!pd->s.contains(data.h_phi)) throw std::logic_error("make_cer: diagonal escapes 𝔰_Φ");
  auto s = new_spec(ActionKind::CER, cache.datum());
  s->parabolic = pd;
  s->algebra = subspace_sum({data.h_phi, pd->a_phi, pd->n_phi}, g.dim());
  require_subalgebra(g, s->algebra, "make_cer");
  s->data = std::move(data);
  return s;
}

SpecPtr make_diagonal(DatumPtr datum, std::size_t left, std::size_t right) {
  const LieModel& g = *datum->model;
  const auto& fs = g.factors();
  if (left == right || left >= fs.size() || right >= fs.size()) throw ActionError("make_diagonal: need two factors");
  if (fs[left].kind != fs[right].kind || fs[left].param != fs[right].param)
    throw ActionError("make_diagonal: factors are not isomorphic models");
  const std::size_t d = g.dim();
  Matrix shift(d, d);
  for (std::size_t t = 0; t < fs[left].dim; ++t) shift(fs[right].coord_offset + t, fs[left].coord_offset + t) = 1;
  CerData data;
  data.left = left;
  data.right = right;
  data.factor_level = true;
  data.sigma = shift;
  data.source = g.factor_block(left);
  data.target = g.factor_block(right);
  if (!is_isomorphism(g, shift, data.source, data.target)) throw std::logic_error("make_diagonal: shift is not an isomorphism");
  data.theta_equivariant = commutes_with_theta(g, shift, data.source);
  data.h_phi = graph_of(shift, data.source);
  data.phi = datum->factor_mask(left) | datum->factor_mask(right);
  auto s = new_spec(ActionKind::CER, datum);
  s->algebra = data.h_phi;
  require_subalgebra(g, s->algebra, "make_diagonal");
  s->data = std::move(data);
  return s;
}

SpecPtr nilpotent_construct(const ParabolicPtr& pd, const Subspace& v, bool expect_a_plus_n) {
  const LieModel& g = pd->model();
  if (!pd->removed) throw ActionError("nilpotent_construct: Φ is not of the form Λ∖{α_j}");
  if (v.dim() < 2) throw ActionError("nilpotent_construct: dim 𝔳 < 2");
  const auto grade1 = pd->grading.find(1);
  if (grade1 == pd->grading.end() || !grade1->second.contains(v))
    throw ActionError("nilpotent_construct: 𝔳 is not inside 𝔫_Φ¹");
  NcData data;
  data.removed = *pd->removed;
  data.v = v;
  data.complement = orthocomplement_in(v, pd->n_phi, g.inner());
  data.normalizer = normalizer(g, pd->l, data.complement);
  data.theta_dual_holds = theta_image(g, normalizer(g, pd->l, v)) == data.normalizer;
  data.expect_a_plus_n = expect_a_plus_n;
  auto s = new_spec(ActionKind::NC, pd->datum);
  s->parabolic = pd;
  s->algebra = subspace_sum(data.normalizer, data.complement);
  require_subalgebra(g, s->algebra, "nilpotent_construct");
  s->data = std::move(data);
  return s;
}

Vector embed_factor_vector(const ProductModel& pm, std::size_t factor, const Vector& x) {
  const LieModel& f = *pm.factors.at(factor);
  if (x.size() != f.dim()) throw DimensionError("embed_factor_vector: length mismatch");
  Vector out(pm.model->dim(), Scalar(0));
  const std::size_t off = pm.block_offsets.at(factor);
  for (std::size_t i = 0; i < x.size(); ++i) out[off + i] = x[i];
  return out;
}

Subspace embed_factor_subspace(const ProductModel& pm, std::size_t factor, const Subspace& u) {
  std::vector<Vector> vs;
  for (const auto& x : u.vectors()) vs.push_back(embed_factor_vector(pm, factor, x));
  return Subspace::span(pm.model->dim(), vs);
}

SpecPtr product_assemble(const ProductModel& pm, DatumPtr product_datum, std::size_t factor, SpecPtr inner) {
  if (factor >= pm.factors.size()) throw ActionError("product_assemble: factor index out of range");
  if (product_datum->model != pm.model) throw ActionError("product_assemble: datum of another model");
  if (inner->datum->model != pm.factors[factor]) throw ActionError("product_assemble: block mismatch");
  const std::size_t d = pm.model->dim();
  std::vector<Subspace> parts{embed_factor_subspace(pm, factor, inner->algebra)};
  for (std::size_t i = 0; i < pm.factors.size(); ++i) {
    if (i == factor) continue;
    parts.push_back(embed_factor_subspace(pm, i, Subspace::full(pm.factors[i]->dim())));
  }
  auto s = new_spec(ActionKind::Product, std::move(product_datum));
  s->algebra = subspace_sum(parts, d);
  require_subalgebra(*pm.model, s->algebra, "product_assemble");
  s->data = ProductData{factor, std::move(inner), pm.block_offsets[factor]};
  return s;
}

std::vector<NamedSubalgebra> builtin_cei_catalog(ParabolicCache& cache, RootMask phi, bool allow_ch) {
  const RootDatum& datum = *cache.datum();
  const LieModel& g = *datum.model;
  if (phi == 0 || !mask_contains(datum.all_simple(), phi)) throw ActionError("builtin_cei_catalog: bad Φ");
  if (dynkin_components(datum, phi).size() != 1) throw ActionError("builtin_cei_catalog: Φ is not connected");
  const std::size_t lo = static_cast<std::size_t>(std::countr_zero(phi));
  const std::size_t f = datum.simple_root(lo).factor;
  const FactorInfo& fi = g.factors().at(f);
  const auto pd = cache.get(phi);
  const std::size_t m = mask_size(phi);
  std::vector<NamedSubalgebra> out;

  switch (fi.kind) {
    case FactorKind::sl: {
      if (m == 1) {
        out.push_back({"so(2)", subspace_intersect(g.k(), pd->s)});
        break;
      }
      const std::size_t hi = 31 - static_cast<std::size_t>(std::countl_zero(phi));
      out.push_back({"sl(" + std::to_string(m) + ")+R", cache.nested(phi & ~bit(hi), phi).l_np});
      if (m == 3) {
        const std::size_t base = fi.matrix_offset + (lo - first_root_of_factor(datum, f));
        // XᵀJ + JX = 0 on the 4×4 block, J = [[0, I], [−I, 0]].
        Matrix jm(4, 4);
        jm(0, 2) = 1;
        jm(1, 3) = 1;
        jm(2, 0) = -1;
        jm(3, 1) = -1;
        const auto probe = [&g, base, jm](const Vector& x) {
          const Matrix full = g.matrix(x);
          Matrix b(4, 4);
          for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) b(r, c) = full(base + r, base + c);
          const Matrix e = b.transpose() * jm + jm * b;
          Vector flat;
          for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) flat.push_back(e(r, c));
          return std::vector<Vector>{flat};
        };
        out.push_back({"sp(2,R)", solve_inclusion_constraint(pd->s, probe, Subspace(16))});
      }
      break;
    }
    case FactorKind::rh: {
      const std::size_t n = fi.param;
      const std::size_t o = fi.matrix_offset;
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t r = 0; r <= k; ++r) {
          for (std::size_t c = k + 1; c <= n; ++c) {
            cells.emplace_back(o + r, o + c);
            cells.emplace_back(o + c, o + r);
          }
        }
        std::string name = k == 0       ? "so(" + std::to_string(n) + ")"
                           : k + 1 == n ? "so(1," + std::to_string(k) + ")"
                                        : "so(1," + std::to_string(k) + ")+so(" + std::to_string(n - k) + ")";
        out.push_back({std::move(name), vanishing_entries(g, pd->s, std::move(cells))});
      }
      break;
    }
    case FactorKind::ch: {
      if (!allow_ch) throw ActionError("builtin_cei_catalog: ch(n) embeddings need the su1n feature");
      const std::size_t n = fi.param;
      const std::size_t s = n + 1;
      const std::size_t o = fi.matrix_offset;
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t r = 0; r <= k; ++r) {
          for (std::size_t c = k + 1; c <= n; ++c) {
            for (const auto& [a, b] : {std::pair{r, c}, std::pair{c, r}}) {
              cells.emplace_back(o + a, o + b);
              cells.emplace_back(o + a, o + s + b);
            }
          }
        }
        out.push_back({"s(u(1," + std::to_string(k) + ")+u(" + std::to_string(n - k) + "))",
                       vanishing_entries(g, pd->s, std::move(cells))});
      }
      std::vector<std::pair<std::size_t, std::size_t>> imaginary;
      for (std::size_t r = 0; r < s; ++r)
        for (std::size_t c = 0; c < s; ++c) imaginary.emplace_back(o + r, o + s + c);
      out.push_back({"so(1," + std::to_string(n) + ")", vanishing_entries(g, pd->s, std::move(imaginary))});
      break;
    }
  }
  return out;
}

NamedSubalgebra mirrored_levi(ParabolicCache& cache, RootMask phi) {
  const RootDatum& datum = *cache.datum();
  if (mask_size(phi) < 2 || dynkin_components(datum, phi).size() != 1)
    throw ActionError("mirrored_levi: Φ must be connected with at least two roots");
  const std::size_t lo = static_cast<std::size_t>(std::countr_zero(phi));
  return {"sl(" + std::to_string(mask_size(phi)) + ")+R", cache.nested(phi & ~bit(lo), phi).l_np};
}

}  // namespace cohom

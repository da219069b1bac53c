#include "cohom/parabolic.hpp"

#include <stdexcept>

namespace cohom {

namespace {

Subspace projected_root_spaces(const RootDatum& datum, const std::vector<std::size_t>& roots, const Matrix& proj) {
  std::vector<Vector> out;
  for (std::size_t i : roots) {
    for (const auto& v : datum.roots[i].space.vectors()) out.push_back(proj.apply(v));
  }
  return Subspace::span(datum.dim(), out);
}

std::vector<std::size_t> difference(const std::vector<std::size_t>& all, const std::vector<std::size_t>& removed) {
  std::vector<std::size_t> out;
  for (std::size_t x : all) {
    bool skip = false;
    for (std::size_t y : removed) skip = skip || x == y;
    if (!skip) out.push_back(x);
  }
  return out;
}

}  // namespace

ParabolicPtr build_parabolic(DatumPtr datum_ptr, RootMask phi) {
  const RootDatum& datum = *datum_ptr;
  if (!mask_contains(datum.all_simple(), phi)) throw std::invalid_argument("build_parabolic: Φ is not a subset of Λ");
  const LieModel& g = *datum.model;
  const std::size_t d = g.dim();
  const std::size_t r = datum.rank();
  auto pd = std::make_shared<ParabolicDatum>();
  pd->datum = datum_ptr;
  pd->phi = phi;
  pd->sigma = sigma_phi(datum, phi);

  pd->l = subspace_sum(datum.zero_space, root_space_sum(datum, pd->sigma.all));

  const auto phi_idx = mask_indices(phi);
  if (phi_idx.empty()) {
    pd->a_phi = g.a();
  } else {
    std::vector<Vector> rows;
    for (std::size_t i : phi_idx) rows.push_back(datum.simple_root(i).covector);
    const Matrix ker = kernel(Matrix::from_rows(rows, r));
    std::vector<Vector> vs;
    for (std::size_t k = 0; k < ker.rows(); ++k) {
      Vector h(d, Scalar(0));
      for (std::size_t t = 0; t < r; ++t) axpy(h, ker(k, t), datum.a_basis[t]);
      vs.push_back(std::move(h));
    }
    pd->a_phi = Subspace::span(d, vs);
  }
  std::vector<Vector> hs;
  for (std::size_t i : phi_idx) hs.push_back(datum.simple_root(i).root_vector);
  pd->a_upper = Subspace::span(d, hs);

  pd->n_phi = root_space_sum(datum, difference(datum.positive, pd->sigma.positive));
  pd->n_upper = root_space_sum(datum, pd->sigma.positive);
  pd->m = orthocomplement_in(pd->a_phi, pd->l, g.inner());
  pd->k_phi = subspace_sum(datum.k0, projected_root_spaces(datum, pd->sigma.positive, g.pi_k()));
  pd->b = subspace_sum(pd->a_upper, projected_root_spaces(datum, pd->sigma.positive, g.pi_p()));
  pd->s = subspace_sum(bracket_span(g, pd->b, pd->b), pd->b);
  pd->q = subspace_sum(pd->l, pd->n_phi);

  const RootMask rest = datum.all_simple() & ~phi;
  if (mask_size(rest) == 1) {
    const std::size_t j = mask_indices(rest).front();
    pd->removed = j;
    Matrix cov(r, r);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t t = 0; t < r; ++t) cov(k, t) = datum.simple_root(k).covector[t];
    const auto c = solve(cov, unit_vector(r, j));
    if (!c) throw std::logic_error("build_parabolic: simple covectors are dependent");
    Vector h(d, Scalar(0));
    for (std::size_t t = 0; t < r; ++t) axpy(h, (*c)[t], datum.a_basis[t]);
    pd->h_j = h;
    std::map<long, std::vector<std::size_t>> by_grade;
    for (std::size_t i : difference(datum.positive, pd->sigma.positive))
      by_grade[datum.roots[i].simple_coeffs[j]].push_back(i);
    for (const auto& [nu, roots] : by_grade) pd->grading.emplace(nu, root_space_sum(datum, roots));
  }
  return pd;
}

std::map<long, Subspace> grade_nilpotent(const ParabolicDatum& pd) {
  if (!pd.removed) throw std::invalid_argument("grade_nilpotent: Φ is not of the form Λ∖{α_j}");
  return pd.grading;
}

NestedParabolicDatum build_nested(const ParabolicDatum& psi, const ParabolicDatum& phi) {
  if (psi.datum != phi.datum) throw std::invalid_argument("build_nested: data from different models");
  if (!mask_contains(phi.phi, psi.phi)) throw std::invalid_argument("build_nested: Ψ is not a subset of Φ");
  const RootDatum& datum = *phi.datum;
  const LieModel& g = *datum.model;
  NestedParabolicDatum nd;
  nd.psi = psi.phi;
  nd.phi = phi.phi;
  const Subspace s0 = subspace_intersect(phi.s, datum.zero_space);
  nd.l_np = subspace_sum(s0, root_space_sum(datum, psi.sigma.all));
  nd.n_np = root_space_sum(datum, difference(phi.sigma.positive, psi.sigma.positive));
  if (nd.n_np != subspace_intersect(phi.n_upper, psi.n_phi))
    throw std::logic_error("build_nested: 𝔫_{Ψ,Φ} differs from 𝔫^Φ ∩ 𝔫_Ψ");
  nd.a_np = subspace_intersect(phi.a_upper, psi.a_phi);
  nd.m_np = orthocomplement_in(nd.a_np, nd.l_np, g.inner());
  nd.k_np = subspace_intersect(psi.k_phi, phi.s);
  if (nd.k_np != subspace_intersect(g.k(), nd.l_np))
    throw std::logic_error("build_nested: 𝔨_{Ψ,Φ} differs from 𝔨 ∩ 𝔩_{Ψ,Φ}");
  nd.q_np = subspace_sum(nd.l_np, nd.n_np);
  if (nd.q_np != subspace_intersect(psi.q, phi.s))
    throw std::logic_error("build_nested: 𝔮_{Ψ,Φ} differs from 𝔮_Ψ ∩ 𝔰_Φ");
  return nd;
}

ParabolicPtr ParabolicCache::get(RootMask phi) {
  auto it = cache_.find(phi);
  if (it != cache_.end()) return it->second;
  auto pd = build_parabolic(datum_, phi);
  cache_.emplace(phi, pd);
  return pd;
}

const NestedParabolicDatum& ParabolicCache::nested(RootMask psi, RootMask phi) {
  const auto key = std::make_pair(psi, phi);
  auto it = nested_.find(key);
  if (it != nested_.end()) return it->second;
  auto nd = build_nested(*get(psi), *get(phi));
  return nested_.emplace(key, std::move(nd)).first->second;
}

Vector TensorIdentification::tensor_coordinates(const Vector& x) const {
  std::vector<Vector> cols;
  for (const auto& p : pairs) cols.push_back(p.generator);
  const auto t = solve(Matrix::from_columns(cols, x.size()), x);
  if (!t) throw std::invalid_argument("tensor_coordinates: vector outside the nilradical");
  return *t;
}

Vector TensorIdentification::from_tensor(const Vector& t) const {
  if (t.size() != pairs.size()) throw DimensionError("from_tensor: length mismatch");
  Vector x(pairs.front().generator.size(), Scalar(0));
  for (std::size_t k = 0; k < pairs.size(); ++k) axpy(x, t[k], pairs[k].generator);
  return x;
}

TensorIdentification tensor_model_check(const DatumPtr& datum_ptr, std::size_t j) {
  const RootDatum& datum = *datum_ptr;
  const LieModel& g = *datum.model;
  if (g.factors().size() != 1 || g.factors().front().kind != FactorKind::sl)
    throw std::invalid_argument("tensor_model_check: model is not sl(n+1)");
  const std::size_t n = datum.rank();
  if (j < 1 || j > n) throw std::out_of_range("tensor_model_check: j out of range");
  const std::size_t size = g.matrix_size();
  const std::size_t cols = n - j + 1;
  TensorIdentification t;
  t.n = n;
  t.j = j;
  for (std::size_t i = 1; i <= j; ++i) {
    for (std::size_t l = 1; l <= cols; ++l) {
      // e_i ⊗ f^l ↦ E_{j−i+1, j+l}, generating 𝔤_{α_{j−i+1}+…+α_{j+l−1}}.
      std::vector<long> coeffs(n, 0);
      for (std::size_t k = j - i + 1; k <= j + l - 1; ++k) coeffs[k - 1] = 1;
      const auto root = datum.find_by_coeffs(coeffs);
      if (!root) throw std::logic_error("tensor_model_check: expected root is missing");
      Vector gen = g.coordinates(matrix_unit(size, j - i, j + l - 1));
      if (!datum.roots[*root].space.contains(gen)) throw std::logic_error("tensor_model_check: generator outside root space");
      t.pairs.push_back(TensorPair{i, l, *root, std::move(gen)});
    }
  }
  const RootMask phi = datum.all_simple() & ~static_cast<RootMask>(1u << (j - 1));
  auto pd = build_parabolic(datum_ptr, phi);
  std::vector<Vector> gens;
  for (const auto& p : t.pairs) gens.push_back(p.generator);
  t.spans_nilradical = Subspace::span(g.dim(), gens) == pd->n_phi;

  const std::size_t dimt = t.pairs.size();
  bool ok = t.spans_nilradical;
  for (const auto& x : pd->l.vectors()) {
    if (!ok) break;
    const Matrix xm = g.matrix(x);
    Matrix predicted(dimt, dimt);
    for (std::size_t i = 1; i <= j; ++i) {
      for (std::size_t l = 1; l <= cols; ++l) {
        const std::size_t col = (i - 1) * cols + (l - 1);
        for (std::size_t i2 = 1; i2 <= j; ++i2) predicted((i2 - 1) * cols + (l - 1), col) += xm(j - i2, j - i);
        for (std::size_t l2 = 1; l2 <= cols; ++l2) predicted((i - 1) * cols + (l2 - 1), col) -= xm(j + l - 1, j + l2 - 1);
      }
    }
    Matrix actual(dimt, dimt);
    for (std::size_t c = 0; c < dimt; ++c) {
      const Vector img = t.tensor_coordinates(g.bracket(x, t.pairs[c].generator));
      for (std::size_t r = 0; r < dimt; ++r) actual(r, c) = img[r];
    }
    ok = predicted == actual;
  }
  t.action_matches = ok;
  return t;
}

}  // namespace cohom

#include "cohom/roots.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cohom {

RootMask mask_of(const std::vector<std::size_t>& indices) {
  RootMask m = 0;
  for (std::size_t i : indices) {
    if (i >= 32) throw std::out_of_range("mask_of: root index too large");
    m |= static_cast<RootMask>(1u << i);
  }
  return m;
}

std::vector<std::size_t> mask_indices(RootMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

std::size_t mask_size(RootMask mask) { return static_cast<std::size_t>(std::popcount(mask)); }

bool mask_contains(RootMask outer, RootMask inner) { return (outer & inner) == inner; }

std::string mask_label(RootMask mask) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i : mask_indices(mask)) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

std::optional<std::size_t> RootDatum::find_by_coeffs(const std::vector<long>& coeffs) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].simple_coeffs == coeffs) return i;
  return std::nullopt;
}

Vector RootDatum::a_coordinates(const Vector& h) const { return model->a().coordinates(h); }

Scalar RootDatum::evaluate(const Vector& covector, const Vector& h) const {
  return dot(covector, a_coordinates(h));
}

RootMask RootDatum::factor_mask(std::size_t factor) const {
  RootMask m = 0;
  for (std::size_t i = 0; i < simple.size(); ++i)
    if (roots[simple[i]].factor == factor) m |= static_cast<RootMask>(1u << i);
  return m;
}

DatumPtr decompose(ModelPtr model) {
  auto datum = std::make_shared<RootDatum>();
  const LieModel& g = *model;
  const std::size_t d = g.dim();
  datum->model = model;
  datum->a_basis = g.a().vectors();
  const std::size_t r = datum->a_basis.size();

  std::vector<std::pair<Vector, Subspace>> blocks{{Vector{}, Subspace::full(d)}};
  for (const auto& h : datum->a_basis) {
    const auto eig = rational_eigenspaces(g.ad(h));
    std::vector<std::pair<Vector, Subspace>> refined;
    for (const auto& [cov, space] : blocks) {
      for (const auto& [lambda, e] : eig) {
        Subspace s = subspace_intersect(space, e);
        if (s.is_zero()) continue;
        Vector next = cov;
        next.push_back(lambda);
        refined.emplace_back(std::move(next), std::move(s));
      }
    }
    blocks = std::move(refined);
  }
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.second.dim();
  if (total != d) throw std::domain_error("decompose: ad(𝔞) is not simultaneously diagonalizable over ℚ");

  datum->a_gram = Matrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      datum->a_gram(i, j) = g.inner_product(datum->a_basis[i], datum->a_basis[j]);
  const Matrix gram_inv = *inverse(datum->a_gram);

  datum->zero_space = Subspace(d);
  for (auto& [cov, space] : blocks) {
    if (is_zero(cov)) {
      datum->zero_space = space;
      continue;
    }
    Root root;
    root.covector = cov;
    const Vector c = gram_inv.apply(cov);
    root.root_vector = Vector(d, Scalar(0));
    for (std::size_t k = 0; k < r; ++k) axpy(root.root_vector, c[k], datum->a_basis[k]);
    root.space = space;
    if (g.n().contains(space)) {
      root.positive = true;
    } else if (!subspace_intersect(g.n(), space).is_zero()) {
      throw std::logic_error("decompose: 𝔫 mismatch, a root space meets 𝔫 partially");
    }
    const auto f = g.factor_of(space.basis_vector(0));
    if (!f) throw std::logic_error("decompose: root space spans several factors");
    root.factor = *f;
    datum->roots.push_back(std::move(root));
  }

  std::vector<Subspace> pos_spaces;
  for (std::size_t i = 0; i < datum->roots.size(); ++i) {
    datum->by_covector.emplace(datum->roots[i].covector, i);
    if (datum->roots[i].positive) {
      datum->positive.push_back(i);
      pos_spaces.push_back(datum->roots[i].space);
    }
  }
  if (subspace_sum(pos_spaces, d) != g.n()) throw std::logic_error("decompose: 𝔫 mismatch");
  for (const auto& root : datum->roots) {
    auto it = datum->by_covector.find(scale(Scalar(-1), root.covector));
    if (it == datum->by_covector.end() || theta_image(g, root.space) != datum->roots[it->second].space)
      throw std::logic_error("decompose: θ𝔤_λ differs from 𝔤_{−λ}");
  }

  for (std::size_t i : datum->positive) {
    bool decomposable = false;
    for (std::size_t j : datum->positive) {
      auto it = datum->by_covector.find(sub(datum->roots[i].covector, datum->roots[j].covector));
      if (it != datum->by_covector.end() && datum->roots[it->second].positive) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) datum->simple.push_back(i);
  }
  std::sort(datum->simple.begin(), datum->simple.end(), [&](std::size_t x, std::size_t y) {
    const Root& a = datum->roots[x];
    const Root& b = datum->roots[y];
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.space.pivots().front() < b.space.pivots().front();
  });
  if (datum->simple.size() != r) throw std::logic_error("decompose: number of simple roots differs from rank");

  Matrix simple_cols(r, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t t = 0; t < r; ++t) simple_cols(t, k) = datum->roots[datum->simple[k]].covector[t];
  const Matrix simple_inv = *inverse(simple_cols);
  for (auto& root : datum->roots) {
    const Vector c = simple_inv.apply(root.covector);
    bool nonneg = true;
    bool nonpos = true;
    for (const auto& x : c) {
      if (x.get_den() != 1) throw std::logic_error("decompose: non-integral simple-root coefficients");
      if (sgn(x) < 0) nonneg = false;
      if (sgn(x) > 0) nonpos = false;
      root.simple_coeffs.push_back(x.get_num().get_si());
    }
    if (root.positive ? !nonneg : !nonpos) throw std::logic_error("decompose: mixed-sign simple-root coefficients");
  }

  datum->cartan.assign(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Vector& hi = datum->roots[datum->simple[i]].root_vector;
      const Vector& hj = datum->roots[datum->simple[j]].root_vector;
      const Scalar v = 2 * g.inner_product(hi, hj) / g.inner_product(hj, hj);
      if (v.get_den() != 1) throw std::logic_error("decompose: non-integral Cartan integer");
      datum->cartan[i][j] = v.get_num().get_si();
    }
  }

  datum->k0 = orthocomplement_in(g.a(), datum->zero_space, g.inner());
  return datum;
}

std::vector<RootMask> dynkin_components(const RootDatum& datum, RootMask phi) {
  std::vector<RootMask> out;
  RootMask remaining = phi;
  while (remaining != 0) {
    const std::size_t seed = static_cast<std::size_t>(std::countr_zero(remaining));
    RootMask comp = static_cast<RootMask>(1u << seed);
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i : mask_indices(comp)) {
        for (std::size_t j : mask_indices(remaining & ~comp)) {
          if (datum.dynkin_edge(i, j)) {
            comp |= static_cast<RootMask>(1u << j);
            grew = true;
          }
        }
      }
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

SigmaPhi sigma_phi(const RootDatum& datum, RootMask phi) {
  SigmaPhi out;
  for (std::size_t i = 0; i < datum.roots.size(); ++i) {
    const auto& c = datum.roots[i].simple_coeffs;
    bool inside = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] != 0 && !(phi & (1u << k))) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    out.all.push_back(i);
    if (datum.roots[i].positive) out.positive.push_back(i);
  }
  return out;
}

Subspace root_space_sum(const RootDatum& datum, const std::vector<std::size_t>& roots) {
  std::vector<Subspace> parts;
  parts.reserve(roots.size());
  for (std::size_t i : roots) parts.push_back(datum.roots.at(i).space);
  return subspace_sum(parts, datum.dim());
}

}  // namespace cohom

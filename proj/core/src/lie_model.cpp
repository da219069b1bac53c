#include "cohom/lie_model.hpp"

#include <stdexcept>

namespace cohom {

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

Matrix embed_block(const Matrix& x, std::size_t size, std::size_t offset) {
  Matrix out(size, size);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out(offset + r, offset + c) = x(r, c);
  return out;
}

}  // namespace

std::string factor_name(FactorKind kind, std::size_t param) {
  switch (kind) {
    case FactorKind::sl:
      return "sl(" + std::to_string(param) + ")";
    case FactorKind::rh:
      return "rh(" + std::to_string(param) + ")";
    case FactorKind::ch:
      return "ch(" + std::to_string(param) + ")";
  }
  return "?";
}

Matrix matrix_unit(std::size_t size, std::size_t r, std::size_t c) {
  Matrix m(size, size);
  m(r, c) = 1;
  return m;
}

LieModel::LieModel(Input in)
    : name_(std::move(in.name)),
      matrix_size_(in.matrix_size),
      basis_(std::move(in.basis)),
      factors_(std::move(in.factors)),
      complex_structure_(std::move(in.complex_structure)) {
  const std::size_t d = basis_.size();
  const std::size_t cells = matrix_size_ * matrix_size_;
  if (d == 0) throw std::invalid_argument("LieModel: empty basis");

  std::vector<Vector> flat;
  flat.reserve(d);
  for (const auto& b : basis_) {
    if (b.rows() != matrix_size_ || b.cols() != matrix_size_)
      throw DimensionError("LieModel: basis matrix of wrong size");
    flat.push_back(flatten(b));
  }
  const Echelon e = echelon(Matrix::from_rows(flat, cells));
  if (e.pivots.size() != d) throw std::invalid_argument("LieModel: basis is linearly dependent");
  coord_positions_ = e.pivots;
  Matrix restricted(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t t = 0; t < d; ++t) restricted(i, t) = flat[i][coord_positions_[t]];
  coord_inverse_ = *inverse(restricted);

  sc_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector c = coordinates(commutator(basis_[i], basis_[j]));
      for (std::size_t k = 0; k < d; ++k) {
        if (sgn(c[k]) == 0) continue;
        sc_[i * d + j].emplace_back(k, c[k]);
        sc_[j * d + i].emplace_back(k, -c[k]);
      }
    }
  }

  theta_ = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Vector c = coordinates(-basis_[i].transpose());
    for (std::size_t k = 0; k < d; ++k) theta_(k, i) = c[k];
  }
  if (!(theta_ * theta_ == Matrix::identity(d))) throw std::logic_error("LieModel: θ is not an involution");

  // ℬ(b_i, b_j) = tr(ad b_i ad b_j) = Σ_{(k,l)} ad_i(k,l) ad_j(l,k).
  std::vector<Matrix> ads;
  ads.reserve(d);
  for (std::size_t i = 0; i < d; ++i) ads.push_back(ad(unit_vector(d, i)));
  killing_ = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> nz;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (sgn(ads[i](r, c)) != 0) nz.emplace_back(r, c, ads[i](r, c));
    for (std::size_t j = i; j < d; ++j) {
      Scalar t = 0;
      for (const auto& [r, c, v] : nz) {
        const Scalar& w = ads[j](c, r);
        if (sgn(w) != 0) t += v * w;
      }
      killing_(i, j) = t;
      killing_(j, i) = t;
    }
  }

  inner_ = -(killing_ * theta_);
  if (!is_positive_definite(inner_))
    throw std::logic_error("LieModel: −ℬ(·,θ·) is not symmetric positive definite");

  const Matrix id = Matrix::identity(d);
  pi_k_ = (id + theta_).scaled(Scalar(1, 2));
  pi_p_ = (id - theta_).scaled(Scalar(1, 2));
  k_ = Subspace::row_space(kernel(theta_ - id));
  p_ = Subspace::row_space(kernel(theta_ + id));

  std::vector<Vector> a_vectors;
  for (const auto& h : in.a_basis) a_vectors.push_back(coordinates(h));
  a_ = Subspace::span(d, a_vectors);
  if (a_.dim() != in.a_basis.size()) throw std::invalid_argument("LieModel: 𝔞 basis is dependent");
  if (!p_.contains(a_)) throw std::invalid_argument("LieModel: 𝔞 is not inside 𝔭");
  if (!bracket_span(*this, a_, a_).is_zero()) throw std::invalid_argument("LieModel: 𝔞 is not abelian");

  regular_ = coordinates(in.regular);
  if (!a_.contains(regular_)) throw std::invalid_argument("LieModel: regular element outside 𝔞");
  std::vector<Subspace> positive;
  for (const auto& [lambda, space] : rational_eigenspaces(ad(regular_))) {
    if (sgn(lambda) > 0) positive.push_back(space);
  }
  n_ = subspace_sum(positive, d);

  dim_k_ = k_.dim();
  dim_a_ = a_.dim();
  std::vector<Vector> cols = k_.vectors();
  for (auto& v : a_.vectors()) cols.push_back(std::move(v));
  for (auto& v : n_.vectors()) cols.push_back(std::move(v));
  if (cols.size() != d) throw std::logic_error("LieModel: Iwasawa dimensions do not add up");
  auto inv = inverse(Matrix::from_columns(cols, d));
  if (!inv) throw std::logic_error("LieModel: 𝔨 + 𝔞 + 𝔫 is not direct");
  iwasawa_inverse_ = *inv;

  if (complex_structure_) {
    for (const auto& b : basis_) {
      if (!commutator(*complex_structure_, b).is_zero())
        throw std::invalid_argument("LieModel: basis does not commute with the complex structure");
    }
  }
  if (factors_.empty()) {
    factors_.push_back(FactorInfo{FactorKind::sl, 0, name_, 0, d, 0, matrix_size_});
  }
}

Vector LieModel::coordinates(const Matrix& x) const {
  if (x.rows() != matrix_size_ || x.cols() != matrix_size_)
    throw DimensionError("coordinates: matrix of wrong size");
  const std::size_t d = dim();
  Vector c(d, Scalar(0));
  for (std::size_t t = 0; t < d; ++t) {
    const std::size_t pos = coord_positions_[t];
    const Scalar& v = x(pos / matrix_size_, pos % matrix_size_);
    if (sgn(v) == 0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(coord_inverse_(t, i)) != 0) c[i] += v * coord_inverse_(t, i);
    }
  }
  if (!(matrix(c) == x)) throw std::domain_error("coordinates: matrix escapes span(basis)");
  return c;
}

Matrix LieModel::matrix(const Vector& x) const {
  if (x.size() != dim()) throw DimensionError("matrix: coordinate length mismatch");
  Matrix m(matrix_size_, matrix_size_);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    const Matrix& b = basis_[i];
    for (std::size_t r = 0; r < matrix_size_; ++r)
      for (std::size_t c = 0; c < matrix_size_; ++c)
        if (sgn(b(r, c)) != 0) m(r, c) += x[i] * b(r, c);
  }
  return m;
}

Vector LieModel::bracket(const Vector& x, const Vector& y) const {
  const std::size_t d = dim();
  if (x.size() != d || y.size() != d) throw DimensionError("bracket: coordinate length mismatch");
  Vector out(d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& entries = sc_[i * d + j];
      if (entries.empty()) continue;
      const Scalar w = x[i] * y[j];
      for (const auto& [k, c] : entries) out[k] += w * c;
    }
  }
  return out;
}

Matrix LieModel::ad(const Vector& x) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Vector col = bracket(x, unit_vector(d, j));
    for (std::size_t k = 0; k < d; ++k) m(k, j) = col[k];
  }
  return m;
}

LieModel::IwasawaParts LieModel::iwasawa_project(const Vector& x) const {
  const std::size_t d = dim();
  const Vector c = iwasawa_inverse_.apply(x);
  IwasawaParts parts{Vector(d, Scalar(0)), Vector(d, Scalar(0)), Vector(d, Scalar(0))};
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(c[i]) == 0) continue;
    if (i < dim_k_) {
      axpy(parts.k, c[i], k_.basis_vector(i));
    } else if (i < dim_k_ + dim_a_) {
      axpy(parts.a, c[i], a_.basis_vector(i - dim_k_));
    } else {
      axpy(parts.n, c[i], n_.basis_vector(i - dim_k_ - dim_a_));
    }
  }
  return parts;
}

Subspace LieModel::factor_block(std::size_t i) const {
  const FactorInfo& f = factors_.at(i);
  std::vector<Vector> vs;
  for (std::size_t t = 0; t < f.dim; ++t) vs.push_back(unit_vector(dim(), f.coord_offset + t));
  return Subspace::span(dim(), vs);
}

std::optional<std::size_t> LieModel::factor_of(const Vector& x) const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (i >= factors_[f].coord_offset && i < factors_[f].coord_offset + factors_[f].dim) {
        if (found && *found != f) return std::nullopt;
        found = f;
      }
    }
  }
  return found;
}

// ---------------------------------------------------------------- builders

ModelPtr build_sl(std::size_t size) {
  if (size < 2) throw std::invalid_argument("build_sl: need n+1 >= 2");
  LieModel::Input in;
  in.name = factor_name(FactorKind::sl, size);
  in.matrix_size = size;
  for (std::size_t i = 0; i + 1 < size; ++i) {
    Matrix h = matrix_unit(size, i, i) - matrix_unit(size, i + 1, i + 1);
    in.basis.push_back(h);
    in.a_basis.push_back(h);
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) in.basis.push_back(matrix_unit(size, i, j));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) in.basis.push_back(matrix_unit(size, j, i));
  in.regular = Matrix(size, size);
  const Scalar mean = make_scalar(static_cast<long>(size - 1), 2);
  for (std::size_t i = 0; i < size; ++i) in.regular(i, i) = Scalar(static_cast<long>(size - 1 - i)) - mean;
  in.factors.push_back(FactorInfo{FactorKind::sl, size, in.name, 0, in.basis.size(), 0, size});
  return std::make_shared<const LieModel>(std::move(in));
}

ModelPtr build_so1n(std::size_t n) {
  if (n < 2) throw std::invalid_argument("build_so1n: need n >= 2");
  const std::size_t size = n + 1;
  LieModel::Input in;
  in.name = factor_name(FactorKind::rh, n);
  in.matrix_size = size;
  for (std::size_t i = 1; i <= n; ++i) in.basis.push_back(matrix_unit(size, 0, i) + matrix_unit(size, i, 0));
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t l = k + 1; l <= n; ++l) in.basis.push_back(matrix_unit(size, k, l) - matrix_unit(size, l, k));
  in.a_basis.push_back(in.basis[0]);
  in.regular = in.basis[0];
  in.factors.push_back(FactorInfo{FactorKind::rh, n, in.name, 0, in.basis.size(), 0, size});
  return std::make_shared<const LieModel>(std::move(in));
}

namespace {

/// Z = A + iB ↦ [[A, −B], [B, A]].
Matrix realify(const Matrix& re, const Matrix& im) {
  const std::size_t s = re.rows();
  Matrix out(2 * s, 2 * s);
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < s; ++c) {
      out(r, c) = re(r, c);
      out(s + r, s + c) = re(r, c);
      out(r, s + c) = -im(r, c);
      out(s + r, c) = im(r, c);
    }
  }
  return out;
}

}  // namespace

ModelPtr build_su1n(std::size_t n) {
  if (n < 2) throw std::invalid_argument("build_su1n: need n >= 2");
  const std::size_t s = n + 1;
  const Matrix zero(s, s);
  LieModel::Input in;
  in.name = factor_name(FactorKind::ch, n);
  in.matrix_size = 2 * s;
  for (std::size_t i = 1; i <= n; ++i) {
    in.basis.push_back(realify(matrix_unit(s, 0, i) + matrix_unit(s, i, 0), zero));
    in.basis.push_back(realify(zero, matrix_unit(s, 0, i) - matrix_unit(s, i, 0)));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = k + 1; l <= n; ++l) {
      in.basis.push_back(realify(matrix_unit(s, k, l) - matrix_unit(s, l, k), zero));
      in.basis.push_back(realify(zero, matrix_unit(s, k, l) + matrix_unit(s, l, k)));
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    in.basis.push_back(realify(zero, matrix_unit(s, k, k) - matrix_unit(s, k + 1, k + 1)));
  }
  in.a_basis.push_back(in.basis[0]);
  in.regular = in.basis[0];
  in.complex_structure = realify(zero, Matrix::identity(s));
  in.factors.push_back(FactorInfo{FactorKind::ch, n, in.name, 0, in.basis.size(), 0, 2 * s});
  return std::make_shared<const LieModel>(std::move(in));
}

ModelPtr build_factor(FactorKind kind, std::size_t param) {
  switch (kind) {
    case FactorKind::sl:
      return build_sl(param);
    case FactorKind::rh:
      return build_so1n(param);
    case FactorKind::ch:
      return build_su1n(param);
  }
  throw std::invalid_argument("build_factor: unknown kind");
}

ProductModel direct_sum(const std::vector<ModelPtr>& models) {
  if (models.empty()) throw std::invalid_argument("direct_sum: empty factor list");
  ProductModel pm;
  pm.factors = models;
  if (models.size() == 1) {
    pm.block_offsets = {0};
    pm.model = models.front();
    return pm;
  }
  std::size_t size = 0;
  for (const auto& m : models) size += m->matrix_size();
  LieModel::Input in;
  in.matrix_size = size;
  in.regular = Matrix(size, size);
  std::size_t coord = 0;
  std::size_t offset = 0;
  for (std::size_t f = 0; f < models.size(); ++f) {
    const LieModel& m = *models[f];
    if (f > 0) in.name += "*";
    in.name += m.name();
    pm.block_offsets.push_back(coord);
    for (std::size_t i = 0; i < m.dim(); ++i) in.basis.push_back(embed_block(m.basis_matrix(i), size, offset));
    for (std::size_t i = 0; i < m.a().dim(); ++i)
      in.a_basis.push_back(embed_block(m.matrix(m.a().basis_vector(i)), size, offset));
    in.regular = in.regular + embed_block(m.matrix(m.regular_element()), size, offset);
    for (const auto& fi : m.factors()) {
      FactorInfo shifted = fi;
      shifted.coord_offset += coord;
      shifted.matrix_offset += offset;
      in.factors.push_back(shifted);
    }
    coord += m.dim();
    offset += m.matrix_size();
  }
  pm.model = std::make_shared<const LieModel>(std::move(in));
  return pm;
}

Vector bracket(const LieModel& model, const Vector& x, const Vector& y) { return model.bracket(x, y); }

Scalar killing_form(const LieModel& model, const Vector& x, const Vector& y) {
  return model.killing_form(x, y);
}

LieModel::IwasawaParts iwasawa_project(const LieModel& model, const Vector& x) {
  return model.iwasawa_project(x);
}

Subspace bracket_span(const LieModel& model, const Subspace& u, const Subspace& v) {
  std::vector<Vector> out;
  const auto us = u.vectors();
  const auto vs = v.vectors();
  for (const auto& x : us)
    for (const auto& y : vs) out.push_back(model.bracket(x, y));
  return Subspace::span(model.dim(), out);
}

bool is_subalgebra(const LieModel& model, const Subspace& h) {
  const auto hs = h.vectors();
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j)
      if (!h.contains(model.bracket(hs[i], hs[j]))) return false;
  return true;
}

Subspace normalizer(const LieModel& model, const Subspace& candidates, const Subspace& target) {
  const auto ts = target.vectors();
  return solve_inclusion_constraint(
      candidates,
      [&](const Vector& x) {
        std::vector<Vector> out;
        out.reserve(ts.size());
        for (const auto& t : ts) out.push_back(model.bracket(x, t));
        return out;
      },
      target);
}

Subspace theta_image(const LieModel& model, const Subspace& u) { return image(model.theta(), u); }

bool is_theta_invariant(const LieModel& model, const Subspace& u) { return theta_image(model, u) == u; }

}  // namespace cohom

#include "cgt/matrix_group.hpp"

#include "cgt/errors.hpp"

namespace cgt {

FqMatrix FqMatrix::identity(std::size_t dim) {
  FqMatrix m{dim, std::vector<FqElem>(dim * dim, 0)};
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

FqMatrix mat_mul(const FiniteField& F, const FqMatrix& x, const FqMatrix& y) {
  const std::size_t n = x.dim;
  FqMatrix r{n, std::vector<FqElem>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FqElem s = 0;
      for (std::size_t k = 0; k < n; ++k) s = F.add(s, F.mul(x(i, k), y(k, j)));
      r(i, j) = s;
    }
  return r;
}

FqMatrix transpose(const FqMatrix& m) {
  FqMatrix t = m;
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) t(i, j) = m(j, i);
  return t;
}

FqElem determinant(const FiniteField& F, FqMatrix m) {
  const std::size_t n = m.dim;
  FqElem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      det = F.neg(det);
    }
    det = F.mul(det, m(c, c));
    const FqElem inv = F.inv(m(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      const FqElem f = F.mul(m(r, c), inv);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) m(r, j) = F.sub(m(r, j), F.mul(f, m(c, j)));
    }
  }
  return det;
}

MatrixAction parse_action(const std::string& s) {
  if (s == "vectors") return MatrixAction::Vectors;
  if (s == "projective") return MatrixAction::Projective;
  throw InputError("unknown matrix action '" + s + "'");
}

MatrixPermAction::MatrixPermAction(std::uint32_t q, std::size_t dim, MatrixAction action)
    : F_(q), dim_(dim), action_(action) {
  if (dim == 0) throw InputError("matrix dimension must be positive");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total *= q;
    if (total > (1u << 24)) throw SizeGuardError("vector space too large for a permutation action");
  }
  index_.assign(total, -1);
  // code() is big-endian in the coordinates, so increasing codes are
  // lexicographic order.
  for (std::uint64_t c = 1; c < total; ++c) {
    std::vector<FqElem> v(dim);
    std::uint64_t t = c;
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = static_cast<FqElem>(t % q);
      t /= q;
    }
    if (action == MatrixAction::Projective) {
      std::size_t f = 0;
      while (v[f] == 0) ++f;
      if (v[f] != 1) continue;
    }
    index_[c] = static_cast<std::int64_t>(points_.size());
    points_.push_back(std::move(v));
  }
}

std::uint64_t MatrixPermAction::code(const std::vector<FqElem>& v) const {
  std::uint64_t c = 0;
  for (FqElem x : v) c = c * F_.order() + x;
  return c;
}

std::size_t MatrixPermAction::index_of(const std::vector<FqElem>& v) const {
  if (v.size() != dim_) throw InputError("vector has wrong length");
  std::vector<FqElem> w = v;
  if (action_ == MatrixAction::Projective) {
    std::size_t f = 0;
    while (f < dim_ && w[f] == 0) ++f;
    if (f == dim_) throw InputError("zero vector has no projective point");
    const FqElem inv = F_.inv(w[f]);
    for (FqElem& x : w) x = F_.mul(x, inv);
  }
  const std::int64_t idx = index_[code(w)];
  if (idx < 0) throw InputError("zero vector is not a point");
  return static_cast<std::size_t>(idx);
}

Perm MatrixPermAction::to_perm(const FqMatrix& m) const {
  if (m.dim != dim_) throw InputError("matrix has wrong dimension");
  for (FqElem x : m.a)
    if (x >= F_.order()) throw InputError("matrix entry outside the field");
  if (determinant(F_, m) == 0) throw InputError("singular matrix generator");
  std::vector<Point> img(points_.size());
  std::vector<FqElem> w(dim_);
  for (std::size_t p = 0; p < points_.size(); ++p) {
    const auto& v = points_[p];
    for (std::size_t i = 0; i < dim_; ++i) {
      FqElem s = 0;
      for (std::size_t j = 0; j < dim_; ++j) s = F_.add(s, F_.mul(m(i, j), v[j]));
      w[i] = s;
    }
    img[p] = static_cast<Point>(index_of(w));
  }
  return Perm(std::move(img));
}

FqMatrix MatrixPermAction::to_matrix(const Perm& p) const {
  if (action_ != MatrixAction::Vectors)
    throw InputError("matrix recovery needs the vector action");
  FqMatrix m{dim_, std::vector<FqElem>(dim_ * dim_, 0)};
  for (std::size_t j = 0; j < dim_; ++j) {
    std::vector<FqElem> e(dim_, 0);
    e[j] = 1;
    const auto& col = points_[p[static_cast<Point>(index_of(e))]];
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
  }
  return m;
}

PermGroup matrix_group_to_perm(std::uint32_t q, std::size_t dim,
                               const std::vector<FqMatrix>& generators, MatrixAction action,
                               std::uint64_t max_order) {
  MatrixPermAction act(q, dim, action);
  std::vector<Perm> perms;
  for (const FqMatrix& m : generators) perms.push_back(act.to_perm(m));
  return PermGroup(act.num_points(), std::move(perms), max_order);
}

}  // namespace cgt

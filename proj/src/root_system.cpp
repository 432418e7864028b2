#include "cgt/root_system.hpp"

#include <gmpxx.h>

#include <algorithm>

#include "cgt/errors.hpp"

namespace cgt {

RootKind parse_root_kind(const std::string& s) {
  if (s == "A") return RootKind::A;
  if (s == "B") return RootKind::B;
  if (s == "C") return RootKind::C;
  if (s == "D") return RootKind::D;
  throw InputError("unsupported root system kind '" + s + "'");
}

char kind_letter(RootKind k) { return "ABCD"[static_cast<int>(k)]; }

int dot(const IVec& a, const IVec& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

SignedPerm SignedPerm::identity(std::size_t n) {
  SignedPerm w;
  w.sign.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) w.perm.push_back(static_cast<int>(i));
  return w;
}

IVec SignedPerm::apply(const IVec& v) const {
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] = sign[i] * v[i];
  return out;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm w = *this;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    w.perm[perm[i]] = static_cast<int>(i);
    w.sign[perm[i]] = sign[i];
  }
  return w;
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
  SignedPerm w = b;
  for (std::size_t i = 0; i < b.perm.size(); ++i) {
    w.perm[i] = a.perm[b.perm[i]];
    w.sign[i] = a.sign[b.perm[i]] * b.sign[i];
  }
  return w;
}

RootSystem::RootSystem(RootKind kind, int rank) : kind_(kind), rank_(rank) {
  const int n = rank;
  switch (kind) {
    case RootKind::A:
      if (n < 1) throw InputError("type A needs rank >= 1");
      break;
    case RootKind::B:
    case RootKind::C:
      if (n < 2) throw InputError("types B and C need rank >= 2");
      break;
    case RootKind::D:
      if (n < 4) throw InputError("type D needs rank >= 4");
      break;
  }
  if (n > 8) throw InputError("rank too large");
  ambient_ = kind == RootKind::A ? n + 1 : n;
  const int d = static_cast<int>(ambient_);
  auto unit = [d](int i, int s) {
    IVec v(d, 0);
    v[i] = s;
    return v;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      IVec v = unit(i, 1);
      v[j] = -1;
      roots_.push_back(v);
      if (kind != RootKind::A && i < j)
        for (int s : {1, -1}) {
          IVec w(d, 0);
          w[i] = s;
          w[j] = s;
          roots_.push_back(w);
        }
    }
  if (kind == RootKind::B || kind == RootKind::C)
    for (int i = 0; i < d; ++i)
      for (int s : {1, -1}) roots_.push_back(unit(i, kind == RootKind::B ? s : 2 * s));
  std::sort(roots_.begin(), roots_.end(), [](const IVec& a, const IVec& b) { return a > b; });
  for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = static_cast<int>(i);

  for (int i = 0; i + 1 < d; ++i) {
    IVec v = unit(i, 1);
    v[i + 1] = -1;
    simple_.push_back(v);
  }
  if (kind == RootKind::B) simple_.push_back(unit(n - 1, 1));
  if (kind == RootKind::C) simple_.push_back(unit(n - 1, 2));
  if (kind == RootKind::D) {
    IVec v(d, 0);
    v[n - 2] = v[n - 1] = 1;
    simple_.push_back(v);
  }
  if (kind == RootKind::C) {
    for (int i = 0; i < n; ++i) basis_.push_back(unit(i, 1));
  } else {
    for (const IVec& a : simple_) basis_.push_back(coroot(a));
  }

  // Left inverse (B^T B)^-1 B^T of the basis matrix B, columns = basis_.
  const std::size_t nb = basis_.size();
  std::vector<std::vector<mpq_class>> g(nb, std::vector<mpq_class>(2 * nb));
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) g[i][j] = dot(basis_[i], basis_[j]);
    g[i][nb + i] = 1;
  }
  for (std::size_t c = 0; c < nb; ++c) {
    std::size_t s = c;
    while (g[s][c] == 0) ++s;
    std::swap(g[c], g[s]);
    const mpq_class inv = 1 / g[c][c];
    for (auto& x : g[c]) x *= inv;
    for (std::size_t t = 0; t < nb; ++t) {
      if (t == c || g[t][c] == 0) continue;
      const mpq_class f = g[t][c];
      for (std::size_t j = 0; j < 2 * nb; ++j) g[t][j] -= f * g[c][j];
    }
  }
  std::vector<std::vector<mpq_class>> dual(nb, std::vector<mpq_class>(ambient_));
  mpz_class den = 1;
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < ambient_; ++j) {
      for (std::size_t k = 0; k < nb; ++k) dual[i][j] += g[i][nb + k] * basis_[k][j];
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), dual[i][j].get_den_mpz_t());
    }
  dual_den_ = den.get_si();
  dual_num_.assign(nb, std::vector<std::int64_t>(ambient_));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < ambient_; ++j) {
      const mpq_class v = dual[i][j] * den;
      dual_num_[i][j] = v.get_num().get_si();
    }
}

std::string RootSystem::name() const { return kind_letter(kind_) + std::to_string(rank_); }

std::vector<IVec> RootSystem::positive_roots() const {
  std::vector<IVec> out;
  for (const IVec& r : roots_)
    if (is_positive(r)) out.push_back(r);
  return out;
}

int RootSystem::root_index(const IVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_positive(const IVec& v) {
  for (int x : v)
    if (x != 0) return x > 0;
  return false;
}

IVec RootSystem::coroot(const IVec& alpha) const {
  const int len = dot(alpha, alpha);
  IVec c(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if ((2 * alpha[i]) % len != 0) throw ConsistencyError("coroot is not integral");
    c[i] = 2 * alpha[i] / len;
  }
  return c;
}

std::vector<std::int64_t> RootSystem::lattice_coords(const IVec& y) const {
  if (y.size() != ambient_) throw InputError("vector has wrong length");
  std::vector<std::int64_t> x(basis_.size(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < ambient_; ++j) s += dual_num_[i][j] * y[j];
    if (s % dual_den_ != 0) throw InputError("vector is outside the coroot lattice");
    x[i] = s / dual_den_;
  }
  IVec back(ambient_, 0);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) back[j] += static_cast<int>(x[i]) * basis_[i][j];
  if (back != y) throw InputError("vector is outside the coroot span");
  return x;
}

std::vector<std::vector<int>> RootSystem::cartan_matrix() const {
  std::vector<std::vector<int>> c(simple_.size(), std::vector<int>(simple_.size()));
  for (std::size_t i = 0; i < simple_.size(); ++i)
    for (std::size_t j = 0; j < simple_.size(); ++j) c[i][j] = dot(coroot(simple_[i]), simple_[j]);
  return c;
}

SignedPerm RootSystem::reflection(const IVec& alpha) const {
  const int len = dot(alpha, alpha);
  SignedPerm w = SignedPerm::identity(ambient_);
  for (std::size_t i = 0; i < ambient_; ++i) {
    IVec img(ambient_, 0);
    img[i] = 1;
    const int f = 2 * alpha[i];
    for (std::size_t j = 0; j < ambient_; ++j) img[j] -= f * alpha[j] / len;
    int found = -1;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (img[j] != 0) {
        if (found >= 0 || (img[j] != 1 && img[j] != -1))
          throw ConsistencyError("reflection is not a signed permutation");
        found = static_cast<int>(j);
      }
    w.perm[i] = found;
    w.sign[i] = img[found];
  }
  return w;
}

int RootSystem::length(const SignedPerm& w) const {
  int l = 0;
  for (const IVec& r : roots_)
    if (is_positive(r) && !is_positive(w.apply(r))) ++l;
  return l;
}

}  // namespace cgt

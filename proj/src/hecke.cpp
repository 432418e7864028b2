#include "cgt/hecke.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cgt/errors.hpp"

namespace cgt {

std::string InstanceCharacter::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

InstanceCharacter instance_character(const LieInstance& inst, const std::string& kind) {
  const std::size_t n = inst.family() == Family::SL2 ? 1 : 2;
  InstanceCharacter l{inst.q(), std::vector<std::int64_t>(n, 0)};
  if (kind == "trivial") return l;
  if (kind == "quadratic") {
    for (auto& x : l.a) x = (inst.q() - 1) / 2;
    return l;
  }
  throw InputError("lambda must be 'trivial' or 'quadratic'");
}

std::int64_t lambda_exponent(const LieInstance& inst, const InstanceCharacter& l, const Perm& b) {
  const auto t = inst.torus_coords(b);
  if (t.size() != l.a.size()) throw InputError("character does not match the torus rank");
  const std::int64_t m = static_cast<std::int64_t>(inst.q()) - 1;
  std::int64_t e = 0;
  for (std::size_t i = 0; i < t.size(); ++i) e += l.a[i] * inst.field().log(t[i]);
  return ((e % m) + m) % m;
}

TorusCharacter weyl_character(const LieInstance& inst, const InstanceCharacter& l) {
  if (inst.family() == Family::GL2) return make_character(inst.q(), {l.a[0] - l.a[1]});
  return make_character(inst.q(), l.a);
}

ClassFunction borel_character(const LieInstance& inst, const ConjClasses& b_classes,
                              const InstanceCharacter& l) {
  ClassFunction f;
  for (const Perm& r : b_classes.reps())
    f.push_back(Cyclotomic::root_of_unity(inst.q() - 1, lambda_exponent(inst, l, r)));
  return f;
}

std::vector<std::size_t> principal_series_rows(const LieInstance& inst, const CharacterTable& t) {
  const ConjClasses bc(inst.B());
  const std::int64_t m = static_cast<std::int64_t>(inst.q()) - 1;
  const std::size_t n = inst.family() == Family::SL2 ? 1 : 2;
  std::set<std::size_t> rows;
  std::vector<std::int64_t> a(n, 0);
  while (true) {
    const InstanceCharacter l{inst.q(), a};
    for (auto [row, mult] : irr_constituents(induce(bc, borel_character(inst, bc, l), t.classes()), t))
      rows.insert(row);
    std::size_t k = 0;
    while (k < n && ++a[k] == m) a[k++] = 0;
    if (k == n) break;
  }
  return {rows.begin(), rows.end()};
}

namespace {

// Z[zeta_n] in the power basis modulo Phi_n, small integer coefficients.
struct ZetaRing {
  std::uint32_t n, phi;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> red;  // zeta^k, sparse

  explicit ZetaRing(std::uint32_t n_) : n(n_), phi(static_cast<std::uint32_t>(euler_phi(n_))) {
    for (std::uint32_t k = 0; k < n; ++k) {
      std::vector<std::pair<std::uint32_t, std::int64_t>> row;
      const Cyclotomic z = Cyclotomic::root_of_unity(n, k).embed(n);
      for (const auto& [e, c] : z.coeffs())
        row.emplace_back(e, c.get_num().get_si());
      red.push_back(std::move(row));
    }
  }
  void add_root(std::int64_t* dst, std::int64_t k, std::int64_t mult) const {
    k %= n;
    if (k < 0) k += n;
    for (auto [e, c] : red[k]) dst[e] += mult * c;
  }
  void mul_root_acc(std::int64_t* dst, const std::int64_t* a, std::int64_t k) const {
    for (std::uint32_t e = 0; e < phi; ++e)
      if (a[e]) add_root(dst, e + k, a[e]);
  }
  void mul_acc(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b) const {
    for (std::uint32_t i = 0; i < phi; ++i)
      if (a[i])
        for (std::uint32_t j = 0; j < phi; ++j)
          if (b[j]) add_root(dst, i + j, a[i] * b[j]);
  }
  bool equal(const std::int64_t* a, const std::int64_t* b) const {
    return std::equal(a, a + phi, b);
  }
  bool is_zero(const std::int64_t* a) const {
    return std::all_of(a, a + phi, [](std::int64_t x) { return x == 0; });
  }
  // k with a = zeta^k, or -1
  std::int64_t root_exponent(const std::int64_t* a) const {
    std::vector<std::int64_t> z(phi);
    for (std::uint32_t k = 0; k < n; ++k) {
      std::fill(z.begin(), z.end(), 0);
      add_root(z.data(), k, 1);
      if (equal(z.data(), a)) return k;
    }
    return -1;
  }
  Cyclotomic to_cyc(const std::int64_t* a) const {
    std::map<std::int64_t, Rational> t;
    for (std::uint32_t e = 0; e < phi; ++e)
      if (a[e]) t[e] = Rational(static_cast<long>(a[e]));
    return Cyclotomic::from_terms(n, t);
  }
  std::vector<std::int64_t> from_cyc(const Cyclotomic& x) const {
    std::vector<std::int64_t> out(phi, 0);
    const Cyclotomic y = x.embed(n);
    for (const auto& [e, c] : y.coeffs()) {
      if (c.get_den() != 1) throw ConsistencyError("non-integral structure constant");
      out[e] = c.get_num().get_si();
    }
    return out;
  }
};

struct ZMat {
  std::size_t d = 0, phi = 0;
  std::vector<std::int64_t> a;
  std::int64_t* at(std::size_t i, std::size_t j) { return &a[(i * d + j) * phi]; }
  const std::int64_t* at(std::size_t i, std::size_t j) const { return &a[(i * d + j) * phi]; }
};

// (rho v)_i = zeta^k_i v_pi(i)
struct Mono {
  std::vector<std::uint32_t> pi;
  std::vector<std::int64_t> k;
};

Mono mono_of(const LieInstance& inst, const InstanceCharacter& l, std::int64_t scale,
             const Perm& g) {
  Mono m;
  for (std::size_t i = 0; i < inst.num_cosets(); ++i) {
    auto [j, b] = inst.coset_action(i, g);
    m.pi.push_back(static_cast<std::uint32_t>(j));
    m.k.push_back(lambda_exponent(inst, l, b) * scale);
  }
  return m;
}

Cyclotomic cyc_inverse(const Cyclotomic& x) {
  if (x.is_zero()) throw ConsistencyError("inverse of zero");
  const std::uint32_t n = x.conductor();
  Cyclotomic y(1);
  for (std::uint32_t r = 2; r < n; ++r)
    if (gcd_u64(r, n) == 1) y *= x.galois(r);
  const Cyclotomic norm = x * y;
  return y * Cyclotomic(Rational(1) / norm.rational_value());
}

// Solves A t = v over cyclotomics; A square and invertible.
std::vector<Cyclotomic> solve(std::vector<std::vector<Cyclotomic>> A, std::vector<Cyclotomic> v) {
  const std::size_t n = A.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A[p][c].is_zero()) ++p;
    if (p == n) throw ConsistencyError("T basis is not a basis");
    std::swap(A[p], A[c]);
    std::swap(v[p], v[c]);
    const Cyclotomic inv = cyc_inverse(A[c][c]);
    for (std::size_t j = c; j < n; ++j) A[c][j] *= inv;
    v[c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c].is_zero()) continue;
      const Cyclotomic f = A[r][c];
      for (std::size_t j = c; j < n; ++j) A[r][j] -= f * A[c][j];
      v[r] -= f * v[c];
    }
  }
  return v;
}

// Union-find on index pairs with a zeta-exponent potential: val(x) = zeta^pot(x) val(root).
struct PhaseUnionFind {
  std::vector<std::uint32_t> parent;
  std::vector<std::int64_t> pot;
  std::vector<char> dead;
  std::int64_t n;
  PhaseUnionFind(std::size_t size, std::int64_t n_) : parent(size), pot(size, 0), dead(size, 0), n(n_) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    std::vector<std::uint32_t> path;
    std::uint32_t r = x;
    while (parent[r] != r) {
      path.push_back(r);
      r = parent[r];
    }
    for (std::size_t k = path.size(); k-- > 0;) {
      const std::uint32_t v = path[k];
      if (parent[v] != r) pot[v] = (pot[v] + pot[parent[v]]) % n;
      parent[v] = r;
    }
    return r;
  }
  // val(b) = zeta^d val(a)
  void unite(std::uint32_t a, std::uint32_t b, std::int64_t d) {
    const std::uint32_t ra = find(a), rb = find(b);
    const std::int64_t pa = pot[a], pb = pot[b];  // roots carry 0
    if (ra == rb) {
      if ((((pb - pa - d) % n) + n) % n != 0) dead[ra] = 1;
      return;
    }
    // val(rb) = zeta^(pa + d - pb) val(ra)
    parent[rb] = ra;
    pot[rb] = (((pa + d - pb) % n) + n) % n;
    dead[ra] = dead[ra] || dead[rb];
  }
};

Rational as_rational(const Cyclotomic& x, bool& ok) {
  if (!x.is_rational()) {
    ok = false;
    return 0;
  }
  return x.rational_value();
}

std::uint32_t prime_exponent(std::uint64_t x, std::uint32_t r) {
  std::uint32_t e = 0;
  while (x > 1 && x % r == 0) {
    x /= r;
    ++e;
  }
  if (x != 1) throw ConsistencyError("index is not a power of the characteristic");
  return e;
}

}  // namespace

HeckeModule::HeckeModule(const LieInstance& inst, InstanceCharacter lambda,
                         const CharacterTable& table)
    : inst_(inst), lambda_(std::move(lambda)) {
  const WeylGroup& W = inst.weyl();
  const RootSystem& rs = inst.roots();
  const std::uint32_t q = inst.q();
  const auto N = static_cast<std::uint32_t>(lcm_u64(q - 1, 4));
  const std::int64_t scale = N / (q - 1);
  const ZetaRing Z(N);
  const std::size_t phi = Z.phi;
  const std::size_t d = dim();
  const FqElem omega = inst.field().primitive();

  rel_ = relative_weyl(W, weyl_character(inst, lambda_));

  for (std::size_t w = 0; w < W.size(); ++w) {
    const Perm ni = inst.wdot(w).inverse();
    bool fixes = true;
    for (const Perm& t : inst.T().generators())
      fixes &= lambda_exponent(inst, lambda_, ni * t * inst.wdot(w)) == lambda_exponent(inst, lambda_, t);
    if (fixes) wl_.push_back(w);
  }
  {
    auto m5 = rel_.w_lambda;
    std::sort(m5.begin(), m5.end());
    wl_matches_ = m5 == wl_;
  }
  std::vector<IVec> pos = rs.positive_roots();
  std::vector<bool> in_phi;
  phi_matches_ = true;
  for (const IVec& a : pos) {
    const bool k = lambda_exponent(inst, lambda_, inst.h_alpha(a, omega)) == 0;
    in_phi.push_back(k);
    const bool m5 = std::count(rel_.phi_lambda.begin(), rel_.phi_lambda.end(), rs.root_index(a)) > 0;
    phi_matches_ &= k == m5;
  }
  if (!wl_matches_) throw ConsistencyError("W(lambda) from the group differs from the torus computation");
  const std::size_t nw = wl_.size();
  auto wpos = [&](std::size_t w) -> std::ptrdiff_t {
    auto it = std::find(wl_.begin(), wl_.end(), w);
    return it == wl_.end() ? -1 : it - wl_.begin();
  };

  // rho~(n_w): a fourth root of unity squaring to lambda(n_w^2) on involutions
  std::vector<std::int64_t> rho(nw, 0);
  for (std::size_t x = 0; x < nw; ++x) {
    const std::size_t w = wl_[x];
    if (W.mul(w, w) != 0) continue;
    const Perm sq = inst.wdot(w) * inst.wdot(w);
    if (lambda_exponent(inst, lambda_, sq) != 0) rho[x] = N / 4;
  }

  // Intertwiners (B_w f)(x) = rho~ Ind(w) / |U| sum_u f(n_w^-1 u x)
  const ElementList& uel = inst.U().elements();
  std::vector<ZMat> Bm(nw);
  std::vector<std::uint64_t> ind(nw);
  for (std::size_t x = 0; x < nw; ++x) {
    const std::size_t w = wl_[x];
    ind[x] = inst.ind_count(w);
    const std::uint64_t div = inst.U().order() / ind[x];
    const Perm ni = inst.wdot(w).inverse();
    std::vector<std::int64_t> cnt(d * d * N, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (const Perm& u : uel.elements) {
        const Perm y = ni * u * inst.coset_rep(i);
        const std::size_t j = inst.coset_of(y);
        const Perm b = y * inst.coset_rep(j).inverse();
        ++cnt[(i * d + j) * N + lambda_exponent(inst, lambda_, b) * scale];
      }
    ZMat& M = Bm[x];
    M.d = d;
    M.phi = phi;
    M.a.assign(d * d * phi, 0);
    for (std::size_t ij = 0; ij < d * d; ++ij)
      for (std::uint32_t k = 0; k < N; ++k) {
        const std::int64_t c = cnt[ij * N + k];
        if (!c) continue;
        if (c % static_cast<std::int64_t>(div)) throw ConsistencyError("intertwiner is not integral");
        Z.add_root(&M.a[ij * phi], k + rho[x], c / static_cast<std::int64_t>(div));
      }
  }

  // Commutation with the generators of G and the commutant dimension.
  std::vector<Mono> gm;
  for (const Perm& g : inst.G().generators()) gm.push_back(mono_of(inst, lambda_, scale, g));
  commute_ = true;
  std::vector<std::int64_t> lb(phi), rb(phi);
  for (const Mono& m : gm) {
    std::vector<std::uint32_t> pinv(d);
    for (std::size_t i = 0; i < d; ++i) pinv[m.pi[i]] = static_cast<std::uint32_t>(i);
    for (const ZMat& M : Bm)
      for (std::size_t i = 0; i < d && commute_; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          std::fill(lb.begin(), lb.end(), 0);
          std::fill(rb.begin(), rb.end(), 0);
          Z.mul_root_acc(lb.data(), M.at(m.pi[i], j), m.k[i]);
          Z.mul_root_acc(rb.data(), M.at(i, pinv[j]), m.k[pinv[j]]);
          if (!Z.equal(lb.data(), rb.data())) {
            commute_ = false;
            break;
          }
        }
  }
  {
    PhaseUnionFind uf(d * d, N);
    for (const Mono& m : gm)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          uf.unite(static_cast<std::uint32_t>(i * d + j),
                   static_cast<std::uint32_t>(m.pi[i] * d + m.pi[j]), m.k[j] - m.k[i]);
    for (std::uint32_t x = 0; x < d * d; ++x)
      if (uf.find(x) == x && !uf.dead[x]) ++commutant_dim_;
  }

  // Structure constants from images of the identity coset.
  std::vector<std::vector<std::int64_t>> col(nw, std::vector<std::int64_t>(d * phi));
  for (std::size_t x = 0; x < nw; ++x)
    for (std::size_t i = 0; i < d; ++i) std::copy_n(Bm[x].at(i, 0), phi, &col[x][i * phi]);
  std::vector<std::size_t> anchor(nw);
  std::vector<std::int64_t> anchor_k(nw);
  for (std::size_t x = 0; x < nw; ++x) {
    anchor[x] = inst.coset_of(inst.wdot(wl_[x]));
    anchor_k[x] = Z.root_exponent(&col[x][anchor[x] * phi]);
    if (anchor_k[x] < 0) throw ConsistencyError("intertwiner has no unit entry on its cell");
  }
  bconst_.assign(nw * nw * nw, Cyclotomic(0));
  b_verified_ = true;
  for (std::size_t x = 0; x < nw; ++x)
    for (std::size_t y = 0; y < nw; ++y) {
      std::vector<std::int64_t> v(d * phi, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) Z.mul_acc(&v[i * phi], Bm[x].at(i, j), &col[y][j * phi]);
      std::vector<std::int64_t> rebuilt(d * phi, 0);
      for (std::size_t z = 0; z < nw; ++z) {
        std::vector<std::int64_t> a(phi, 0);
        Z.mul_root_acc(a.data(), &v[anchor[z] * phi], N - anchor_k[z]);
        bconst_[(x * nw + y) * nw + z] = Z.to_cyc(a.data());
        for (std::size_t i = 0; i < d; ++i) Z.mul_acc(&rebuilt[i * phi], a.data(), &col[z][i * phi]);
      }
      b_verified_ &= rebuilt == v;
    }

  // Quadratic relations for the reflections in W(lambda).
  const std::uint32_t r = inst.field().characteristic();
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const std::size_t s = W.index_of(rs.reflection(pos[k]));
    const std::ptrdiff_t x = wpos(s);
    if (x < 0) continue;
    QuadraticData qd;
    qd.alpha = pos[k];
    qd.w = s;
    qd.length = W.length(s);
    qd.ind_count = inst.ind_count(s);
    qd.in_phi_lambda = in_phi[k];
    qd.relevant = std::count(rel_.delta_lambda.begin(), rel_.delta_lambda.end(), rs.root_index(pos[k])) > 0 ||
                  std::count(rel_.c.begin(), rel_.c.end(), s) > 0;
    qd.relation_holds = true;
    for (std::size_t z = 0; z < nw; ++z)
      if (z != 0 && z != static_cast<std::size_t>(x) && !b_const(x, x, z).is_zero())
        qd.relation_holds = false;
    bool rat = true;
    qd.ind_relation = as_rational(b_const(x, x, 0), rat);
    qd.c = b_const(x, x, x);
    const Rational c = as_rational(qd.c, rat);
    if (rat && qd.relation_holds && qd.ind_relation > 0) {
      const Rational I = qd.ind_relation;
      const Rational lin = 2 * I + c * c;
      for (Rational p = 1; p <= lin / I + 1; p *= r)
        if (I * p * p - lin * p + I == 0) {
          qd.p = p.get_num().get_ui();
          break;
        }
      if (qd.p > 1) qd.epsilon = c > 0 ? 1 : -1;
    }
    quad_.push_back(qd);
  }

  // T basis: T_w = T_w1 T_d1 ... T_dk for w = w1 w2, w1 in C, w2 a reduced
  // word in the reflections of Delta_lambda.
  auto mul = [&](const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
    std::vector<Cyclotomic> out(nw, Cyclotomic(0));
    for (std::size_t x = 0; x < nw; ++x) {
      if (a[x].is_zero()) continue;
      for (std::size_t y = 0; y < nw; ++y) {
        if (b[y].is_zero()) continue;
        const Cyclotomic ab = a[x] * b[y];
        for (std::size_t z = 0; z < nw; ++z)
          if (!b_const(x, y, z).is_zero()) out[z] += ab * b_const(x, y, z);
      }
    }
    return out;
  };
  auto unit = [&](std::size_t x, const Cyclotomic& c) {
    std::vector<Cyclotomic> v(nw, Cyclotomic(0));
    v[x] = c;
    return v;
  };
  auto find_quad = [&](const IVec& a) -> const QuadraticData* {
    for (const auto& qd : quad_)
      if (qd.alpha == a) return &qd;
    return nullptr;
  };
  bool t_ok = true;
  std::vector<std::vector<Cyclotomic>> t_delta;
  std::vector<std::size_t> delta_w;
  for (int di : rel_.delta_lambda) {
    const IVec& a = rs.roots()[di];
    const QuadraticData* qd = find_quad(a);
    delta_w.push_back(W.index_of(rs.reflection(a)));
    delta_p_.push_back(qd ? qd->p : 0);
    if (!qd || qd->p == 0 || !qd->relation_holds || qd->ind_relation != Rational(qd->ind_count)) {
      t_ok = false;
      t_delta.push_back(unit(wpos(delta_w.back()), Cyclotomic(1)));
      continue;
    }
    const std::uint32_t e = prime_exponent(qd->p * qd->ind_count, r);
    const Cyclotomic kappa = sqrt_prime_power(r, e) *
                             Cyclotomic(Rational(qd->epsilon, static_cast<long>(qd->ind_count)));
    t_delta.push_back(unit(wpos(delta_w.back()), kappa));
  }
  // reduced words of R(lambda) in the reflections of Delta_lambda
  std::map<std::size_t, std::vector<int>> rword{{0, {}}};
  {
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t w : frontier)
        for (std::size_t k = 0; k < delta_w.size(); ++k) {
          const std::size_t y = W.mul(w, delta_w[k]);
          if (rword.count(y)) continue;
          auto word = rword[w];
          word.push_back(static_cast<int>(k));
          rword[y] = word;
          next.push_back(y);
        }
      frontier = std::move(next);
    }
  }
  in_r_.assign(nw, false);
  r_word_.assign(nw, {});
  for (const auto& [w, word] : rword) {
    in_r_[wpos(w)] = true;
    r_word_[wpos(w)] = word;
  }
  t_in_b_.assign(nw, {});
  for (std::size_t x = 0; x < nw; ++x) {
    const auto [w1, w2] = rel_.factor(W, wl_[x]);
    const std::uint64_t i1 = inst.ind_count(w1);
    Cyclotomic k1 = sqrt_prime_power(r, prime_exponent(i1, r)) *
                    Cyclotomic(Rational(1, static_cast<long>(i1)));
    std::vector<Cyclotomic> t = unit(wpos(w1), k1);
    for (int k : rword.at(w2)) t = mul(t, t_delta[k]);
    t_in_b_[x] = std::move(t);
  }
  std::vector<std::vector<Cyclotomic>> At(nw, std::vector<Cyclotomic>(nw));
  for (std::size_t z = 0; z < nw; ++z)
    for (std::size_t w = 0; w < nw; ++w) At[w][z] = t_in_b_[z][w];
  tconst_.assign(nw * nw * nw, Rational(0));
  t_rational_ = t_ok;
  for (std::size_t x = 0; x < nw; ++x)
    for (std::size_t y = 0; y < nw; ++y) {
      const auto t = solve(At, mul(t_in_b_[x], t_in_b_[y]));
      for (std::size_t z = 0; z < nw; ++z)
        tconst_[(x * nw + y) * nw + z] = as_rational(t[z], t_rational_);
    }
  braid_ok_ = t_ok;
  for (std::size_t a = 0; a < delta_w.size(); ++a)
    for (std::size_t b = a + 1; b < delta_w.size(); ++b) {
      const std::size_t st = W.mul(delta_w[a], delta_w[b]);
      std::size_t m = 1;
      for (std::size_t p = st; p != 0; p = W.mul(p, st)) ++m;
      std::vector<Cyclotomic> lhs = unit(0, 1), rhs = unit(0, 1);
      for (std::size_t k = 0; k < m; ++k) {
        lhs = mul(lhs, t_delta[k % 2 ? b : a]);
        rhs = mul(rhs, t_delta[k % 2 ? a : b]);
      }
      braid_ok_ &= lhs == rhs;
    }

  // Decomposition of the induced character.
  const ConjClasses& gc = table.classes();
  const ConjClasses bc(inst.B());
  const ClassFunction ind_char = induce(bc, borel_character(inst, bc, lambda_), gc);
  module_char_ok_ = true;
  for (std::size_t c = 0; c < gc.size(); ++c) {
    const Mono m = mono_of(inst, lambda_, scale, gc.rep(c));
    RootSum tr(N);
    for (std::size_t i = 0; i < d; ++i)
      if (m.pi[i] == i) tr.add_root(m.k[i]);
    module_char_ok_ &= tr.to_cyclotomic() == ind_char[c];
  }

  // sum over g in each class of tr(B_w rho(g))
  const ElementList& gel = inst.G().elements();
  std::vector<std::vector<std::int64_t>> S(gc.size() * nw, std::vector<std::int64_t>(N, 0));
  {
    std::vector<std::uint16_t> pis(gel.size() * d);
    std::vector<std::uint8_t> ks(gel.size() * d);
    for (std::size_t e = 0; e < gel.size(); ++e) {
      std::uint16_t* pe = &pis[e * d];
      std::uint8_t* ke = &ks[e * d];
      if (gel.parent[e] < 0) {
        for (std::size_t i = 0; i < d; ++i) {
          pe[i] = static_cast<std::uint16_t>(i);
          ke[i] = 0;
        }
      } else {
        const Mono& a = gm[gel.via[e]];
        const std::uint16_t* pb = &pis[gel.parent[e] * d];
        const std::uint8_t* kb = &ks[gel.parent[e] * d];
        for (std::size_t i = 0; i < d; ++i) {
          pe[i] = pb[a.pi[i]];
          ke[i] = static_cast<std::uint8_t>((a.k[i] + kb[a.pi[i]]) % N);
        }
      }
      const std::uint32_t c = gc.class_of_index(static_cast<std::uint32_t>(e));
      for (std::size_t x = 0; x < nw; ++x) {
        std::int64_t* acc = S[c * nw + x].data();
        for (std::size_t li = 0; li < d; ++li) {
          const std::int64_t* bv = Bm[x].at(pe[li], li);
          for (std::size_t m = 0; m < phi; ++m)
            if (bv[m]) acc[(m + ke[li]) % N] += bv[m];
        }
      }
    }
  }
  const auto consts = irr_constituents(ind_char, table);
  const Rational inv_order(1, static_cast<long>(gc.group_order()));
  std::vector<int> rs_sign(nw);
  for (std::size_t x = 0; x < nw; ++x) rs_sign[x] = r_sigma(W, wl_[x], q, rel_);
  for (auto [row, mult] : consts) {
    Constituent co;
    co.row = row;
    co.degree = table.degree(row);
    co.multiplicity = mult;
    std::vector<Cyclotomic> etaB(nw, Cyclotomic(0));
    for (std::size_t x = 0; x < nw; ++x) {
      for (std::size_t c = 0; c < gc.size(); ++c) {
        RootSum rsum(N);
        for (std::uint32_t k = 0; k < N; ++k) rsum[k] = S[c * nw + x][k];
        etaB[x] += table.value(row, c).conj() * rsum.to_cyclotomic();
      }
      etaB[x] *= Cyclotomic(inv_order);
    }
    for (std::size_t x = 0; x < nw; ++x) {
      Cyclotomic e(0);
      for (std::size_t z = 0; z < nw; ++z) e += t_in_b_[x][z] * etaB[z];
      co.eta.push_back(e);
    }
    if (mult == 1) {
      for (std::size_t k = 0; k < delta_w.size(); ++k) {
        const QuadraticData* qd = find_quad(rs.roots()[rel_.delta_lambda[k]]);
        co.gamma.push_back(qd && co.eta[wpos(delta_w[k])] == Cyclotomic(static_cast<long>(qd->p)) ? 1 : -1);
      }
      for (std::size_t c : rel_.c)
        if (c != 0) co.gamma.push_back(co.eta[wpos(c)] == Cyclotomic(1) ? 1 : -1);
    }
    co.sigma_row = sigma_on_character(table, row);
    co.all_rational = std::all_of(table.values()[row].begin(), table.values()[row].end(),
                                  [](const Cyclotomic& v) { return v.is_rational(); });
    cons_.push_back(std::move(co));
  }
  for (Constituent& co : cons_) {
    co.predicted_sigma_row = static_cast<std::size_t>(-1);
    for (const Constituent& other : cons_) {
      bool match = true;
      for (std::size_t x = 0; x < nw && match; ++x)
        match = other.eta[x] == Cyclotomic(static_cast<long>(rs_sign[x])) * co.eta[x];
      if (match) co.predicted_sigma_row = other.row;
    }
  }
}

std::uint64_t HeckeModule::sum_mult_squares() const {
  std::uint64_t s = 0;
  for (const auto& c : cons_) s += c.multiplicity * c.multiplicity;
  return s;
}

bool HeckeModule::galois_prediction_ok() const {
  return std::all_of(cons_.begin(), cons_.end(),
                     [](const Constituent& c) { return c.sigma_row == c.predicted_sigma_row; });
}

bool HeckeModule::ok() const {
  bool quad = true;
  for (const auto& qd : quad_)
    if (qd.relevant)
      quad &= qd.relation_holds && qd.p > 0 && qd.ind_relation == Rational(qd.ind_count) &&
            (qd.p != 1) == qd.in_phi_lambda;
  return wl_matches_ && phi_matches_ && commute_ && b_verified_ && quad && t_rational_ &&
         braid_ok_ && module_char_ok_ && commutant_dim_ == wl_.size() &&
         sum_mult_squares() == wl_.size() && galois_prediction_ok();
}

nlohmann::json hecke_to_json(const HeckeModule& h) {
  using nlohmann::json;
  const LieInstance& inst = h.instance();
  const WeylGroup& W = inst.weyl();
  json j;
  j["instance"] = inst.name();
  j["q"] = inst.q();
  j["lambda"] = h.lambda().to_string();
  j["induced_dimension"] = h.dim();
  j["w_lambda_order"] = h.w_lambda().size();
  j["r_type"] = h.relative().r_type;
  j["c_order"] = h.relative().c.size();
  j["commutant_dimension"] = h.commutant_dim();
  j["intertwiners_commute"] = h.intertwiners_commute();
  json quad = json::array();
  for (const auto& qd : h.quadratic()) {
    json a = json::array();
    for (int x : qd.alpha) a.push_back(x);
    quad.push_back({{"alpha", a},
                    {"length", qd.length},
                    {"relation_holds", qd.relation_holds},
                    {"ind_relation", qd.ind_relation.get_str()},
                    {"ind_count", qd.ind_count},
                    {"p", qd.p},
                    {"epsilon", qd.epsilon},
                    {"in_phi_lambda", qd.in_phi_lambda},
                    {"relevant", qd.relevant}});
  }
  j["quadratic"] = quad;
  json words = json::array();
  for (std::size_t w : h.w_lambda()) {
    std::string s;
    for (int k : W.reduced_word(w)) s += "s" + std::to_string(k + 1);
    words.push_back(s.empty() ? "1" : s);
  }
  j["w_lambda"] = words;
  const std::size_t n = h.w_lambda().size();
  json tc = json::array();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      json row = json::array();
      for (std::size_t z = 0; z < n; ++z) row.push_back(h.t_const(x, y, z).get_str());
      tc.push_back(row);
    }
  j["t_structure_constants"] = tc;
  j["t_structure_rational"] = h.t_rational();
  j["braid_relations"] = h.braid_ok();
  json cs = json::array();
  for (const auto& c : h.constituents()) {
    json eta = json::array();
    for (const auto& e : c.eta) eta.push_back(e.poly_string());
    cs.push_back({{"row", c.row},
                  {"degree", c.degree},
                  {"multiplicity", c.multiplicity},
                  {"hecke_character", eta},
                  {"gamma", c.gamma},
                  {"sigma_row", c.sigma_row},
                  {"predicted_sigma_row", c.predicted_sigma_row},
                  {"rational", c.all_rational}});
  }
  j["constituents"] = cs;
  j["module_character_ok"] = h.module_character_ok();
  j["galois_prediction_ok"] = h.galois_prediction_ok();
  j["ok"] = h.ok();
  return j;
}

}  // namespace cgt

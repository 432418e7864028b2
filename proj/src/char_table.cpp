#include "cgt/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

using u64 = std::uint64_t;
using Rows = std::vector<std::vector<u64>>;

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw ConsistencyError("division by zero mod p");
  return powmod(a, p - 2, p);
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 f = 2; f * f <= m; ++f) {
    if (m % f) continue;
    factors.push_back(f);
    while (m % f == 0) m /= f;
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g)
    if (std::all_of(factors.begin(), factors.end(),
                    [&](u64 f) { return powmod(g, (p - 1) / f, p) != 1; }))
      return g;
  throw ConsistencyError("no primitive root");
}

// Reduced row echelon form in place; drops zero rows and returns pivot columns.
std::vector<std::size_t> rref(Rows& rows, u64 p) {
  std::vector<std::size_t> piv;
  if (rows.empty()) return piv;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t s = r;
    while (s < rows.size() && rows[s][c] == 0) ++s;
    if (s == rows.size()) continue;
    std::swap(rows[r], rows[s]);
    const u64 inv = invmod(rows[r][c], p);
    for (u64& x : rows[r]) x = x * inv % p;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (t == r || rows[t][c] == 0) continue;
      const u64 f = rows[t][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[t][j] = (rows[t][j] + (p - f) * rows[r][j]) % p;
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  return piv;
}

// Basis of {c : A c = 0}.
Rows nullspace(Rows a, u64 p) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  const auto piv = rref(a, p);
  std::vector<bool> is_piv(n, false);
  for (std::size_t c : piv) is_piv[c] = true;
  Rows out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<u64> v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (p - a[r][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial via reduction to Hessenberg form; low degree first.
std::vector<u64> charpoly(Rows h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const u64 tinv = invmod(h[m][m - 1], p);
    for (i = m + 1; i < n; ++i) {
      const u64 u = h[i][m - 1] * tinv % p;
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = (h[i][j] + (p - u) * h[m][j]) % p;
      for (std::size_t j = 0; j < n; ++j) h[j][m] = (h[j][m] + u * h[j][i]) % p;
    }
  }
  std::vector<std::vector<u64>> P(n + 1);
  P[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> cur(m + 1, 0);
    for (std::size_t d = 0; d < m; ++d) {
      cur[d + 1] = (cur[d + 1] + P[m - 1][d]) % p;
      cur[d] = (cur[d] + (p - h[m - 1][m - 1]) * P[m - 1][d]) % p;
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = t * h[m - i][m - i - 1] % p;
      const u64 f = t * h[m - i - 1][m - 1] % p;
      if (f == 0) continue;
      for (std::size_t d = 0; d < P[m - i - 1].size(); ++d)
        cur[d] = (cur[d] + (p - f) * P[m - i - 1][d]) % p;
    }
    P[m] = std::move(cur);
  }
  return P[n];
}

struct Space {
  Rows rows;
  std::vector<std::size_t> piv;
};

std::string row_key(const std::vector<Cyclotomic>& row) {
  std::string s;
  for (const Cyclotomic& v : row) {
    s += v.poly_string();
    s += ';';
  }
  return s;
}

}  // namespace

std::uint64_t dixon_prime(std::uint64_t e, std::uint64_t order, std::uint64_t cap) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  for (u64 p = e + 1; p <= cap; p += e)
    if (static_cast<double>(p) > bound && is_prime(p)) return p;
  throw SizeGuardError("no prime = 1 mod " + std::to_string(e) + " below cap " +
                       std::to_string(cap));
}

CharacterTable::CharacterTable(ConjClasses classes, std::uint64_t prime,
                               std::vector<std::vector<std::vector<std::int64_t>>> eigen)
    : classes_(std::move(classes)), prime_(prime) {
  const std::size_t k = eigen.size();
  std::vector<std::vector<Cyclotomic>> vals(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < eigen[i].size(); ++c) {
      const auto o = static_cast<std::uint32_t>(classes_.element_order(c));
      std::map<std::int64_t, Rational> terms;
      for (std::uint32_t j = 0; j < o; ++j)
        if (eigen[i][c][j] != 0) terms.emplace(j, Rational(static_cast<long>(eigen[i][c][j])));
      vals[i].push_back(Cyclotomic::from_terms(o, terms));
    }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> keys(k);
  for (std::size_t i = 0; i < k; ++i) keys[i] = row_key(vals[i]);
  auto deg = [&](std::size_t i) { return eigen[i][0][0]; };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (deg(a) != deg(b)) return deg(a) < deg(b);
    return keys[a] < keys[b];
  });
  for (std::size_t i : order) {
    degrees_.push_back(static_cast<std::uint64_t>(deg(i)));
    values_.push_back(std::move(vals[i]));
    eigen_.push_back(std::move(eigen[i]));
  }
}

RootSum CharacterTable::root_sum(std::size_t row, std::size_t cls, std::uint32_t n) const {
  const auto& b = eigen_[row][cls];
  const auto o = static_cast<std::uint32_t>(b.size());
  if (n % o != 0) throw InputError("root_sum: conductor is not a multiple of the class order");
  RootSum r(n);
  for (std::uint32_t j = 0; j < o; ++j)
    if (b[j] != 0) r.add_root(static_cast<std::int64_t>(j) * (n / o), b[j]);
  return r;
}

CharacterTable character_table(const PermGroup& g, const TableOptions& opts) {
  return character_table(ConjClasses(g), opts);
}

CharacterTable character_table(const ConjClasses& cc, const TableOptions& opts) {
  const std::size_t k = cc.size();
  const u64 n = cc.group_order();
  const u64 e = cc.exponent();
  const u64 p = dixon_prime(e, n, opts.prime_cap);
  const ElementList& el = cc.group().elements();
  const std::size_t N = el.size();

  std::vector<std::uint32_t> inv_class(N);
  for (std::size_t i = 0; i < N; ++i)
    inv_class[i] = cc.class_of_index(el.index_of(el.elements[i].inverse()));

  // a[(j*k + l)*k + m] = #{x in C_j : x^-1 g_m in C_l}
  std::vector<std::uint32_t> a(k * k * k, 0);
  for (std::size_t m = 0; m < k; ++m) {
    const Perm& gm = cc.rep(m);
    for (std::size_t i = 0; i < N; ++i) {
      const std::uint32_t l = cc.class_of_index(el.index_of(el.elements[i] * gm));
      ++a[(inv_class[i] * k + l) * k + m];
    }
  }

  std::vector<std::size_t> split_order(k);
  std::iota(split_order.begin(), split_order.end(), 0);
  std::stable_sort(split_order.begin(), split_order.end(), [&](std::size_t x, std::size_t y) {
    return cc.class_size(x) < cc.class_size(y);
  });

  Space whole;
  for (std::size_t i = 0; i < k; ++i) {
    whole.rows.emplace_back(k, 0);
    whole.rows.back()[i] = 1;
    whole.piv.push_back(i);
  }
  std::vector<Space> work{whole}, done;
  for (std::size_t j : split_order) {
    if (work.empty()) break;
    std::vector<Space> next;
    for (Space& sp : work) {
      const std::size_t d = sp.rows.size();
      if (d == 1) {
        done.push_back(std::move(sp));
        continue;
      }
      Rows A(d, std::vector<u64>(d, 0));
      for (std::size_t t = 0; t < d; ++t) {
        const std::uint32_t* arow = &a[(j * k + sp.piv[t]) * k];
        for (std::size_t i = 0; i < d; ++i) {
          u64 s = 0;
          for (std::size_t m = 0; m < k; ++m)
            if (arow[m] && sp.rows[i][m]) s = (s + arow[m] % p * sp.rows[i][m]) % p;
          A[t][i] = s;
        }
      }
      const auto cp = charpoly(A, p);
      std::vector<u64> roots;
      for (u64 x = 0; x < p; ++x) {
        u64 v = 0;
        for (std::size_t c = cp.size(); c-- > 0;) v = (v * x + cp[c]) % p;
        if (v == 0) roots.push_back(x);
      }
      if (roots.size() == 1) {
        bool scalar = true;
        for (std::size_t t = 0; t < d && scalar; ++t)
          for (std::size_t i = 0; i < d && scalar; ++i)
            scalar = A[t][i] == (t == i ? roots[0] : 0);
        if (!scalar) throw ConsistencyError("class matrix not diagonalizable mod p");
        next.push_back(std::move(sp));
        continue;
      }
      std::size_t total = 0;
      for (u64 lam : roots) {
        Rows shifted = A;
        for (std::size_t t = 0; t < d; ++t) shifted[t][t] = (shifted[t][t] + p - lam) % p;
        Space sub;
        for (const auto& c : nullspace(shifted, p)) {
          std::vector<u64> v(k, 0);
          for (std::size_t i = 0; i < d; ++i)
            if (c[i])
              for (std::size_t m = 0; m < k; ++m) v[m] = (v[m] + c[i] * sp.rows[i][m]) % p;
          sub.rows.push_back(std::move(v));
        }
        sub.piv = rref(sub.rows, p);
        total += sub.rows.size();
        next.push_back(std::move(sub));
      }
      if (total != d) throw ConsistencyError("eigenspaces do not fill the subspace");
    }
    work = std::move(next);
  }
  for (Space& sp : work) {
    if (sp.rows.size() != 1) throw ConsistencyError("class sums failed to split the center");
    done.push_back(std::move(sp));
  }
  if (done.size() != k) throw ConsistencyError("wrong number of irreducible characters");

  // Powers of each representative, as classes.
  std::vector<std::vector<std::uint32_t>> powc(k);
  for (std::size_t c = 0; c < k; ++c) {
    Perm x = Perm::identity(cc.group().degree());
    for (u64 l = 0; l < cc.element_order(c); ++l) {
      powc[c].push_back(cc.class_of(x));
      x = x * cc.rep(c);
    }
  }

  const u64 z = powmod(primitive_root(p), (p - 1) / e, p);
  std::vector<std::vector<std::vector<std::int64_t>>> eigen;
  for (Space& sp : done) {
    std::vector<u64> w = sp.rows[0];
    if (w[0] == 0) throw ConsistencyError("central character vanishes at the identity");
    const u64 s0 = invmod(w[0], p);
    for (u64& x : w) x = x * s0 % p;
    u64 S = 0;
    for (std::size_t c = 0; c < k; ++c)
      S = (S + w[c] * w[cc.inverse_classes()[c]] % p * invmod(cc.class_size(c) % p, p)) % p;
    const u64 target = n % p * invmod(S, p) % p;
    u64 deg = 0;
    for (u64 d = 1; d * d <= n; ++d)
      if (n % d == 0 && d * d % p == target) deg = d;
    if (deg == 0) throw ConsistencyError("no degree matches the central character");
    std::vector<u64> chi(k);
    for (std::size_t c = 0; c < k; ++c)
      chi[c] = w[c] * (deg % p) % p * invmod(cc.class_size(c) % p, p) % p;

    std::vector<std::vector<std::int64_t>> row(k);
    for (std::size_t c = 0; c < k; ++c) {
      const u64 o = cc.element_order(c);
      const u64 zo = powmod(z, e / o, p);
      const u64 zo_inv = invmod(zo, p);
      const u64 o_inv = invmod(o % p, p);
      std::int64_t sum = 0;
      row[c].assign(o, 0);
      for (u64 kk = 0; kk < o; ++kk) {
        const u64 step = powmod(zo_inv, kk, p);
        u64 acc = 0, zp = 1;
        for (u64 l = 0; l < o; ++l) {
          acc = (acc + chi[powc[c][l]] * zp) % p;
          zp = zp * step % p;
        }
        const u64 b = acc * o_inv % p;
        if (b > deg) throw ConsistencyError("eigenvalue multiplicity out of range");
        row[c][kk] = static_cast<std::int64_t>(b);
        sum += static_cast<std::int64_t>(b);
      }
      if (static_cast<u64>(sum) != deg)
        throw ConsistencyError("eigenvalue multiplicities do not sum to the degree");
    }
    eigen.push_back(std::move(row));
  }
  return CharacterTable(cc, p, std::move(eigen));
}

std::size_t sigma_on_character(const CharacterTable& t, std::size_t row) {
  std::vector<Cyclotomic> s;
  for (const Cyclotomic& v : t.values()[row]) s.push_back(v.apply_sigma());
  for (std::size_t j = 0; j < t.size(); ++j)
    if (t.degree(j) == t.degree(row) && t.values()[j] == s) return j;
  throw ConsistencyError("sigma image of a row is not a row");
}

std::vector<std::size_t> odd_degree_rows(const CharacterTable& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.degree(i) % 2 == 1) out.push_back(i);
  return out;
}

ClassFunction table_row(const CharacterTable& t, std::size_t row) { return t.values()[row]; }

ClassFunction induce(const ConjClasses& h, const ClassFunction& f, const ConjClasses& g) {
  if (f.size() != h.size()) throw InputError("class function length differs from class count");
  if (h.group().degree() != g.group().degree()) throw InputError("H and G act on different sets");
  ClassFunction out(g.size(), Cyclotomic(0));
  for (std::size_t c = 0; c < h.size(); ++c) {
    const std::uint32_t j = g.class_of(h.rep(c));
    const Rational w(static_cast<long>(g.centralizer_order(j)),
                     static_cast<long>(h.centralizer_order(c)));
    out[j] += f[c] * Cyclotomic(w);
  }
  return out;
}

ClassFunction restrict_to(const ConjClasses& g, const ClassFunction& f, const ConjClasses& h) {
  if (f.size() != g.size()) throw InputError("class function length differs from class count");
  ClassFunction out;
  for (std::size_t c = 0; c < h.size(); ++c) out.push_back(f[g.class_of(h.rep(c))]);
  return out;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b, const ConjClasses& c) {
  if (a.size() != c.size() || b.size() != c.size())
    throw InputError("class function length differs from class count");
  Cyclotomic s(0);
  for (std::size_t j = 0; j < c.size(); ++j)
    s += Cyclotomic(static_cast<long>(c.class_size(j))) * a[j] * b[j].conj();
  return s * Cyclotomic(Rational(1, static_cast<long>(c.group_order())));
}

std::vector<std::pair<std::size_t, std::uint64_t>> irr_constituents(const ClassFunction& f,
                                                                      const CharacterTable& t) {
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  ClassFunction rebuilt(f.size(), Cyclotomic(0));
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Cyclotomic m = inner_product(f, t.values()[i], t.classes());
    if (!m.is_rational()) throw InputError("class function is not a character");
    const Rational r = m.rational_value();
    if (r.get_den() != 1 || r < 0) throw InputError("class function is not a character");
    if (r == 0) continue;
    out.emplace_back(i, r.get_num().get_ui());
    for (std::size_t c = 0; c < f.size(); ++c) rebuilt[c] += Cyclotomic(r) * t.values()[i][c];
  }
  if (rebuilt != f) throw InputError("class function is not a combination of irreducibles");
  return out;
}

TableCheck verify_table(const CharacterTable& t) {
  TableCheck chk;
  const ConjClasses& cc = t.classes();
  const std::size_t k = t.size();
  const auto e = static_cast<std::uint32_t>(t.exponent());
  const std::uint64_t n = cc.group_order();

  for (std::size_t a = 0; a < k && chk.row_orthogonality; ++a)
    for (std::size_t b = a; b < k && chk.row_orthogonality; ++b) {
      RootSum acc(e);
      for (std::size_t c = 0; c < k; ++c) {
        const auto& x = t.eigen(a, c);
        const auto& y = t.eigen(b, c);
        const std::int64_t o = static_cast<std::int64_t>(x.size());
        const std::int64_t step = e / o;
        const auto sz = static_cast<std::int64_t>(cc.class_size(c));
        for (std::int64_t i = 0; i < o; ++i) {
          if (!x[i]) continue;
          for (std::int64_t j = 0; j < o; ++j)
            if (y[j]) acc.add_root((i - j) * step, sz * x[i] * y[j]);
        }
      }
      chk.row_orthogonality =
          acc.to_cyclotomic() == Cyclotomic(static_cast<long>(a == b ? n : 0));
    }

  for (std::size_t c = 0; c < k && chk.column_orthogonality; ++c)
    for (std::size_t d = c; d < k && chk.column_orthogonality; ++d) {
      const auto L = static_cast<std::uint32_t>(lcm_u64(cc.element_order(c), cc.element_order(d)));
      RootSum acc(L);
      for (std::size_t r = 0; r < k; ++r) {
        const auto& x = t.eigen(r, c);
        const auto& y = t.eigen(r, d);
        const std::int64_t sx = L / x.size(), sy = L / y.size();
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (!x[i]) continue;
          for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j])
              acc.add_root(static_cast<std::int64_t>(i) * sx - static_cast<std::int64_t>(j) * sy,
                           x[i] * y[j]);
        }
      }
      chk.column_orthogonality =
          acc.to_cyclotomic() ==
          Cyclotomic(static_cast<long>(c == d ? cc.centralizer_order(c) : 0));
    }

  Integer sq = 0;
  for (std::uint64_t d : t.degrees()) {
    sq += Integer(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d);
    if (n % d != 0) chk.degrees_divide = false;
  }
  chk.degree_sum = sq == Integer(static_cast<unsigned long>(n));

  std::vector<std::size_t> sig(k);
  try {
    for (std::size_t i = 0; i < k; ++i) sig[i] = sigma_on_character(t, i);
    std::vector<std::size_t> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < k; ++i) chk.sigma_permutes_rows &= sorted[i] == i;
  } catch (const ConsistencyError&) {
    chk.sigma_permutes_rows = false;
  }

  const auto pm = cc.power_map(galois_exponent(e));
  for (std::size_t i = 0; i < k && chk.sigma_power_map; ++i)
    for (std::size_t c = 0; c < k && chk.sigma_power_map; ++c)
      chk.sigma_power_map = t.value(i, c).apply_sigma() == t.value(i, pm[c]);

  if (chk.sigma_permutes_rows) {
    std::size_t fixed_rows = 0, fixed_classes = 0;
    for (std::size_t i = 0; i < k; ++i) fixed_rows += sig[i] == i;
    for (std::size_t c = 0; c < k; ++c) fixed_classes += pm[c] == c;
    chk.brauer_count = fixed_rows == fixed_classes;
  } else {
    chk.brauer_count = false;
  }
  return chk;
}

nlohmann::json table_to_json(const CharacterTable& t) {
  const ConjClasses& cc = t.classes();
  nlohmann::json j;
  j["order"] = cc.group_order();
  j["exponent"] = t.exponent();
  j["prime"] = t.prime();
  j["classes"] = nlohmann::json::array();
  for (std::size_t c = 0; c < cc.size(); ++c)
    j["classes"].push_back({{"rep_word", cc.group().elements().word(cc.rep_index(c))},
                            {"size", cc.class_size(c)},
                            {"element_order", cc.element_order(c)}});
  j["rows"] = nlohmann::json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    nlohmann::json vals = nlohmann::json::array();
    for (const Cyclotomic& v : t.values()[i]) vals.push_back(v.to_string());
    j["rows"].push_back({{"degree", t.degree(i)}, {"values", vals}});
  }
  return j;
}

}  // namespace cgt

#include "cgt/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// pairing(y) = (F . y) / den mod m, F = c * dual_num
struct Functional {
  std::vector<std::int64_t> f;
  std::int64_t den = 1, m = 1;

  Functional(const RootSystem& rs, const TorusCharacter& l) : den(rs.dual_den()), m(l.modulus()) {
    f.assign(rs.ambient(), 0);
    for (std::size_t i = 0; i < l.c.size(); ++i)
      for (std::size_t j = 0; j < rs.ambient(); ++j) f[j] += l.c[i] * rs.dual_num()[i][j];
  }
  std::int64_t operator()(const IVec& y) const {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < y.size(); ++j) s += f[j] * y[j];
    if (s % den != 0) throw ConsistencyError("pairing with a vector outside the lattice");
    return mod(s / den, m);
  }
};

}  // namespace

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
  if (weyl_order(rs_.kind(), rs_.rank()) > 50000)
    throw SizeGuardError("Weyl group of " + rs_.name() + " is too large to enumerate");
  for (const IVec& a : rs_.simple_roots()) simple_.push_back(rs_.reflection(a));
  elems_.push_back(SignedPerm::identity(rs_.ambient()));
  parent_.push_back(-1);
  via_.push_back(-1);
  index_[elems_[0]] = 0;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t s = 0; s < simple_.size(); ++s) {
      SignedPerm w = simple_[s] * elems_[i];
      if (index_.count(w)) continue;
      index_[w] = elems_.size();
      elems_.push_back(std::move(w));
      parent_.push_back(static_cast<int>(i));
      via_.push_back(static_cast<int>(s));
    }
  for (const SignedPerm& w : elems_) lengths_.push_back(rs_.length(w));
  if (elems_.size() != weyl_order(rs_.kind(), rs_.rank()))
    throw ConsistencyError("Weyl group enumeration has the wrong order");
}

std::size_t WeylGroup::index_of(const SignedPerm& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw InputError("signed permutation is not in the Weyl group");
  return it->second;
}

std::size_t WeylGroup::longest() const {
  return static_cast<std::size_t>(std::max_element(lengths_.begin(), lengths_.end()) -
                                  lengths_.begin());
}

std::vector<int> WeylGroup::reduced_word(std::size_t i) const {
  std::vector<int> w;
  while (parent_[i] >= 0) {
    w.push_back(via_[i]);
    i = static_cast<std::size_t>(parent_[i]);
  }
  return w;
}

std::uint64_t weyl_order(RootKind kind, int rank) {
  switch (kind) {
    case RootKind::A:
      return factorial(rank + 1);
    case RootKind::B:
    case RootKind::C:
      return (std::uint64_t{1} << rank) * factorial(rank);
    case RootKind::D:
      return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
  }
  return 0;
}

std::uint64_t TorusCharacter::order() const {
  std::uint64_t o = 1;
  const std::int64_t m = modulus();
  for (std::int64_t x : c) {
    const std::int64_t g = std::gcd(mod(x, m), m);
    o = std::lcm(o, static_cast<std::uint64_t>(m / g));
  }
  return o;
}

bool TorusCharacter::is_trivial() const {
  return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
}

std::string TorusCharacter::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

TorusCharacter make_character(std::uint32_t q, std::vector<std::int64_t> c) {
  if (q < 3 || q % 2 == 0) throw InputError("q must be odd and at least 3");
  TorusCharacter l{q, std::move(c)};
  for (auto& x : l.c) x = mod(x, l.modulus());
  return l;
}

std::int64_t pairing(const RootSystem& rs, const TorusCharacter& l, const IVec& y) {
  if (l.c.size() != rs.torus_basis().size()) throw InputError("character has wrong rank");
  return Functional(rs, l)(y);
}

TorusCharacter weyl_action_on_character(const RootSystem& rs, const SignedPerm& w,
                                        const TorusCharacter& l) {
  const Functional f(rs, l);
  const SignedPerm wi = w.inverse();
  TorusCharacter out = l;
  for (std::size_t i = 0; i < rs.torus_basis().size(); ++i)
    out.c[i] = f(wi.apply(rs.torus_basis()[i]));
  return out;
}

bool RelativeWeylData::contains(std::size_t w) const {
  return std::binary_search(w_lambda.begin(), w_lambda.end(), w);
}

bool RelativeWeylData::in_r(std::size_t w) const { return std::binary_search(r.begin(), r.end(), w); }

std::pair<std::size_t, std::size_t> RelativeWeylData::factor(const WeylGroup& W,
                                                             std::size_t w) const {
  if (!contains(w)) throw InputError("element is not in W(lambda)");
  for (std::size_t x : c) {
    const std::size_t w2 = W.mul(W.inverse(x), w);
    if (in_r(w2)) return {x, w2};
  }
  throw ConsistencyError("no C(lambda) R(lambda) factorization");
}

std::string subsystem_type(const RootSystem& rs, const std::vector<IVec>& simple, int* rank) {
  const std::size_t n = simple.size();
  if (rank) *rank = static_cast<int>(n);
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<std::size_t> stack{i};
    comp[i] = nc;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < n; ++b)
        if (comp[b] < 0 && dot(simple[a], simple[b]) != 0) {
          comp[b] = nc;
          stack.push_back(b);
        }
    }
    ++nc;
  }
  std::vector<std::string> names;
  for (int k = 0; k < nc; ++k) {
    std::vector<IVec> s;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == k) s.push_back(simple[i]);
    std::set<IVec> roots(s.begin(), s.end());
    std::vector<IVec> frontier(s.begin(), s.end());
    while (!frontier.empty()) {
      std::vector<IVec> next;
      for (const IVec& r : frontier)
        for (const IVec& a : s) {
          IVec img = rs.reflection(a).apply(r);
          if (roots.insert(img).second) next.push_back(img);
        }
      frontier = std::move(next);
    }
    const int r = static_cast<int>(s.size());
    const std::size_t N = roots.size();
    int maxlen = 0;
    for (const IVec& x : roots) maxlen = std::max(maxlen, dot(x, x));
    std::size_t longc = 0;
    for (const IVec& x : roots) longc += dot(x, x) == maxlen;
    const std::size_t shortc = N - longc;
    std::string t;
    if (shortc == 0) {
      if (N == static_cast<std::size_t>(r * (r + 1))) t = "A" + std::to_string(r);
      else if (N == static_cast<std::size_t>(2 * r * (r - 1))) t = "D" + std::to_string(r);
    } else if (N == static_cast<std::size_t>(2 * r * r)) {
      if (shortc == static_cast<std::size_t>(2 * r)) t = "B" + std::to_string(r);
      else if (longc == static_cast<std::size_t>(2 * r)) t = "C" + std::to_string(r);
    }
    if (t.empty()) throw ConsistencyError("unrecognized root subsystem");
    names.push_back(t);
  }
  std::sort(names.begin(), names.end());
  if (names.empty()) return "1";
  std::string out = names[0];
  for (std::size_t i = 1; i < names.size(); ++i) out += "x" + names[i];
  return out;
}

RelativeWeylData relative_weyl(const WeylGroup& W, const TorusCharacter& l) {
  const RootSystem& rs = W.roots();
  if (l.c.size() != rs.torus_basis().size()) throw InputError("character has wrong rank");
  const Functional f(rs, l);
  RelativeWeylData d;
  d.lambda = l;

  for (std::size_t i = 0; i < W.size(); ++i) {
    const SignedPerm wi = W.element(i).inverse();
    bool fixed = true;
    for (std::size_t b = 0; b < rs.torus_basis().size() && fixed; ++b)
      fixed = f(wi.apply(rs.torus_basis()[b])) == l.c[b];
    if (fixed) d.w_lambda.push_back(i);
  }

  std::vector<IVec> pos;
  for (std::size_t i = 0; i < rs.roots().size(); ++i) {
    const IVec& a = rs.roots()[i];
    if (f(rs.coroot(a)) != 0) continue;
    d.phi_lambda.push_back(static_cast<int>(i));
    if (RootSystem::is_positive(a)) pos.push_back(a);
  }
  std::set<IVec> posset(pos.begin(), pos.end());
  std::vector<IVec> delta;
  for (const IVec& a : pos) {
    bool decomposable = false;
    for (const IVec& b : pos) {
      IVec rest(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) rest[j] = a[j] - b[j];
      if (posset.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) {
      delta.push_back(a);
      d.delta_lambda.push_back(rs.root_index(a));
    }
  }
  d.r_type = subsystem_type(rs, delta, &d.r_rank);

  std::vector<SignedPerm> refl;
  for (const IVec& a : delta) refl.push_back(rs.reflection(a));
  std::set<std::size_t> rset{W.index_of(SignedPerm::identity(rs.ambient()))};
  std::vector<std::size_t> frontier(rset.begin(), rset.end());
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t x : frontier)
      for (const SignedPerm& s : refl) {
        const std::size_t y = W.index_of(s * W.element(x));
        if (rset.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  d.r.assign(rset.begin(), rset.end());

  for (std::size_t w : d.w_lambda) {
    const SignedPerm& x = W.element(w);
    if (std::all_of(pos.begin(), pos.end(),
                    [&](const IVec& a) { return posset.count(x.apply(a)) > 0; }))
      d.c.push_back(w);
  }

  d.order_identity = d.w_lambda.size() == d.r.size() * d.c.size();
  std::size_t common = 0;
  for (std::size_t w : d.c) common += d.in_r(w);
  d.trivial_intersection = common == 1;
  d.r_normal = std::all_of(d.r.begin(), d.r.end(), [&](std::size_t x) { return d.contains(x); });
  for (std::size_t w : d.w_lambda) {
    const SignedPerm& x = W.element(w);
    const SignedPerm xi = x.inverse();
    for (const SignedPerm& s : refl)
      if (!d.in_r(W.index_of(x * s * xi))) d.r_normal = false;
  }
  d.phi_closed = true;
  std::set<int> phiset(d.phi_lambda.begin(), d.phi_lambda.end());
  for (int a : d.phi_lambda) {
    IVec neg = rs.roots()[a];
    for (int& v : neg) v = -v;
    if (!phiset.count(rs.root_index(neg))) d.phi_closed = false;
    for (std::size_t w : d.w_lambda)
      if (!phiset.count(rs.root_index(W.element(w).apply(rs.roots()[a])))) d.phi_closed = false;
  }
  return d;
}

int r_sigma(const WeylGroup& W, std::size_t w, std::uint32_t q, const RelativeWeylData& d) {
  const auto [w1, w2] = d.factor(W, w);
  (void)w2;
  if (q % 8 == 1 || q % 8 == 7) return 1;
  return W.length(w1) % 2 == 0 ? 1 : -1;
}

namespace {

bool wreath_form(int n, std::uint64_t r_order) {
  for (int n3 = 0; n3 <= 1; ++n3)
    for (int n1 = 0; n1 <= n - n3; ++n1) {
      const int n2 = n - n3 - n1;
      if (r_order == (std::uint64_t{1} << (n1 + n2)) * factorial(n1) * factorial(n2)) return true;
    }
  return false;
}

}  // namespace

SurveyReport survey_odd_index(RootKind kind, int rank, std::uint32_t q) {
  if (rank > 5) throw SizeGuardError("survey rank is limited to 5");
  if (q < 3 || q % 2 == 0) throw InputError("q must be odd and at least 3");
  const WeylGroup W{RootSystem(kind, rank)};
  const RootSystem& rs = W.roots();
  const std::int64_t m = static_cast<std::int64_t>(q) - 1;
  const std::size_t n = rs.torus_basis().size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(m);
    if (total > 50000) throw SizeGuardError("too many torus characters to enumerate");
  }

  // Each simple reflection acts on exponent tuples by an integer matrix.
  std::vector<std::vector<std::vector<std::int64_t>>> act;
  for (const SignedPerm& s : W.simple_reflections()) {
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const auto col = rs.lattice_coords(s.inverse().apply(rs.torus_basis()[i]));
      for (std::size_t j = 0; j < n; ++j) a[i][j] = col[j];
    }
    act.push_back(std::move(a));
  }
  auto decode = [&](std::uint64_t code) {
    std::vector<std::int64_t> c(n);
    for (std::size_t i = n; i-- > 0;) {
      c[i] = static_cast<std::int64_t>(code % m);
      code /= m;
    }
    return c;
  };
  auto encode = [&](const std::vector<std::int64_t>& c) {
    std::uint64_t code = 0;
    for (std::int64_t x : c) code = code * m + static_cast<std::uint64_t>(x);
    return code;
  };

  SurveyReport rep;
  rep.kind = kind;
  rep.rank = rank;
  rep.q = q;
  rep.num_characters = total;
  std::vector<std::uint64_t> orbit_size(total, 0);
  for (std::uint64_t start = 0; start < total; ++start) {
    if (orbit_size[start]) continue;
    ++rep.num_orbits;
    std::vector<std::uint64_t> orbit{start};
    orbit_size[start] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const auto c = decode(orbit[i]);
      for (const auto& a : act) {
        std::vector<std::int64_t> img(n, 0);
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t j = 0; j < n; ++j) img[r] += a[r][j] * c[j];
          img[r] = mod(img[r], m);
        }
        const std::uint64_t code = encode(img);
        if (orbit_size[code]) continue;
        orbit_size[code] = 1;
        orbit.push_back(code);
      }
    }
    for (std::uint64_t x : orbit) orbit_size[x] = orbit.size();
  }

  for (std::uint64_t code = 0; code < total; ++code) {
    if (orbit_size[code] % 2 == 0) continue;
    const TorusCharacter l = make_character(q, decode(code));
    const RelativeWeylData d = relative_weyl(W, l);
    SurveyRecord r;
    r.lambda = l;
    r.index = orbit_size[code];
    r.w_order = d.w_lambda.size();
    r.r_order = d.r.size();
    r.c_order = d.c.size();
    r.r_type = d.r_type;
    r.r_rank = d.r_rank;
    for (std::size_t w : d.c) r.c_odd_length += W.length(w) % 2;
    r.structure_ok = d.structure_ok() && r.w_order * r.index == W.size();
    if (kind == RootKind::B) r.wreath_form = wreath_form(rank, r.r_order);
    rep.odd_length_count += r.c_odd_length > 0;
    rep.all_structure_ok = rep.all_structure_ok && r.structure_ok;
    rep.all_wreath_form = rep.all_wreath_form && r.wreath_form;
    rep.records.push_back(std::move(r));
  }
  return rep;
}

nlohmann::json survey_to_json(const SurveyReport& s) {
  nlohmann::json recs = nlohmann::json::array();
  for (const SurveyRecord& r : s.records)
    recs.push_back({{"lambda", r.lambda.c},
                    {"index", r.index},
                    {"w_lambda_order", r.w_order},
                    {"r_order", r.r_order},
                    {"r_type", r.r_type},
                    {"r_rank", r.r_rank},
                    {"c_order", r.c_order},
                    {"c_odd_length_elements", r.c_odd_length},
                    {"structure_ok", r.structure_ok}});
  return {{"type", std::string(1, kind_letter(s.kind))},
          {"rank", s.rank},
          {"q", s.q},
          {"characters", s.num_characters},
          {"orbits", s.num_orbits},
          {"odd_index_characters", s.records.size()},
          {"with_odd_length_c_element", s.odd_length_count},
          {"all_structure_ok", s.all_structure_ok},
          {"records", recs}};
}

int witness_k(int n) {
  int k = 1;
  while (2 * k < n) k *= 2;
  return k;
}

TorusCharacter witness_lambda_type_C(int n, std::uint32_t q) {
  if (n < 3) throw InputError("witness needs rank n >= 3");
  if (q % 8 != 5) throw InputError("witness needs q = 5 mod 8");
  const int k = witness_k(n);
  std::vector<std::int64_t> c(n, 0);
  for (int i = 0; i < k; ++i) c[i] = (q - 1) / 2;
  return make_character(q, std::move(c));
}

}  // namespace cgt

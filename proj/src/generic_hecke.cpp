#include "cgt/generic_hecke.hpp"

#include <cmath>

#include "cgt/errors.hpp"

namespace cgt {

Laurent Laurent::constant(long c, std::size_t nvars) {
  Laurent l;
  if (c != 0) l.terms_[std::vector<int>(nvars, 0)] = c;
  return l;
}

Laurent Laurent::var(std::size_t i, std::size_t nvars) {
  Laurent l;
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  l.terms_[e] = 1;
  return l;
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    Integer& t = terms_[e];
    t += c;
    if (t == 0) terms_.erase(e);
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    Integer& t = terms_[e];
    t -= c;
    if (t == 0) terms_.erase(e);
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      Integer& t = out.terms_[e];
      t += ca * cb;
      if (t == 0) out.terms_.erase(e);
    }
  return out;
}

Rational Laurent::evaluate(const std::vector<Rational>& u) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0 && u[i] == 0) throw InputError("Laurent polynomial evaluated at 0");
      for (int k = 0; k < std::abs(e[i]); ++k) t = e[i] > 0 ? Rational(t * u[i]) : Rational(t / u[i]);
    }
    s += t;
  }
  return s;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0)
        mono += "*u" + std::to_string(i) + (e[i] != 1 ? "^" + std::to_string(e[i]) : "");
    std::string coef = c.get_str();
    if (!s.empty() && c > 0) s += "+";
    if (mono.empty()) s += coef;
    else if (c == 1) s += mono.substr(1);
    else if (c == -1) s += "-" + mono.substr(1);
    else s += coef + mono;
  }
  return s;
}

namespace {

SignedPerm make(std::vector<int> perm, std::vector<int> sign) { return SignedPerm{std::move(perm), std::move(sign)}; }

// Rank of a rational matrix.
std::size_t rank_of(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

GenericHecke::GenericHecke(const std::string& type) : type_(type) {
  if (type == "A1") {
    gens_ = {make({0}, {-1})};
    param_ = {0};
  } else if (type == "A1xA1") {
    gens_ = {make({0, 1}, {-1, 1}), make({0, 1}, {1, -1})};
    param_ = {0, 1};
  } else if (type == "B2") {
    gens_ = {make({1, 0}, {1, 1}), make({0, 1}, {1, -1})};
    param_ = {0, 1};
  } else {
    throw InputError("generic Hecke algebra type must be A1, A1xA1 or B2");
  }
  num_params_ = param_.size() ? *std::max_element(param_.begin(), param_.end()) + 1 : 0;

  elems_.push_back(SignedPerm::identity(gens_[0].perm.size()));
  len_.push_back(0);
  word_.push_back({});
  index_[elems_[0]] = 0;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      SignedPerm x = gens_[s] * elems_[i];
      if (index_.count(x)) continue;
      index_[x] = elems_.size();
      std::vector<int> w{static_cast<int>(s)};
      w.insert(w.end(), word_[i].begin(), word_[i].end());
      elems_.push_back(std::move(x));
      len_.push_back(len_[i] + 1);
      word_.push_back(std::move(w));
    }

  const std::size_t n = size();
  auto left_mult = [&](std::size_t s, const std::vector<Laurent>& v) {
    std::vector<Laurent> out(n);
    const Laurent u = Laurent::var(param_[s], num_params_);
    const Laurent um1 = u - Laurent::constant(1, num_params_);
    for (std::size_t w = 0; w < n; ++w) {
      if (v[w].is_zero()) continue;
      const std::size_t sw = index_.at(gens_[s] * elems_[w]);
      if (len_[sw] > len_[w]) {
        out[sw] += v[w];
      } else {
        out[sw] += u * v[w];
        out[w] += um1 * v[w];
      }
    }
    return out;
  };
  table_.assign(n * n * n, Laurent());
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<Laurent> v(n);
      v[y] = Laurent::constant(1, num_params_);
      for (auto it = word_[x].rbegin(); it != word_[x].rend(); ++it) v = left_mult(*it, v);
      for (std::size_t z = 0; z < n; ++z) table_[(x * n + y) * n + z] = v[z];
    }
}

std::size_t GenericHecke::index_of_word(const std::vector<int>& word) const {
  SignedPerm x = elems_[0];
  for (int s : word) {
    if (s < 0 || static_cast<std::size_t>(s) >= gens_.size()) throw InputError("bad generator index");
    x = x * gens_[s];
  }
  return index_.at(x);
}

std::vector<Rational> GenericHecke::specialize(const std::vector<Rational>& u) const {
  if (u.size() != num_params_) throw InputError("wrong number of Hecke parameters");
  std::vector<Rational> out;
  out.reserve(table_.size());
  for (const Laurent& l : table_) out.push_back(l.evaluate(u));
  return out;
}

bool GenericHecke::specializes_to_group_algebra() const {
  const std::size_t n = size();
  const auto t = specialize(std::vector<Rational>(num_params_, Rational(1)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = index_.at(elems_[x] * elems_[y]);
      for (std::size_t z = 0; z < n; ++z)
        if (t[(x * n + y) * n + z] != (z == xy ? 1 : 0)) return false;
    }
  return true;
}

std::size_t GenericHecke::center_dimension(const std::vector<Rational>& u) const {
  const std::size_t n = size();
  const auto t = specialize(u);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t s = 0; s < gens_.size(); ++s) {
    const std::size_t g = index_of_word({static_cast<int>(s)});
    for (std::size_t z = 0; z < n; ++z) {
      std::vector<Rational> row(n);
      for (std::size_t w = 0; w < n; ++w) row[w] = t[(g * n + w) * n + z] - t[(w * n + g) * n + z];
      rows.push_back(std::move(row));
    }
  }
  return n - rank_of(std::move(rows));
}

std::size_t GenericHecke::num_linear_characters(const std::vector<Rational>& u) const {
  const std::size_t n = size();
  const auto t = specialize(u);
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens_.size()); ++mask) {
    std::vector<Rational> chi(n);
    for (std::size_t w = 0; w < n; ++w) {
      Rational v = 1;
      for (int s : word_[w]) v *= (mask >> s) & 1 ? Rational(-1) : u[param_[s]];
      chi[w] = v;
    }
    bool hom = true;
    for (std::size_t x = 0; x < n && hom; ++x)
      for (std::size_t y = 0; y < n && hom; ++y) {
        Rational s = 0;
        for (std::size_t z = 0; z < n; ++z) s += t[(x * n + y) * n + z] * chi[z];
        hom = s == chi[x] * chi[y];
      }
    count += hom;
  }
  return count;
}

std::vector<std::uint64_t> GenericHecke::irreducible_degrees(const std::vector<Rational>& u) const {
  const std::size_t k = center_dimension(u), l = num_linear_characters(u);
  std::vector<std::uint64_t> out(l, 1);
  if (k == l) return l == size() ? out : std::vector<std::uint64_t>{};
  if (k != l + 1) return {};
  const std::uint64_t rest = size() - l;
  const auto d = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
  if (d * d != rest) return {};
  out.push_back(d);
  return out;
}

bool matches_module(const GenericHecke& h, const HeckeModule& m, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (m.relative().r_type != h.type()) return fail("R(lambda) has type " + m.relative().r_type);
  const std::size_t nw = m.w_lambda().size();
  std::vector<std::size_t> pos, gidx;
  for (std::size_t x = 0; x < nw; ++x)
    if (m.in_r(x)) {
      pos.push_back(x);
      gidx.push_back(h.index_of_word(m.r_word(x)));
    }
  if (pos.size() != h.size()) return fail("R(lambda) and the Coxeter group differ in order");
  std::vector<Rational> u(h.num_params());
  const auto& p = m.delta_p();
  if (p.size() != h.num_generators()) return fail("rank mismatch");
  for (std::size_t s = 0; s < p.size(); ++s) u[s < u.size() ? s : 0] = Rational(static_cast<long>(p[s]));
  const auto t = h.specialize(u);
  const std::size_t n = h.size();
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = 0; b < pos.size(); ++b)
      for (std::size_t z = 0; z < nw; ++z) {
        Rational expect = 0;
        for (std::size_t c = 0; c < pos.size(); ++c)
          if (pos[c] == z) expect = t[(gidx[a] * n + gidx[b]) * n + gidx[c]];
        if (m.t_const(pos[a], pos[b], z) != expect)
          return fail("structure constant differs at (" + std::to_string(pos[a]) + "," +
                      std::to_string(pos[b]) + "," + std::to_string(z) + ")");
      }
  return true;
}

}  // namespace cgt

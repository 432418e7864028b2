#include "cgt/sylow.hpp"

#include <algorithm>

#include "cgt/errors.hpp"

namespace cgt {

std::uint64_t two_part(std::uint64_t n) {
  std::uint64_t t = 1;
  while (n > 0 && n % 2 == 0) {
    n /= 2;
    t *= 2;
  }
  return t;
}

namespace {

bool normalizes(const Perm& g, const PermGroup& h, const Perm& g_inv) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Perm& s) { return h.contains(g * s * g_inv); });
}

}  // namespace

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  if (h.degree() != g.degree() || !h.is_subgroup_of(g))
    throw InputError("normalizer: H is not a subgroup of G");
  if (h.order() == g.order()) return g;
  std::vector<Perm> members;
  for (const Perm& x : g.elements().elements)
    if (normalizes(x, h, x.inverse())) members.push_back(x);
  // Seed with H's generators so the result visibly contains H.
  std::vector<Perm> candidates = h.generators();
  candidates.insert(candidates.end(), members.begin(), members.end());
  PermGroup n = generate_subgroup(g.degree(), candidates, g.max_order());
  if (n.order() != members.size()) throw ConsistencyError("normalizer is not closed");
  return n;
}

PermGroup sylow2(const PermGroup& g) {
  const std::uint64_t target = two_part(g.order());
  PermGroup p(g.degree(), {}, g.max_order());
  std::vector<Perm> gens;
  while (p.order() < target) {
    // The 2-part of some element of N_G(P) lies outside P whenever P is not
    // yet Sylow; scanning in enumeration order keeps the choice reproducible.
    bool grown = false;
    for (const Perm& y : g.elements().elements) {
      std::uint64_t o = y.order(), odd = o;
      while (odd % 2 == 0) odd /= 2;
      const Perm y2 = y.pow(static_cast<std::int64_t>(odd));
      if (y2.is_identity() || p.contains(y2)) continue;
      if (!normalizes(y2, p, y2.inverse())) continue;
      gens.push_back(y2);
      p = PermGroup(g.degree(), gens, g.max_order());
      grown = true;
      break;
    }
    if (!grown || target % p.order() != 0)
      throw ConsistencyError("Sylow 2-subgroup construction stalled");
  }
  return p;
}

bool is_self_normalizing_sylow2(const PermGroup& g) {
  const PermGroup p = sylow2(g);
  return normalizer(g, p).order() == p.order();
}

}  // namespace cgt

#include "cgt/perm_group.hpp"

#include <algorithm>

#include "cgt/cyclotomic.hpp"
#include "cgt/errors.hpp"

namespace cgt {

std::uint32_t ElementList::index_of(const Perm& p) const {
  auto it = index.find(p);
  if (it == index.end()) throw InputError("permutation is not a group element");
  return it->second;
}

std::vector<std::uint32_t> ElementList::word(std::uint32_t i) const {
  std::vector<std::uint32_t> w;
  while (parent[i] >= 0) {
    w.push_back(static_cast<std::uint32_t>(via[i]));
    i = static_cast<std::uint32_t>(parent[i]);
  }
  return w;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::uint64_t max_order)
    : degree_(degree),
      generators_(std::move(generators)),
      max_order_(max_order),
      cache_(std::make_shared<Cache>()) {
  for (const Perm& g : generators_)
    if (g.degree() != degree_) throw InputError("generator degree does not match group degree");
  schreier_sims();
}

void PermGroup::compute_orbit(std::size_t level) {
  Level& lv = levels_[level];
  lv.where.assign(degree_, -1);
  lv.reps.clear();
  lv.orbit.clear();
  std::vector<const Perm*> gens;
  for (const Perm& s : strong_) {
    bool fixes = true;
    for (std::size_t l = 0; l < level && fixes; ++l)
      fixes = s[levels_[l].base] == levels_[l].base;
    if (fixes) gens.push_back(&s);
  }
  lv.where[lv.base] = 0;
  lv.reps.push_back(Perm::identity(degree_));
  lv.orbit.push_back(lv.base);
  for (std::size_t idx = 0; idx < lv.orbit.size(); ++idx) {
    const Point p = lv.orbit[idx];
    for (const Perm* s : gens) {
      const Point q = (*s)[p];
      if (lv.where[q] >= 0) continue;
      lv.where[q] = static_cast<std::int32_t>(lv.reps.size());
      lv.reps.push_back(*s * lv.reps[lv.where[p]]);
      lv.orbit.push_back(q);
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const Point pt = g[levels_[l].base];
    const std::int32_t w = levels_[l].where[pt];
    if (w < 0) return {std::move(g), l};
    g = levels_[l].reps[w].inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims() {
  for (const Perm& g : generators_)
    if (!g.is_identity()) strong_.push_back(g);
  for (const Perm& s : strong_) {
    bool fixes_base = true;
    for (const Level& lv : levels_) fixes_base = fixes_base && s[lv.base] == lv.base;
    if (fixes_base) levels_.push_back(Level{s.first_moved(), {}, {}, {}});
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) compute_orbit(l);

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    const std::size_t lvl = static_cast<std::size_t>(i);
    std::vector<Perm> gens;
    for (const Perm& s : strong_) {
      bool fixes = true;
      for (std::size_t l = 0; l < lvl && fixes; ++l) fixes = s[levels_[l].base] == levels_[l].base;
      if (fixes) gens.push_back(s);
    }
    for (std::size_t idx = 0; idx < levels_[lvl].orbit.size() && !restart; ++idx) {
      const Point p = levels_[lvl].orbit[idx];
      for (const Perm& s : gens) {
        const Level& lv = levels_[lvl];
        const Perm schreier = lv.reps[lv.where[s[p]]].inverse() * s * lv.reps[lv.where[p]];
        if (schreier.is_identity()) continue;
        auto [h, j] = sift(schreier, lvl + 1);
        if (h.is_identity()) continue;
        if (j == levels_.size()) levels_.push_back(Level{h.first_moved(), {}, {}, {}});
        strong_.push_back(std::move(h));
        for (std::size_t l = lvl + 1; l <= j; ++l) compute_orbit(l);
        i = static_cast<std::ptrdiff_t>(j);
        restart = true;
        break;
      }
    }
    if (!restart) --i;
  }

  Integer order = 1;
  for (const Level& lv : levels_) order *= static_cast<unsigned long>(lv.orbit.size());
  if (order > Integer(static_cast<unsigned long>(max_order_)))
    throw SizeGuardError("group order " + order.get_str() + " exceeds size guard " +
                         std::to_string(max_order_));
  order_ = order.get_ui();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const Level& lv : levels_) b.push_back(lv.base);
  return b;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const Level& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [h, j] = sift(p, 0);
  return j == levels_.size() && h.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Perm& g) { return other.contains(g); });
}

const ElementList& PermGroup::elements() const {
  std::call_once(cache_->once, [this] {
    auto list = std::make_unique<ElementList>();
    list->elements.reserve(order_);
    list->index.reserve(order_ * 2);
    Perm id = Perm::identity(degree_);
    list->index.emplace(id, 0);
    list->elements.push_back(std::move(id));
    list->parent.push_back(-1);
    list->via.push_back(-1);
    for (std::size_t idx = 0; idx < list->elements.size(); ++idx) {
      for (std::size_t g = 0; g < generators_.size(); ++g) {
        Perm next = generators_[g] * list->elements[idx];
        if (list->index.count(next)) continue;
        if (list->elements.size() >= max_order_)
          throw SizeGuardError("element enumeration exceeds size guard");
        list->index.emplace(next, static_cast<std::uint32_t>(list->elements.size()));
        list->elements.push_back(std::move(next));
        list->parent.push_back(static_cast<std::int32_t>(idx));
        list->via.push_back(static_cast<std::int32_t>(g));
      }
    }
    if (list->elements.size() != order_)
      throw ConsistencyError("enumerated element count differs from Schreier-Sims order");
    cache_->elements = std::move(list);
  });
  return *cache_->elements;
}

PermGroup group_from_generators(std::size_t degree, std::vector<Perm> perms,
                                std::uint64_t max_order) {
  for (const Perm& p : perms)
    if (p.degree() != degree)
      throw InputError("generator of degree " + std::to_string(p.degree()) +
                       " in a group of degree " + std::to_string(degree));
  return PermGroup(degree, std::move(perms), max_order);
}

PermGroup generate_subgroup(std::size_t degree, const std::vector<Perm>& candidates,
                            std::uint64_t max_order) {
  PermGroup group(degree, {}, max_order);
  std::vector<Perm> gens;
  for (const Perm& c : candidates) {
    if (group.contains(c)) continue;
    gens.push_back(c);
    group = PermGroup(degree, gens, max_order);
  }
  return group;
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b, std::uint64_t max_order) {
  const std::size_t d = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<Point> img(d);
    for (std::size_t i = 0; i < a.degree(); ++i) img[i] = g[static_cast<Point>(i)];
    for (std::size_t i = 0; i < b.degree(); ++i)
      img[a.degree() + i] = static_cast<Point>(a.degree() + i);
    gens.emplace_back(std::move(img));
  }
  for (const Perm& g : b.generators()) {
    std::vector<Point> img(d);
    for (std::size_t i = 0; i < a.degree(); ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < b.degree(); ++i)
      img[a.degree() + i] = static_cast<Point>(a.degree() + g[static_cast<Point>(i)]);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(d, std::move(gens), max_order);
}

}  // namespace cgt

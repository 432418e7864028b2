#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "cgt/perm.hpp"

namespace cgt {

inline constexpr std::uint64_t kDefaultMaxOrder = 200000;

// All elements of a group, in breadth-first order from the identity over the
// generators. elements[i] = generators[via[i]] * elements[parent[i]].
struct ElementList {
  std::vector<Perm> elements;
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  std::vector<std::int32_t> parent;
  std::vector<std::int32_t> via;

  std::size_t size() const { return elements.size(); }
  // Throws InputError if p is not an element.
  std::uint32_t index_of(const Perm& p) const;
  // Generator indices (g_0, g_1, ...) with elements[i] = g_0 * g_1 * ...
  std::vector<std::uint32_t> word(std::uint32_t i) const;
};

// Permutation group with a base and strong generating set (deterministic
// Schreier-Sims). Immutable after construction.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators,
            std::uint64_t max_order = kDefaultMaxOrder);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t max_order() const { return max_order_; }
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;

  bool contains(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& other) const;

  // Enumerated on first use; shared between copies.
  const ElementList& elements() const;

 private:
  struct Level {
    Point base = 0;
    std::vector<std::int32_t> where;  // point -> index into reps, or -1
    std::vector<Perm> reps;           // reps[where[p]] maps base to p
    std::vector<Point> orbit;
  };
  struct Cache {
    std::once_flag once;
    std::unique_ptr<ElementList> elements;
  };

  void schreier_sims();
  void compute_orbit(std::size_t level);
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t start) const;

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::uint64_t max_order_;
  std::uint64_t order_ = 1;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
  std::shared_ptr<Cache> cache_;
};

// Checks every generator against the degree, then builds the group.
PermGroup group_from_generators(std::size_t degree, std::vector<Perm> perms,
                                std::uint64_t max_order = kDefaultMaxOrder);

// Subgroup generated by the candidates, keeping only those that enlarge it.
PermGroup generate_subgroup(std::size_t degree, const std::vector<Perm>& candidates,
                            std::uint64_t max_order = kDefaultMaxOrder);

// Direct product acting on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b,
                         std::uint64_t max_order = kDefaultMaxOrder);

}  // namespace cgt

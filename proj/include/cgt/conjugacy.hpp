#pragma once

#include <cstdint>
#include <vector>

#include "cgt/perm_group.hpp"

namespace cgt {

// Conjugacy classes of an enumerated group. Class 0 is the identity; each
// representative is the first class member in enumeration order.
class ConjClasses {
 public:
  explicit ConjClasses(const PermGroup& group);

  const PermGroup& group() const { return group_; }
  std::size_t size() const { return reps_.size(); }
  std::uint64_t group_order() const { return group_.order(); }

  const Perm& rep(std::size_t c) const { return reps_[c]; }
  const std::vector<Perm>& reps() const { return reps_; }
  std::uint32_t rep_index(std::size_t c) const { return rep_index_[c]; }
  std::uint64_t class_size(std::size_t c) const { return sizes_[c]; }
  const std::vector<std::uint64_t>& sizes() const { return sizes_; }
  std::uint64_t element_order(std::size_t c) const { return orders_[c]; }
  std::uint64_t centralizer_order(std::size_t c) const { return group_.order() / sizes_[c]; }
  // lcm of element orders
  std::uint64_t exponent() const { return exponent_; }

  std::uint32_t class_of(const Perm& g) const;  // throws InputError for non-members
  std::uint32_t class_of_index(std::uint32_t element) const { return class_of_[element]; }

  // Class of rep(c)^m for every c.
  std::vector<std::uint32_t> power_map(std::int64_t m) const;
  // Class of the inverses.
  const std::vector<std::uint32_t>& inverse_classes() const { return inverse_; }

 private:
  PermGroup group_;
  std::vector<Perm> reps_;
  std::vector<std::uint32_t> rep_index_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> inverse_;
  std::uint64_t exponent_ = 1;
};

inline ConjClasses conjugacy_classes(const PermGroup& g) { return ConjClasses(g); }

}  // namespace cgt

#include "cgt/conjugacy.hpp"

#include <limits>

#include "cgt/cyclotomic.hpp"
#include "cgt/errors.hpp"

namespace cgt {

ConjClasses::ConjClasses(const PermGroup& group) : group_(group) {
  const ElementList& el = group_.elements();
  const std::size_t n = el.size();
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  class_of_.assign(n, kNone);
  std::vector<Perm> gen_inv;
  for (const Perm& s : group_.generators()) gen_inv.push_back(s.inverse());

  std::vector<std::uint32_t> queue;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (class_of_[start] != kNone) continue;
    const auto c = static_cast<std::uint32_t>(reps_.size());
    class_of_[start] = c;
    queue.assign(1, start);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Perm& x = el.elements[queue[qi]];
      for (std::size_t g = 0; g < gen_inv.size(); ++g) {
        const std::uint32_t y = el.index_of(group_.generators()[g] * x * gen_inv[g]);
        if (class_of_[y] != kNone) continue;
        class_of_[y] = c;
        queue.push_back(y);
      }
    }
    reps_.push_back(el.elements[start]);
    rep_index_.push_back(start);
    sizes_.push_back(queue.size());
    orders_.push_back(el.elements[start].order());
    exponent_ = lcm_u64(exponent_, orders_.back());
  }
  inverse_.resize(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c) inverse_[c] = class_of(reps_[c].inverse());
}

std::uint32_t ConjClasses::class_of(const Perm& g) const {
  return class_of_[group_.elements().index_of(g)];
}

std::vector<std::uint32_t> ConjClasses::power_map(std::int64_t m) const {
  std::vector<std::uint32_t> out(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c) out[c] = class_of(reps_[c].pow(m));
  return out;
}

}  // namespace cgt

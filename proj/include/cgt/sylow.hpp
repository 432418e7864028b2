#pragma once

#include "cgt/perm_group.hpp"

namespace cgt {

std::uint64_t two_part(std::uint64_t n);

// {g in G : g s g^-1 in H for each generator s of H}
PermGroup normalizer(const PermGroup& g, const PermGroup& h);

// Grows a 2-subgroup inside its normalizer until it reaches the 2-part of |G|.
PermGroup sylow2(const PermGroup& g);

bool is_self_normalizing_sylow2(const PermGroup& g);

}  // namespace cgt

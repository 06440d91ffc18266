#pragma once

#include <vector>

#include "sdt/group.hpp"

namespace sdt {

/// Smallest subgroup containing `gens`; {e} for empty gens.
Subset closure(const GroupTable& g, const Subset& gens);

/// Contains the identity and is closed under products (finite group, so
/// inverses follow).
bool is_subgroup(const GroupTable& g, const Subset& h);

/// Every subgroup of g, duplicate-free, sorted by (cardinality, bit-lex).
/// Breadth-first over closures of (known subgroup + one element).
std::vector<Subset> enumerate_subgroups(const GroupTable& g, GroupLimits limits = {});

/// g*H; with `check` set, throws NotASubgroup when H is not a subgroup.
Subset left_coset(const GroupTable& g, const Subset& h, Element x, bool check = false);
/// H*g
Subset right_coset(const GroupTable& g, const Subset& h, Element x, bool check = false);

}  // namespace sdt

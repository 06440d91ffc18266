#pragma once

#include <string>
#include <vector>

#include "sdt/group_spec.hpp"

namespace sdt {

struct CatalogueEntry {
  std::string name;
  GroupSpec spec;
};

/// The preset groups used by sweeps, up to `max_order`:
///   cyclic:n,
///   Z_a x Z_b for 2 <= a <= b,
///   dihedral:n for n >= 3,
///   symmetric:3 and symmetric:4,
///   quaternion:n (dicyclic, order 4n) for n >= 2,
///   cyclic:2 x (each nonabelian entry above).
/// Entries are ordered by (order, name).
std::vector<CatalogueEntry> catalogue(std::size_t max_order);

/// Catalogue entries whose group is abelian.
std::vector<CatalogueEntry> abelian_catalogue(std::size_t max_order);

}  // namespace sdt

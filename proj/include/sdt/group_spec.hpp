#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sdt/group.hpp"

namespace sdt {

enum class PresetKind { cyclic, dihedral, symmetric, quaternion, direct_product, from_table };

/// Description of a group before its table is built. Serializes to the
/// group-specification JSON:
///   {"preset":"cyclic","n":12}
///   {"preset":"direct_product","factors":[{...},{...}]}
///   {"table":[[...],...],"labels":[...]}
struct GroupSpec {
  PresetKind kind = PresetKind::cyclic;
  std::size_t n = 1;
  std::vector<GroupSpec> factors;
  RawTable table;
};

/// Inline forms: "cyclic:12", "dihedral:4", "sym:3", "quaternion" (Q8),
/// "quaternion:3", and products joined by 'x' as in "cyclic:2xcyclic:4".
GroupSpec parse_group_inline(std::string_view text);
GroupSpec group_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GroupSpec& spec);

/// Order implied by the spec, computed without building the table.
/// Saturates instead of overflowing.
std::size_t spec_order(const GroupSpec& spec);

GroupTable build_preset(const GroupSpec& spec, GroupLimits limits = {});

/// Comma-separated element indices or labels. A token that names one
/// element as a label and a different one as an index is rejected.
/// The empty string is the empty set.
Subset parse_subset(const GroupTable& g, std::string_view text);

nlohmann::json subset_to_json(const Subset& s);
Subset subset_from_json(const GroupTable& g, const nlohmann::json& j);

}  // namespace sdt

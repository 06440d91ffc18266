#include "sdt/catalogue.hpp"

#include <algorithm>

namespace sdt {

namespace {

GroupSpec preset(PresetKind kind, std::size_t n) {
  GroupSpec s;
  s.kind = kind;
  s.n = n;
  return s;
}

GroupSpec product(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.kind = PresetKind::direct_product;
  s.factors = {std::move(a), std::move(b)};
  return s;
}

std::string spec_name(const GroupSpec& s) {
  switch (s.kind) {
    case PresetKind::cyclic: return "cyclic:" + std::to_string(s.n);
    case PresetKind::dihedral: return "dihedral:" + std::to_string(s.n);
    case PresetKind::symmetric: return "symmetric:" + std::to_string(s.n);
    case PresetKind::quaternion: return "quaternion:" + std::to_string(s.n);
    case PresetKind::direct_product: {
      std::string out;
      for (std::size_t i = 0; i < s.factors.size(); ++i) out += (i ? "x" : "") + spec_name(s.factors[i]);
      return out;
    }
    case PresetKind::from_table: return "table";
  }
  return "?";
}

}  // namespace

std::vector<CatalogueEntry> catalogue(std::size_t max_order) {
  std::vector<GroupSpec> specs;
  for (std::size_t n = 1; n <= max_order; ++n) specs.push_back(preset(PresetKind::cyclic, n));
  for (std::size_t a = 2; a * a <= max_order; ++a) {
    for (std::size_t b = a; a * b <= max_order; ++b) {
      specs.push_back(product(preset(PresetKind::cyclic, a), preset(PresetKind::cyclic, b)));
    }
  }
  std::vector<GroupSpec> nonabelian;
  for (std::size_t n = 3; 2 * n <= max_order; ++n) nonabelian.push_back(preset(PresetKind::dihedral, n));
  for (std::size_t n : {3, 4}) {
    std::size_t order = n == 3 ? 6 : 24;
    if (order <= max_order) nonabelian.push_back(preset(PresetKind::symmetric, n));
  }
  for (std::size_t n = 2; 4 * n <= max_order; ++n) nonabelian.push_back(preset(PresetKind::quaternion, n));
  for (const auto& s : nonabelian) {
    specs.push_back(s);
    if (2 * spec_order(s) <= max_order) specs.push_back(product(preset(PresetKind::cyclic, 2), s));
  }

  std::vector<CatalogueEntry> out;
  for (auto& s : specs) out.push_back({spec_name(s), std::move(s)});
  std::stable_sort(out.begin(), out.end(), [](const CatalogueEntry& x, const CatalogueEntry& y) {
    std::size_t ox = spec_order(x.spec), oy = spec_order(y.spec);
    return ox != oy ? ox < oy : x.name < y.name;
  });
  return out;
}

std::vector<CatalogueEntry> abelian_catalogue(std::size_t max_order) {
  std::vector<CatalogueEntry> out;
  for (auto& e : catalogue(max_order)) {
    if (build_preset(e.spec, {std::max<std::size_t>(max_order, 1)}).is_abelian()) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace sdt

#include "sdt/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "sdt/error.hpp"

namespace sdt {

namespace {

// Multiplies out from `start` on the right by `gens` until stable.
Subset close_from(const GroupTable& g, const Subset& start, std::span<const Element> gens) {
  Subset out = start;
  out.insert(g.identity());
  std::vector<Element> queue = out.elements();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(queue[i], s);
      if (!out.contains(y)) {
        out.insert(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

void check_order(const GroupTable& g, const Subset& s) {
  if (s.order() != g.order()) {
    throw Error(ErrorCode::GroupMismatch, "subset of order-" + std::to_string(s.order()) +
                                              " group used with group of order " + std::to_string(g.order()));
  }
}

}  // namespace

Subset closure(const GroupTable& g, const Subset& gens) {
  check_order(g, gens);
  std::vector<Element> gen_list = gens.elements();
  return close_from(g, g.identity_set(), gen_list);
}

bool is_subgroup(const GroupTable& g, const Subset& h) {
  check_order(g, h);
  if (!h.contains(g.identity())) return false;
  auto elems = h.elements();
  for (Element a : elems)
    for (Element b : elems)
      if (!h.contains(g.mul(a, b))) return false;
  return true;
}

std::vector<Subset> enumerate_subgroups(const GroupTable& g, GroupLimits limits) {
  require_order(g.order(), limits, "group " + g.name());
  struct Node {
    Subset set;
    std::vector<Element> gens;
  };
  std::unordered_set<Subset, SubsetHash> seen;
  std::vector<Node> frontier{{g.identity_set(), {}}};
  seen.insert(frontier.front().set);
  std::vector<Subset> out{frontier.front().set};
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (Element x = 0; x < g.order(); ++x) {
        if (node.set.contains(x)) continue;
        std::vector<Element> gens = node.gens;
        gens.push_back(x);
        Subset h = close_from(g, node.set, gens);
        if (seen.insert(h).second) {
          out.push_back(h);
          next.push_back({std::move(h), std::move(gens)});
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Subset left_coset(const GroupTable& g, const Subset& h, Element x, bool check) {
  check_order(g, h);
  if (check && !is_subgroup(g, h)) throw Error(ErrorCode::NotASubgroup, to_string(h) + " is not a subgroup");
  Subset out = g.empty_set();
  h.for_each([&](Element e) { out.insert(g.mul(x, e)); });
  return out;
}

Subset right_coset(const GroupTable& g, const Subset& h, Element x, bool check) {
  check_order(g, h);
  if (check && !is_subgroup(g, h)) throw Error(ErrorCode::NotASubgroup, to_string(h) + " is not a subgroup");
  Subset out = g.empty_set();
  h.for_each([&](Element e) { out.insert(g.mul(e, x)); });
  return out;
}

}  // namespace sdt

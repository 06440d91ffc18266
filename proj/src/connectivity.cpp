#include "sdt/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "sdt/error.hpp"
#include "sdt/setalg.hpp"
#include "sdt/subgroup.hpp"

namespace sdt {

namespace {

using Scaled = __int128;

// K = num/den with den > 0; den * c(A) = den*|A*S| - num*|A|.
struct ScaledK {
  std::int64_t num;
  std::int64_t den;
  Scaled cost(std::size_t product_size, std::size_t size) const {
    return Scaled(den) * Scaled(product_size) - Scaled(num) * Scaled(size);
  }
};

ScaledK scaled(const Rational& k) {
  auto [n, d] = k.as_int64_pair();
  return {n, d};
}

Rational::Integer to_integer(Scaled v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Rational::Integer hi = static_cast<std::uint64_t>(u >> 64);
  Rational::Integer out = (hi << 64) + static_cast<std::uint64_t>(u);
  return neg ? Rational::Integer(-out) : out;
}

Rational from_scaled(Scaled v, std::int64_t den) { return Rational(to_integer(v), Rational::Integer(den)); }

void check_params(const GroupTable& g, const CostParams& params) {
  if (params.S.order() != g.order()) {
    throw Error(ErrorCode::GroupMismatch, "S belongs to a group of order " + std::to_string(params.S.order()));
  }
  if (params.S.empty()) throw Error(ErrorCode::EmptySet, "cost parameters need a nonempty S");
}

void require_k_below_one(const Rational& k) {
  if (k >= Rational(1)) throw Error(ErrorCode::KOutOfRange, "K = " + k.str() + " must be below 1");
}

// Walk of all sets containing the identity.
struct IdentityScan {
  Scaled best = 0;
  std::size_t min_card = 0;
  std::vector<Subset> minimal;   // identity-containing fragments of least size
  std::vector<Subset> all;       // every identity-containing fragment, capped
  bool all_truncated = false;
  std::size_t visited = 0;
};

IdentityScan scan_identity_sets(const GroupTable& g, const CostParams& params, bool keep_all, std::size_t cap) {
  const std::size_t n = g.order();
  const ScaledK k = scaled(params.K);
  std::vector<Element> others;
  for (Element x = 0; x < n; ++x)
    if (x != g.identity()) others.push_back(x);
  const std::vector<Element> s_elems = params.S.elements();

  std::vector<std::uint32_t> hits(n, 0);
  std::size_t covered = 0;
  std::size_t card = 0;
  std::uint64_t mask = 0;
  auto add = [&](Element a) {
    auto row = g.row(a);
    for (Element s : s_elems)
      if (hits[row[s]]++ == 0) ++covered;
    mask |= std::uint64_t{1} << a;
    ++card;
  };
  auto remove = [&](Element a) {
    auto row = g.row(a);
    for (Element s : s_elems)
      if (--hits[row[s]] == 0) --covered;
    mask &= ~(std::uint64_t{1} << a);
    --card;
  };

  IdentityScan scan;
  add(g.identity());
  scan.best = k.cost(covered, card);
  scan.min_card = card;
  scan.minimal.push_back(Subset::from_mask(n, mask));
  if (keep_all) scan.all.push_back(scan.minimal.back());

  const std::uint64_t steps = std::uint64_t{1} << others.size();
  for (std::uint64_t i = 1; i < steps; ++i) {
    Element flip = others[std::countr_zero(i)];
    if (mask & (std::uint64_t{1} << flip)) remove(flip);
    else add(flip);
    Scaled c = k.cost(covered, card);
    if (c > scan.best) continue;
    if (c < scan.best) {
      scan.best = c;
      scan.min_card = card;
      scan.minimal.clear();
      scan.minimal.push_back(Subset::from_mask(n, mask));
      if (keep_all) {
        scan.all.clear();
        scan.all_truncated = false;
      }
    } else if (card < scan.min_card) {
      scan.min_card = card;
      scan.minimal.clear();
      scan.minimal.push_back(Subset::from_mask(n, mask));
    } else if (card == scan.min_card) {
      scan.minimal.push_back(Subset::from_mask(n, mask));
    }
    if (keep_all) {
      if (scan.all.size() < cap) scan.all.push_back(Subset::from_mask(n, mask));
      else scan.all_truncated = true;
    }
  }
  scan.visited = steps;
  std::sort(scan.minimal.begin(), scan.minimal.end(), canonical_less);
  return scan;
}

std::vector<Subset> all_translates(const GroupTable& g, std::span<const Subset> sets, std::size_t cap, bool* truncated) {
  std::unordered_set<Subset, SubsetHash> seen;
  std::vector<Subset> out;
  for (const Subset& f : sets) {
    for (Element x = 0; x < g.order(); ++x) {
      Subset t = left_translate(g, x, f);
      if (seen.count(t)) continue;
      if (out.size() >= cap) {
        if (truncated) *truncated = true;
        continue;
      }
      seen.insert(t);
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

void check_bruteforce_size(const GroupTable& g, std::size_t max_order) {
  if (g.order() > max_order || g.order() > 63) {
    throw Error(ErrorCode::SizeLimitExceeded, "brute-force connectivity on order " + std::to_string(g.order()) +
                                                  " exceeds the cap " + std::to_string(std::min<std::size_t>(max_order, 63)));
  }
}

}  // namespace

const char* solver_name(Solver s) { return s == Solver::brute_force ? "brute_force" : "subgroup_restricted"; }

Rational cost(const GroupTable& g, const CostParams& params, const Subset& a) {
  if (a.order() != g.order() || params.S.order() != g.order()) {
    throw Error(ErrorCode::GroupMismatch, "cost: subsets from different groups");
  }
  Subset as = product_set(g, a, params.S);
  return Rational(static_cast<std::int64_t>(as.size())) - params.K * Rational(static_cast<std::int64_t>(a.size()));
}

Rational cost_lower_bound(const CostParams& params, const Subset& a) {
  return (Rational(1) - params.K) * Rational(static_cast<std::int64_t>(a.size()));
}

bool check_left_invariance(const GroupTable& g, const CostParams& params, const Subset& a, Element x) {
  return cost(g, params, left_translate(g, x, a)) == cost(g, params, a);
}

SubmodularityReport check_submodularity(const GroupTable& g, const CostParams& params,
                                        const Subset& a, const Subset& b) {
  SubmodularityReport rep;
  rep.lhs = cost(g, params, a | b) + cost(g, params, a & b);
  rep.rhs = cost(g, params, a) + cost(g, params, b);
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

ConnectivityResult connectivity_bruteforce(const GroupTable& g, const CostParams& params,
                                           const BruteForceOptions& options) {
  check_params(g, params);
  check_bruteforce_size(g, options.max_order);
  if (params.K > Rational(1)) {
    throw Error(ErrorCode::KOutOfRange, "K = " + params.K.str() + " above 1 is not supported");
  }
  if (options.classify_atoms) require_k_below_one(params.K);

  IdentityScan scan = scan_identity_sets(g, params, options.collect_fragments, options.fragment_cap);
  ConnectivityResult res;
  res.params = params;
  res.solver = Solver::brute_force;
  res.kappa = from_scaled(scan.best, scaled(params.K).den);
  res.identity_atom = scan.minimal.front();
  res.identity_atom_unique = scan.minimal.size() == 1;
  res.atom_is_subgroup = is_subgroup(g, res.identity_atom);
  res.candidates_examined = scan.visited;
  if (options.collect_fragments) {
    bool truncated = scan.all_truncated;
    res.fragments = all_translates(g, scan.all, options.fragment_cap, &truncated);
    res.fragments_truncated = truncated;
  }
  return res;
}

ConnectivityResult connectivity_subgroup_solver(const GroupTable& g, const CostParams& params,
                                                std::span<const Subset> subgroups) {
  check_params(g, params);
  require_k_below_one(params.K);
  std::vector<Subset> owned;
  if (subgroups.empty()) {
    owned = enumerate_subgroups(g, {std::max(g.order(), kDefaultMaxOrder)});
    subgroups = owned;
  }
  const ScaledK k = scaled(params.K);
  const LeftTranslates translates(g, params.S);

  ConnectivityResult res;
  res.params = params;
  res.solver = Solver::subgroup_restricted;
  res.atom_is_subgroup = true;
  bool have = false;
  Scaled best = 0;
  std::size_t best_card = 0;
  for (const Subset& h : subgroups) {
    // cost(H) >= (1-K)|H|, and the list is sorted by size
    Scaled floor = Scaled(k.den - k.num) * Scaled(h.size());
    if (have && (floor > best || (floor == best && h.size() > best_card))) break;
    ++res.candidates_examined;
    Scaled c = k.cost(translates.product_with(h).size(), h.size());
    if (!have || c < best) {
      have = true;
      best = c;
      best_card = h.size();
      res.identity_atom = h;
      res.identity_atom_unique = true;
    } else if (c == best && h.size() == best_card) {
      res.identity_atom_unique = false;
    }
  }
  res.kappa = from_scaled(best, k.den);
  return res;
}

AtomPropositionReport verify_atom_proposition(const GroupTable& g, const CostParams& params, std::size_t max_order) {
  check_params(g, params);
  check_bruteforce_size(g, max_order);
  require_k_below_one(params.K);
  IdentityScan scan = scan_identity_sets(g, params, false, 0);

  AtomPropositionReport rep;
  rep.params = params;
  rep.kappa = from_scaled(scan.best, scaled(params.K).den);
  rep.identity_atom = scan.minimal.front();
  rep.identity_atom_unique = scan.minimal.size() == 1;
  rep.atom_is_subgroup = is_subgroup(g, rep.identity_atom);
  rep.atoms = all_translates(g, scan.minimal, std::numeric_limits<std::size_t>::max(), nullptr);
  std::vector<Subset> atom_only{rep.identity_atom};
  rep.left_cosets = all_translates(g, atom_only, std::numeric_limits<std::size_t>::max(), nullptr);
  rep.atoms_are_left_cosets = rep.atoms == rep.left_cosets;
  rep.atoms_disjoint = true;
  for (std::size_t i = 0; i < rep.atoms.size() && rep.atoms_disjoint; ++i) {
    for (std::size_t j = i + 1; j < rep.atoms.size(); ++j) {
      if (rep.atoms[i].intersects(rep.atoms[j])) {
        rep.atoms_disjoint = false;
        break;
      }
    }
  }
  rep.holds = rep.atom_is_subgroup && rep.identity_atom_unique && rep.atoms_are_left_cosets && rep.atoms_disjoint;
  return rep;
}

}  // namespace sdt

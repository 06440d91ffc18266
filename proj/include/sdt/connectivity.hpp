#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sdt/group.hpp"
#include "sdt/rational.hpp"

namespace sdt {

inline constexpr std::size_t kDefaultBruteForceOrder = 16;
inline constexpr std::size_t kDefaultFragmentCap = 100000;

/// Parameters of the cost c(A) = |A*S| - K|A|.
struct CostParams {
  Subset S;
  Rational K;
};

enum class Solver { brute_force, subgroup_restricted };
const char* solver_name(Solver s);

struct ConnectivityResult {
  CostParams params;
  Rational kappa;
  Subset identity_atom;
  bool atom_is_subgroup = false;
  /// False when more than one minimum-cardinality fragment contains the
  /// identity; impossible for K < 1.
  bool identity_atom_unique = true;
  std::optional<std::vector<Subset>> fragments;
  bool fragments_truncated = false;
  Solver solver = Solver::brute_force;
  std::size_t candidates_examined = 0;
};

Rational cost(const GroupTable& g, const CostParams& params, const Subset& a);

/// (1 - K)|A|, a lower bound on cost(A) whenever K < 1.
Rational cost_lower_bound(const CostParams& params, const Subset& a);

bool check_left_invariance(const GroupTable& g, const CostParams& params, const Subset& a, Element x);

struct SubmodularityReport {
  Rational lhs;  // c(A u B) + c(A n B)
  Rational rhs;  // c(A) + c(B)
  bool holds = false;
};

SubmodularityReport check_submodularity(const GroupTable& g, const CostParams& params,
                                        const Subset& a, const Subset& b);

struct BruteForceOptions {
  std::size_t max_order = kDefaultBruteForceOrder;
  bool collect_fragments = false;
  std::size_t fragment_cap = kDefaultFragmentCap;
  /// Requires K < 1. With false, K = 1 is accepted.
  bool classify_atoms = true;
};

/// Exact minimum of the cost over all nonempty subsets. Only sets containing
/// the identity are walked (Gray-code order, incremental |A*S|); every other
/// fragment is a left translate of one of those.
ConnectivityResult connectivity_bruteforce(const GroupTable& g, const CostParams& params,
                                           const BruteForceOptions& options = {});

/// Minimum of the cost over subgroups only, for K < 1. The identity atom is a
/// subgroup, so this recovers kappa; the smallest subgroup attaining it is the
/// identity atom. `subgroups` may be passed in sorted canonical order to skip
/// enumeration.
ConnectivityResult connectivity_subgroup_solver(const GroupTable& g, const CostParams& params,
                                                std::span<const Subset> subgroups = {});

struct AtomPropositionReport {
  CostParams params;
  Rational kappa;
  Subset identity_atom;
  bool atom_is_subgroup = false;
  bool identity_atom_unique = false;
  std::vector<Subset> atoms;        // all minimum-cardinality fragments
  std::vector<Subset> left_cosets;  // x * identity_atom, distinct
  bool atoms_are_left_cosets = false;
  bool atoms_disjoint = false;
  bool holds = false;
};

/// Checks on the brute-force inventory that the atoms are exactly the left
/// cosets of one subgroup and pairwise disjoint. Requires K < 1.
AtomPropositionReport verify_atom_proposition(const GroupTable& g, const CostParams& params,
                                              std::size_t max_order = kDefaultBruteForceOrder);

}  // namespace sdt

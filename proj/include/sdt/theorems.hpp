#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdt/connectivity.hpp"
#include "sdt/group.hpp"
#include "sdt/rational.hpp"
#include "sdt/setalg.hpp"

namespace sdt {

inline constexpr std::size_t kDefaultSubsetSearch = 20;

struct KneserReport {
  Subset A, B;
  Subset sum;  // A*B
  Subset H;    // right stabilizer of the sum
  std::int64_t lhs = 0;  // |A*B|
  std::int64_t rhs = 0;  // |A| + |B| - |H|
  bool holds = false;
  bool equality = false;
};

/// Evaluates the Kneser inequality for any group, without the abelian guard.
KneserReport kneser_evaluate(const GroupTable& g, const Subset& a, const Subset& b);

/// Requires an abelian group and nonempty A, B.
KneserReport kneser_check(const GroupTable& g, const Subset& a, const Subset& b);

struct CorollaryReport {
  Subset A;
  Rational epsilon;
  Subset sumset;                 // A + A
  Rational hypothesis_bound;     // (2 - eps)|A|
  Subset H;                      // symmetry group of A + A
  Rational H_bound;              // (2 - eps)|A|
  bool H_bound_ok = false;
  Rational H_lower_bound;        // eps |A|
  bool H_lower_bound_ok = false;
  CoverCertificate cover;
  Rational cover_bound;          // 2/eps - 1
  bool cover_bound_ok = false;
  bool cover_is_exact_quotient = false;  // cover size == |A+A| / |H|
  bool holds = false;
};

/// Abelian G, nonempty A, 0 < eps <= 1, and |A+A| <= (2 - eps)|A|
/// (HypothesisFailed otherwise).
CorollaryReport corollary_kn_check(const GroupTable& g, const Subset& a, const Rational& epsilon);

enum class MainBranch { single_right_coset, multi_coset_cover, violation };
const char* branch_name(MainBranch b);

struct MainTheoremReport {
  Subset A, S;
  Rational epsilon;
  Rational K;               // 1 - eps/2
  bool hypotheses_ok = false;
  Rational product_bound;   // (2 - eps)|S|, compared with |A*S|
  Subset atom;              // identity atom at K
  Rational kappa;
  Rational cost_A;          // c(A), at most (1 - eps/2)|S|
  Rational cost_bound;      // (1 - eps/2)|S|
  std::size_t right_cosets_meeting_S = 0;
  MainBranch branch = MainBranch::violation;
  Rational bound_H_size;    // (2/eps)|S| or |S| depending on branch
  std::optional<CoverCertificate> cover;
  Rational cover_bound;     // 2/eps - 1
  Rational sharp_H_bound;   // (2/eps - 1)|S|
  bool sharp_H_bound_ok = false;
  std::vector<std::string> violations;
};

/// True when |A| >= |S| and |A*S| <= (2 - eps)|S|.
bool main_theorem_hypotheses(const GroupTable& g, const Subset& a, const Subset& s, const Rational& epsilon);

/// Identity atom at K = 1 - eps/2 (subgroup solver), then the branch
/// decision. `subgroups` is an optional precomputed canonical list.
MainTheoremReport theorem_main_check(const GroupTable& g, const Subset& a, const Subset& s,
                                     const Rational& epsilon, std::span<const Subset> subgroups = {});

struct PetridisResult {
  Subset A, S;
  Subset X;
  Rational K;        // |X*S| / |X|
  Rational ratio_A;  // |A*S| / |A|
  std::uint64_t verified_C_count = 0;
  bool exhaustive = false;
};

/// Exact minimizer of |X*S|/|X| over nonempty X in A; ties go to larger X,
/// then bit-lex smaller.
PetridisResult petridis_minimizer(const GroupTable& g, const Subset& a, const Subset& s,
                                  std::size_t max_subset = kDefaultSubsetSearch);

enum class VerifyMode { exhaustive, sampled };
const char* verify_mode_name(VerifyMode m);

struct PetridisVerification {
  PetridisResult result;
  VerifyMode mode = VerifyMode::exhaustive;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::vector<Subset> violations;  // first few C with |CXS| > K|CX|
  std::uint64_t violation_count = 0;
  bool equality_at_identity = false;
  bool holds = false;
};

/// Exhaustive mode needs 2^|G| - 1 <= budget.
PetridisVerification petridis_verify(const GroupTable& g, const PetridisResult& result, VerifyMode mode,
                                     std::uint64_t budget, std::uint64_t seed);

enum class SearchStrategy { exhaustive, random };
const char* strategy_name(SearchStrategy s);

struct KneserSearchReport {
  SearchStrategy strategy = SearchStrategy::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t pairs_examined = 0;
  bool budget_exhausted = false;
  std::vector<KneserReport> findings;  // sorted by (|A|, |B|, bit-lex)
};

/// Pairs (A, B) with |A*B| < |A| + |B| - |right_stabilizer(A*B)| in a
/// nonabelian group. Each finding is recomputed from the table before it is
/// kept.
KneserSearchReport kneser_failure_search(const GroupTable& g, SearchStrategy strategy, std::uint64_t seed,
                                         std::uint64_t budget);

/// Throws EpsilonOutOfRange unless 0 < eps <= 1.
void require_epsilon(const Rational& epsilon);

}  // namespace sdt

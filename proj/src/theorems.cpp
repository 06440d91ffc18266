#include "sdt/theorems.hpp"

#include <algorithm>
#include <bit>

#include "sdt/error.hpp"
#include "sdt/rng.hpp"
#include "sdt/subgroup.hpp"

namespace sdt {

namespace {

Rational card(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

void require_nonempty(const Subset& s, const char* what) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, std::string(what) + " must be nonempty");
}

void require_abelian(const GroupTable& g) {
  if (!g.is_abelian()) throw Error(ErrorCode::NotAbelian, "group " + g.name() + " is not abelian");
}

// Kneser quantities straight from the table, sharing nothing with
// product_set/right_stabilizer.
bool kneser_fails_naive(const GroupTable& g, const Subset& a, const Subset& b) {
  const std::size_t n = g.order();
  std::vector<bool> in_sum(n, false);
  for (Element x = 0; x < n; ++x) {
    if (!a.contains(x)) continue;
    for (Element y = 0; y < n; ++y)
      if (b.contains(y)) in_sum[g.mul(x, y)] = true;
  }
  std::int64_t sum = std::count(in_sum.begin(), in_sum.end(), true);
  std::int64_t stab = 0;
  for (Element h = 0; h < n; ++h) {
    bool fixes = true;
    for (Element t = 0; t < n && fixes; ++t)
      if (in_sum[t] && !in_sum[g.mul(t, h)]) fixes = false;
    if (fixes) ++stab;
  }
  return sum < static_cast<std::int64_t>(a.size() + b.size()) - stab;
}

bool finding_less(const KneserReport& x, const KneserReport& y) {
  if (x.A.size() != y.A.size()) return x.A.size() < y.A.size();
  if (x.B.size() != y.B.size()) return x.B.size() < y.B.size();
  if (x.A != y.A) return bitlex_less(x.A, y.A);
  return bitlex_less(x.B, y.B);
}

// Incremental |C*X| for a set C toggled one element at a time.
class ProductCounter {
 public:
  ProductCounter(const GroupTable& g, const Subset& right) : g_(g), right_(right.elements()), hits_(g.order(), 0) {}
  void add(Element c) {
    auto row = g_.row(c);
    for (Element x : right_)
      if (hits_[row[x]]++ == 0) ++size_;
  }
  void remove(Element c) {
    auto row = g_.row(c);
    for (Element x : right_)
      if (--hits_[row[x]] == 0) --size_;
  }
  std::size_t size() const { return size_; }

 private:
  const GroupTable& g_;
  std::vector<Element> right_;
  std::vector<std::uint32_t> hits_;
  std::size_t size_ = 0;
};

constexpr std::size_t kMaxRecordedViolations = 16;

}  // namespace

void require_epsilon(const Rational& epsilon) {
  if (epsilon <= Rational(0) || epsilon > Rational(1)) {
    throw Error(ErrorCode::EpsilonOutOfRange, "epsilon = " + epsilon.str() + " must lie in (0, 1]");
  }
}

KneserReport kneser_evaluate(const GroupTable& g, const Subset& a, const Subset& b) {
  require_nonempty(a, "A");
  require_nonempty(b, "B");
  KneserReport rep;
  rep.A = a;
  rep.B = b;
  rep.sum = product_set(g, a, b);
  rep.H = right_stabilizer(g, rep.sum);
  rep.lhs = static_cast<std::int64_t>(rep.sum.size());
  rep.rhs = static_cast<std::int64_t>(a.size() + b.size()) - static_cast<std::int64_t>(rep.H.size());
  rep.holds = rep.lhs >= rep.rhs;
  rep.equality = rep.lhs == rep.rhs;
  return rep;
}

KneserReport kneser_check(const GroupTable& g, const Subset& a, const Subset& b) {
  require_abelian(g);
  return kneser_evaluate(g, a, b);
}

CorollaryReport corollary_kn_check(const GroupTable& g, const Subset& a, const Rational& epsilon) {
  require_abelian(g);
  require_nonempty(a, "A");
  require_epsilon(epsilon);
  CorollaryReport rep;
  rep.A = a;
  rep.epsilon = epsilon;
  rep.sumset = product_set(g, a, a);
  rep.hypothesis_bound = (Rational(2) - epsilon) * card(a.size());
  if (card(rep.sumset.size()) > rep.hypothesis_bound) {
    throw Error(ErrorCode::HypothesisFailed, "|A+A| = " + std::to_string(rep.sumset.size()) + " exceeds (2-eps)|A| = " +
                                                 rep.hypothesis_bound.str());
  }
  rep.H = right_stabilizer(g, rep.sumset);
  rep.H_bound = rep.hypothesis_bound;
  rep.H_bound_ok = card(rep.H.size()) <= rep.H_bound;
  rep.H_lower_bound = epsilon * card(a.size());
  rep.H_lower_bound_ok = card(rep.H.size()) >= rep.H_lower_bound;
  rep.cover = coset_cover(g, rep.H, rep.sumset, Side::right);
  rep.cover_bound = Rational(2) / epsilon - Rational(1);
  rep.cover_bound_ok = card(rep.cover.size()) <= rep.cover_bound;
  rep.cover_is_exact_quotient = rep.cover.size() * rep.H.size() == rep.sumset.size();
  rep.holds = rep.H_bound_ok && rep.H_lower_bound_ok && rep.cover_bound_ok && rep.cover_is_exact_quotient;
  return rep;
}

const char* branch_name(MainBranch b) {
  switch (b) {
    case MainBranch::single_right_coset: return "single_right_coset";
    case MainBranch::multi_coset_cover: return "multi_coset_cover";
    case MainBranch::violation: return "violation";
  }
  return "?";
}

bool main_theorem_hypotheses(const GroupTable& g, const Subset& a, const Subset& s, const Rational& epsilon) {
  if (a.size() < s.size()) return false;
  return card(product_set(g, a, s).size()) <= (Rational(2) - epsilon) * card(s.size());
}

MainTheoremReport theorem_main_check(const GroupTable& g, const Subset& a, const Subset& s,
                                     const Rational& epsilon, std::span<const Subset> subgroups) {
  require_nonempty(a, "A");
  require_nonempty(s, "S");
  require_epsilon(epsilon);
  MainTheoremReport rep;
  rep.A = a;
  rep.S = s;
  rep.epsilon = epsilon;
  rep.K = Rational(1) - epsilon / Rational(2);
  rep.product_bound = (Rational(2) - epsilon) * card(s.size());
  const std::size_t as_size = product_set(g, a, s).size();
  if (a.size() < s.size()) {
    throw Error(ErrorCode::HypothesisFailed, "|A| = " + std::to_string(a.size()) + " < |S| = " + std::to_string(s.size()));
  }
  if (card(as_size) > rep.product_bound) {
    throw Error(ErrorCode::HypothesisFailed, "|A*S| = " + std::to_string(as_size) + " exceeds (2-eps)|S| = " +
                                                 rep.product_bound.str());
  }
  rep.hypotheses_ok = true;

  CostParams params{s, rep.K};
  ConnectivityResult conn = connectivity_subgroup_solver(g, params, subgroups);
  rep.atom = conn.identity_atom;
  rep.kappa = conn.kappa;
  rep.cost_A = cost(g, params, a);
  rep.cost_bound = rep.K * card(s.size());
  if (rep.cost_A > rep.cost_bound) rep.violations.push_back("c(A) exceeds (1 - eps/2)|S|");
  if (rep.kappa > rep.cost_A) rep.violations.push_back("kappa exceeds c(A)");
  if (!conn.identity_atom_unique) rep.violations.push_back("identity atom is not unique");

  const Rational h_size = card(rep.atom.size());
  const Rational s_size = card(s.size());
  rep.cover_bound = Rational(2) / epsilon - Rational(1);
  rep.sharp_H_bound = rep.cover_bound * s_size;
  rep.sharp_H_bound_ok = h_size <= rep.sharp_H_bound;

  CoverCertificate cover = coset_cover(g, rep.atom, s, Side::right);
  rep.right_cosets_meeting_S = cover.size();
  if (cover.size() == 1) {
    rep.bound_H_size = (Rational(2) / epsilon) * s_size;
    if (h_size > rep.bound_H_size) rep.violations.push_back("|H| exceeds (2/eps)|S| with S in one right coset");
    rep.branch = rep.violations.empty() ? MainBranch::single_right_coset : MainBranch::violation;
  } else {
    rep.bound_H_size = s_size;
    if (h_size > s_size) rep.violations.push_back("|H| exceeds |S| with S meeting several right cosets");
    if (card(cover.size()) > rep.cover_bound) rep.violations.push_back("right-coset cover of S exceeds 2/eps - 1");
    rep.cover = std::move(cover);
    rep.branch = rep.violations.empty() ? MainBranch::multi_coset_cover : MainBranch::violation;
  }
  return rep;
}

PetridisResult petridis_minimizer(const GroupTable& g, const Subset& a, const Subset& s, std::size_t max_subset) {
  require_nonempty(a, "A");
  require_nonempty(s, "S");
  if (a.size() > max_subset || a.size() > 62) {
    throw Error(ErrorCode::SizeLimitExceeded, "|A| = " + std::to_string(a.size()) + " exceeds the subset-search cap " +
                                                  std::to_string(max_subset));
  }
  const std::vector<Element> elems = a.elements();
  ProductCounter xs(g, s);
  Subset x = g.empty_set();
  Subset best = g.empty_set();
  std::size_t best_prod = 0;
  const std::uint64_t steps = std::uint64_t{1} << elems.size();
  for (std::uint64_t i = 1; i < steps; ++i) {
    Element flip = elems[std::countr_zero(i)];
    if (x.contains(flip)) {
      x.erase(flip);
      xs.remove(flip);
    } else {
      x.insert(flip);
      xs.add(flip);
    }
    if (best.empty()) {
      best = x;
      best_prod = xs.size();
      continue;
    }
    // compare xs/|x| with best_prod/|best|
    std::size_t lhs = xs.size() * best.size();
    std::size_t rhs = best_prod * x.size();
    bool better = lhs < rhs ||
                  (lhs == rhs && (x.size() > best.size() || (x.size() == best.size() && bitlex_less(x, best))));
    if (better) {
      best = x;
      best_prod = xs.size();
    }
  }
  PetridisResult res;
  res.A = a;
  res.S = s;
  res.X = best;
  res.K = card(best_prod) / card(best.size());
  res.ratio_A = card(product_set(g, a, s).size()) / card(a.size());
  return res;
}

const char* verify_mode_name(VerifyMode m) { return m == VerifyMode::exhaustive ? "exhaustive" : "sampled"; }

PetridisVerification petridis_verify(const GroupTable& g, const PetridisResult& result, VerifyMode mode,
                                     std::uint64_t budget, std::uint64_t seed) {
  require_nonempty(result.X, "X");
  PetridisVerification v;
  v.result = result;
  v.mode = mode;
  v.budget = budget;
  v.seed = seed;
  const Subset y = product_set(g, result.X, result.S);
  auto [kn, kd] = result.K.as_int64_pair();
  auto violates = [&](std::size_t cxs, std::size_t cx) {
    return static_cast<__int128>(kd) * cxs > static_cast<__int128>(kn) * cx;
  };
  auto record = [&](const Subset& c) {
    ++v.violation_count;
    if (v.violations.size() < kMaxRecordedViolations) v.violations.push_back(c);
  };
  {
    // C = {e}
    std::size_t cx = result.X.size(), cxs = y.size();
    v.equality_at_identity = static_cast<__int128>(kd) * cxs == static_cast<__int128>(kn) * cx;
  }

  const std::size_t n = g.order();
  std::uint64_t tested = 0;
  if (mode == VerifyMode::exhaustive) {
    if (n > 62 || (std::uint64_t{1} << n) - 1 > budget) {
      throw Error(ErrorCode::SizeLimitExceeded, "exhaustive verification over 2^" + std::to_string(n) +
                                                    " - 1 sets exceeds the budget " + std::to_string(budget));
    }
    ProductCounter cx(g, result.X), cxs(g, y);
    Subset c = g.empty_set();
    const std::uint64_t steps = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < steps; ++i) {
      Element flip = std::countr_zero(i);
      if (c.contains(flip)) {
        c.erase(flip);
        cx.remove(flip);
        cxs.remove(flip);
      } else {
        c.insert(flip);
        cx.add(flip);
        cxs.add(flip);
      }
      ++tested;
      if (violates(cxs.size(), cx.size())) record(c);
    }
  } else {
    Rng rng(seed);
    const LeftTranslates tx(g, result.X);
    const LeftTranslates ty(g, y);
    for (std::uint64_t t = 0; t < budget; ++t) {
      Subset c = rng.nonempty_subset(n);
      ++tested;
      if (violates(ty.product_with(c).size(), tx.product_with(c).size())) record(c);
    }
  }
  v.result.verified_C_count = tested;
  v.result.exhaustive = mode == VerifyMode::exhaustive;
  v.holds = v.violation_count == 0 && v.equality_at_identity;
  return v;
}

const char* strategy_name(SearchStrategy s) { return s == SearchStrategy::exhaustive ? "exhaustive" : "random"; }

KneserSearchReport kneser_failure_search(const GroupTable& g, SearchStrategy strategy, std::uint64_t seed,
                                         std::uint64_t budget) {
  if (g.is_abelian()) throw Error(ErrorCode::NotAbelian, "kneser failure search needs a nonabelian group; " + g.name() + " is abelian");
  KneserSearchReport rep;
  rep.strategy = strategy;
  rep.seed = seed;
  rep.budget = budget;
  const std::size_t n = g.order();
  auto consider = [&](const Subset& a, const Subset& b) {
    ++rep.pairs_examined;
    KneserReport k = kneser_evaluate(g, a, b);
    if (!k.holds && kneser_fails_naive(g, a, b)) rep.findings.push_back(std::move(k));
  };
  if (strategy == SearchStrategy::exhaustive) {
    if (n > 62) throw Error(ErrorCode::SizeLimitExceeded, "exhaustive search needs order <= 62");
    const std::uint64_t sets = (std::uint64_t{1} << n) - 1;
    bool stop = false;
    for (std::uint64_t ma = 1; ma <= sets && !stop; ++ma) {
      Subset a = Subset::from_mask(n, ma);
      for (std::uint64_t mb = 1; mb <= sets; ++mb) {
        if (rep.pairs_examined >= budget) {
          rep.budget_exhausted = true;
          stop = true;
          break;
        }
        consider(a, Subset::from_mask(n, mb));
      }
    }
  } else {
    Rng rng(seed);
    for (std::uint64_t t = 0; t < budget; ++t) {
      Subset a = rng.nonempty_subset(n);
      Subset b = rng.nonempty_subset(n);
      consider(a, b);
    }
    rep.budget_exhausted = true;
  }
  std::sort(rep.findings.begin(), rep.findings.end(), finding_less);
  return rep;
}

}  // namespace sdt

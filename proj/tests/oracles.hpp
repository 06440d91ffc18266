#pragma once

// Brute-force reference implementations for tests. They work on std::set and
// the raw table only and never call the library routines they check.

#include <cstdint>
#include <set>
#include <vector>

#include "sdt/group.hpp"
#include "sdt/rational.hpp"

namespace oracle {

using Set = std::set<std::size_t>;

inline Set from_mask(std::uint64_t mask) {
  Set s;
  for (std::size_t i = 0; i < 64; ++i)
    if ((mask >> i) & 1u) s.insert(i);
  return s;
}

inline Set to_set(const sdt::Subset& s) {
  Set out;
  for (std::size_t i = 0; i < s.order(); ++i)
    if (s.contains(i)) out.insert(i);
  return out;
}

inline sdt::Subset to_subset(std::size_t order, const Set& s) {
  sdt::Subset out(order);
  for (auto x : s) out.insert(x);
  return out;
}

inline Set product(const sdt::GroupTable& g, const Set& a, const Set& b) {
  Set out;
  for (auto x : a)
    for (auto y : b) out.insert(g.mul(x, y));
  return out;
}

inline std::size_t power_identity(const sdt::GroupTable& g) {
  for (std::size_t e = 0; e < g.order(); ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < g.order(); ++a) ok = ok && g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) return e;
  }
  return g.order();
}

inline bool closed_subgroup(const sdt::GroupTable& g, const Set& h) {
  if (h.empty() || !h.count(power_identity(g))) return false;
  for (auto a : h)
    for (auto b : h)
      if (!h.count(g.mul(a, b))) return false;
  return true;
}

/// Every subgroup by testing all 2^n subsets.
inline std::vector<Set> all_subgroups(const sdt::GroupTable& g) {
  std::vector<Set> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.order()); ++m) {
    Set s = from_mask(m);
    if (closed_subgroup(g, s)) out.push_back(s);
  }
  return out;
}

inline sdt::Rational cost(const sdt::GroupTable& g, const Set& s, const sdt::Rational& k, const Set& a) {
  return sdt::Rational(static_cast<std::int64_t>(product(g, a, s).size())) -
         k * sdt::Rational(static_cast<std::int64_t>(a.size()));
}

struct Connectivity {
  sdt::Rational kappa;
  std::vector<Set> fragments;  // all of them
};

/// Minimum cost over all 2^n - 1 nonempty subsets, with every fragment.
inline Connectivity connectivity(const sdt::GroupTable& g, const Set& s, const sdt::Rational& k) {
  Connectivity out;
  bool have = false;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.order()); ++m) {
    Set a = from_mask(m);
    sdt::Rational c = cost(g, s, k, a);
    if (!have || c < out.kappa) {
      have = true;
      out.kappa = c;
      out.fragments.clear();
    }
    if (c == out.kappa) out.fragments.push_back(a);
  }
  return out;
}

inline Set stabilizer_right(const sdt::GroupTable& g, const Set& t) {
  Set out;
  for (std::size_t h = 0; h < g.order(); ++h) {
    Set th;
    for (auto x : t) th.insert(g.mul(x, h));
    if (th == t) out.insert(h);
  }
  return out;
}

inline std::size_t inverse_of(const sdt::GroupTable& g, std::size_t a) {
  std::size_t e = power_identity(g);
  for (std::size_t b = 0; b < g.order(); ++b)
    if (g.mul(a, b) == e) return b;
  return g.order();
}

/// (u*v)(x) = sum over all y of u(y) v(y^-1 x), evaluated pointwise.
inline std::vector<sdt::Rational> convolve(const sdt::GroupTable& g, const std::vector<sdt::Rational>& u,
                                           const std::vector<sdt::Rational>& v) {
  std::vector<sdt::Rational> out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) out[x] += u[y] * v[g.mul(inverse_of(g, y), x)];
  return out;
}

}  // namespace oracle

#include "doctest.h"
#include "oracles.hpp"
#include "sdt/catalogue.hpp"
#include "sdt/convolution.hpp"
#include "sdt/error.hpp"
#include "sdt/rng.hpp"
#include "sdt/setalg.hpp"

using namespace sdt;

namespace {

std::vector<Rational> q(std::initializer_list<Rational> v) { return v; }

GroupFunction random_function(Rng& rng, std::size_t n) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = Rational(static_cast<std::int64_t>(rng.below(7)), static_cast<std::int64_t>(1 + rng.below(4)));
  return GroupFunction(std::move(v));
}

}  // namespace

TEST_CASE("convolution of indicators") {
  GroupTable z4 = cyclic(4);
  GroupFunction u = GroupFunction::indicator(z4.set({0, 1}));
  GroupFunction c = convolve(z4, u, u);
  CHECK(c.values() == q({1, 2, 1, 0}));
  CHECK(c.mass() == 4);
  CHECK(c.support() == z4.set({0, 1, 2}));
}

TEST_CASE("convolution matches the pointwise oracle") {
  Rng rng(77);
  for (const auto& entry : catalogue(12)) {
    GroupTable g = build_preset(entry.spec);
    for (int i = 0; i < 5; ++i) {
      GroupFunction u = random_function(rng, g.order());
      GroupFunction v = random_function(rng, g.order());
      GroupFunction w = random_function(rng, g.order());
      GroupFunction uv = convolve(g, u, v);
      CHECK(uv.values() == oracle::convolve(g, u.values(), v.values()));
      CHECK(uv.mass() == u.mass() * v.mass());
      CHECK(convolve(g, uv, w) == convolve(g, u, convolve(g, v, w)));
      GroupFunction delta = GroupFunction::indicator(g.identity_set());
      CHECK(convolve(g, delta, u) == u);
      CHECK(convolve(g, u, delta) == u);
      // support of 1_A * 1_B is A*B
      Subset a = rng.nonempty_subset(g.order());
      Subset b = rng.nonempty_subset(g.order());
      CHECK(convolve(g, GroupFunction::indicator(a), GroupFunction::indicator(b)).support() == product_set(g, a, b));
    }
  }
}

TEST_CASE("autocorrelation") {
  GroupTable z8 = cyclic(8);
  GroupFunction f = autocorrelation(z8, z8.set({0, 1}));
  CHECK(f.values() == q({1, Rational(1, 2), 0, 0, 0, 0, 0, Rational(1, 2)}));
  CHECK_THROWS_AS(autocorrelation(z8, z8.empty_set()), Error);

  Rng rng(4);
  for (const auto& entry : catalogue(16)) {
    GroupTable g = build_preset(entry.spec);
    for (int i = 0; i < 10; ++i) {
      Subset a = rng.nonempty_subset(g.order());
      GroupFunction af = autocorrelation(g, a);
      const Rational size(static_cast<std::int64_t>(a.size()));
      auto via = oracle::convolve(g, GroupFunction::indicator(a).values(),
                                  GroupFunction::indicator(inverse_set(g, a)).values());
      for (auto& x : via) x /= size;
      CHECK(af.values() == via);
      CHECK(af[g.identity()] == 1);
      CHECK(af.mass() == size);
      CHECK(af.support() == product_set(g, a, inverse_set(g, a)));
      for (const auto& x : af.values()) {
        CHECK(x >= 0);
        CHECK(x <= 1);
      }
      // |A n xA| >= 2|A| - |A^-1 A| at x = a b^-1
      const std::int64_t bound = 2 * static_cast<std::int64_t>(a.size()) -
                                 static_cast<std::int64_t>(product_set(g, inverse_set(g, a), a).size());
      a.for_each([&](Element p) {
        a.for_each([&](Element r) {
          Element x = g.mul(p, g.inv(r));
          auto xa = oracle::product(g, {x}, oracle::to_set(a));
          std::int64_t common = 0;
          for (auto y : xa) common += a.contains(y);
          CHECK(common >= bound);
        });
      });
    }
  }
}

TEST_CASE("gap examples") {
  GroupTable z8 = cyclic(8);
  GapReport r = gap_check(z8, z8.set({0, 1}));
  CHECK(r.inverse_product == z8.set({7, 0, 1}));
  CHECK(r.epsilon_star == Rational(1, 2));
  CHECK(r.min_on_support == Rational(1, 2));
  CHECK(r.gap_holds);
  CHECK(r.forbidden_interval_clean);
  CHECK_FALSE(r.hypothesis_vacuous);

  GapReport h = gap_check(z8, z8.set({0, 2, 4, 6}));
  CHECK(h.epsilon_star == 1);
  CHECK(h.min_on_support == 1);
  CHECK(h.gap_holds);

  GroupTable z16 = cyclic(16);
  GapReport v = gap_check(z16, z16.set({0, 1, 3}));
  CHECK(v.inverse_product.size() == 7);
  CHECK(v.epsilon_star == Rational(-1, 3));
  CHECK(v.hypothesis_vacuous);

  GroupTable s3 = symmetric(3);
  Subset t = s3.set({0, *s3.find_label("(1 2)")});
  CHECK(gap_check(s3, t).epsilon_star == 1);
  CHECK(gap_check(s3, t).gap_holds);
}

TEST_CASE("smoothing") {
  GroupTable z8 = cyclic(8);
  GroupFunction f = autocorrelation(z8, z8.set({0, 1}));
  GroupFunction F = smoothed(z8, z8.set({0, 1}), f);
  CHECK(F.values() ==
        q({Rational(1, 2), Rational(3, 4), Rational(1, 2), Rational(1, 8), 0, 0, 0, Rational(1, 8)}));
  CHECK(F.mass() == 2);
  CHECK(smoothed(z8, z8.identity_set(), f) == f);
  CHECK(smoothed(z8, z8.all(), f) == GroupFunction::constant(8, Rational(1, 4)));
  CHECK(level_set(z8, F, Rational(1, 2)) == z8.set({1}));
  CHECK(level_set(z8, F, Rational(1, 8)) == z8.set({0, 1, 2}));
  CHECK_THROWS_AS(smoothed(z8, z8.empty_set(), f), Error);
  CHECK_THROWS_AS(smoothed(cyclic(6), Subset(6, {0}), f), Error);

  Rng rng(12);
  for (const auto& entry : catalogue(12)) {
    GroupTable g = build_preset(entry.spec);
    for (int i = 0; i < 5; ++i) {
      GroupFunction u = random_function(rng, g.order());
      GroupFunction s = smoothed(g, rng.nonempty_subset(g.order()), u);
      CHECK(s.mass() == u.mass());
      for (const auto& x : s.values()) CHECK(x >= 0);
    }
  }
}

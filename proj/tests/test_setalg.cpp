#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "sdt/catalogue.hpp"
#include "sdt/error.hpp"
#include "sdt/rng.hpp"
#include "sdt/setalg.hpp"
#include "sdt/subgroup.hpp"

using namespace sdt;

TEST_CASE("product set examples") {
  GroupTable z6 = cyclic(6);
  CHECK(product_set(z6, z6.set({0, 1}), z6.set({0, 1})) == z6.set({0, 1, 2}));
  CHECK(product_set(z6, z6.set({0, 3}), z6.set({0, 3})) == z6.set({0, 3}));
  CHECK(product_set(z6, z6.empty_set(), z6.all()).empty());
  CHECK(inverse_set(z6, z6.set({1, 2})) == z6.set({4, 5}));

  GroupTable s3 = symmetric(3);
  Element t = *s3.find_label("(1 2)");
  Element c = *s3.find_label("(1 2 3)");
  Subset ts = s3.set({t});
  Subset cs = s3.set({c});
  CHECK(product_set(s3, ts, cs) == s3.set({s3.mul(t, c)}));
  CHECK(product_set(s3, ts, cs) != product_set(s3, cs, ts));
}

TEST_CASE("doubling ratio") {
  GroupTable z12 = cyclic(12);
  DoublingReport r = doubling_ratio(z12, z12.set({0, 1, 6, 7}));
  CHECK(r.product == z12.set({0, 1, 2, 6, 7, 8}));
  CHECK(r.ratio == Rational(3, 2));
  CHECK(r.epsilon == Rational(1, 2));
  DoublingReport h = doubling_ratio(z12, z12.set({0, 4, 8}));
  CHECK(h.ratio == 1);
  CHECK(h.epsilon == 1);
  CHECK_THROWS_AS(doubling_ratio(z12, z12.empty_set()), Error);
}

TEST_CASE("stabilizers") {
  GroupTable z12 = cyclic(12);
  CHECK(right_stabilizer(z12, z12.set({0, 1, 2, 6, 7, 8})) == z12.set({0, 6}));
  CHECK(right_stabilizer(z12, z12.set({0, 1})) == z12.identity_set());
  CHECK(right_stabilizer(z12, z12.all()) == z12.all());
  try {
    right_stabilizer(z12, z12.empty_set());
    FAIL("expected EmptySet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySet);
  }

  Rng rng(11);
  for (const auto& entry : catalogue(16)) {
    GroupTable g = build_preset(entry.spec);
    for (int i = 0; i < 10; ++i) {
      Subset t = rng.nonempty_subset(g.order());
      Subset h = right_stabilizer(g, t);
      CHECK(oracle::to_set(h) == oracle::stabilizer_right(g, oracle::to_set(t)));
      CHECK(is_subgroup(g, h));
      CHECK(is_subgroup(g, left_stabilizer(g, t)));
      // T is a union of left cosets of its right stabilizer
      CHECK(product_set(g, t, h) == t);
    }
  }
}

TEST_CASE("product set properties") {
  Rng rng(5);
  for (const auto& entry : catalogue(20)) {
    CAPTURE(entry.name);
    GroupTable g = build_preset(entry.spec);
    const std::size_t n = g.order();
    for (int i = 0; i < 25; ++i) {
      Subset a = rng.nonempty_subset(n);
      Subset b = rng.nonempty_subset(n);
      Subset a2 = a | rng.nonempty_subset(n);
      Subset ab = product_set(g, a, b);
      CHECK(oracle::to_set(ab) == oracle::product(g, oracle::to_set(a), oracle::to_set(b)));
      CHECK(ab.size() >= std::max(a.size(), b.size()));
      CHECK(ab.is_subset_of(product_set(g, a2, b)));
      CHECK(inverse_set(g, ab) == product_set(g, inverse_set(g, b), inverse_set(g, a)));
      CHECK(inverse_set(g, inverse_set(g, a)) == a);
      if (g.is_abelian()) CHECK(ab == product_set(g, b, a));
      LeftTranslates rows(g, b);
      CHECK(rows.product_with(a) == ab);
      Element x = rng.below(n);
      CHECK(left_translate(g, x, a).size() == a.size());
      CHECK(product_set(g, left_translate(g, x, a), b) == left_translate(g, x, ab));
      CHECK(product_set(g, a, right_translate(g, b, x)) == right_translate(g, ab, x));
    }
  }
}

TEST_CASE("coset covers") {
  GroupTable z12 = cyclic(12);
  Subset h = z12.set({0, 6});
  CoverCertificate cover = coset_cover(z12, h, z12.set({0, 1, 2, 6, 7, 8}), Side::right);
  CHECK(cover.size() == 3);
  CHECK(cover.representatives == std::vector<Element>{0, 1, 2});
  CHECK(cover.covered == z12.set({0, 1, 2, 6, 7, 8}));
  CHECK(coset_cover(z12, z12.identity_set(), z12.set({1, 5, 9}), Side::left).size() == 3);
  CHECK(coset_cover(z12, z12.set({0, 4, 8}), z12.all(), Side::left).size() == 4);

  GroupTable s3 = symmetric(3);
  Subset t = s3.set({0, *s3.find_label("(1 2)")});
  REQUIRE(is_subgroup(s3, t));
  Element c = *s3.find_label("(1 2 3)");
  CHECK(coset(s3, t, c, Side::left) == left_coset(s3, t, c));
  CHECK(coset(s3, t, c, Side::right) == right_coset(s3, t, c));

  CHECK_THROWS_AS(coset_cover(z12, z12.set({0, 1}), z12.set({3}), Side::left), Error);
  CHECK_THROWS_AS(coset_cover(z12, h, z12.empty_set(), Side::left), Error);

  // representatives are minimal in their coset, the cover contains the target
  Rng rng(3);
  for (const auto& entry : catalogue(16)) {
    GroupTable g = build_preset(entry.spec);
    auto subs = enumerate_subgroups(g);
    for (int i = 0; i < 10; ++i) {
      const Subset& sub = subs[rng.below(subs.size())];
      Subset target = rng.nonempty_subset(g.order());
      for (Side side : {Side::left, Side::right}) {
        CoverCertificate cc = coset_cover(g, sub, target, side);
        CHECK(cc.covered == target);
        CHECK(std::is_sorted(cc.representatives.begin(), cc.representatives.end()));
        Subset uni = g.empty_set();
        for (Element r : cc.representatives) {
          Subset block = coset(g, sub, r, side);
          CHECK(block.front() == r);
          CHECK(block.intersects(target));
          CHECK_FALSE(block.intersects(uni));
          uni |= block;
        }
        CHECK(target.is_subset_of(uni));
      }
    }
  }
}

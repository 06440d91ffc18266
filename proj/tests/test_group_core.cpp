#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "sdt/catalogue.hpp"
#include "sdt/error.hpp"
#include "sdt/group.hpp"
#include "sdt/group_spec.hpp"
#include "sdt/rng.hpp"
#include "sdt/setalg.hpp"
#include "sdt/subgroup.hpp"

using namespace sdt;

namespace {

void check_axioms(const GroupTable& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    REQUIRE(g.inv(a) < n);
    CHECK(g.mul(a, g.inv(a)) == g.identity());
    CHECK(g.inv(g.inv(a)) == a);
    CHECK(g.mul(g.identity(), a) == a);
    CHECK(g.mul(a, g.identity()) == a);
    for (Element b = 0; b < n; ++b) REQUIRE(g.mul(a, b) < n);
  }
  CHECK(is_associative(g));
  bool commutes = true;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) commutes = commutes && g.mul(a, b) == g.mul(b, a);
  CHECK(g.is_abelian() == commutes);
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  std::sort(labels.begin(), labels.end());
  CHECK(std::adjacent_find(labels.begin(), labels.end()) == labels.end());
}

RawTable z3_table() { return {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {}}; }

}  // namespace

TEST_CASE("presets satisfy the group axioms") {
  for (const auto& entry : catalogue(24)) {
    CAPTURE(entry.name);
    GroupTable g = build_preset(entry.spec);
    CHECK(g.identity() == 0);
    CHECK(g.order() == spec_order(entry.spec));
    check_axioms(g);
  }
  check_axioms(symmetric(4));
  check_axioms(quaternion(2));
}

TEST_CASE("preset examples") {
  GroupTable z6 = cyclic(6);
  CHECK(z6.order() == 6);
  CHECK(z6.identity() == 0);
  CHECK(z6.inv(1) == 5);
  CHECK(z6.is_abelian());

  GroupTable s3 = symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.label(0) == "()");
  CHECK(s3.find_label("(1 2 3)").has_value());

  CHECK_FALSE(quaternion(2).is_abelian());
  CHECK(quaternion(2).order() == 8);
  CHECK(dihedral(4).order() == 8);
  CHECK(dihedral(2).is_abelian());
  CHECK(dihedral(1).order() == 2);
  CHECK(cyclic(1).order() == 1);
  CHECK(symmetric(1).order() == 1);

  // Q8 has a single element of order 2
  GroupTable q8 = quaternion(2);
  int involutions = 0;
  for (Element a = 1; a < 8; ++a) involutions += q8.mul(a, a) == q8.identity();
  CHECK(involutions == 1);
}

TEST_CASE("from_table accepts Z_2 and rejects broken tables") {
  GroupTable z2 = GroupTable::from_table({{{0, 1}, {1, 0}}, {}});
  CHECK(z2.order() == 2);
  CHECK(z2.mul(1, 1) == 0);
  CHECK(z2.label(1) == "1");

  CHECK(validate({{{0, 1}, {1, 0}}, {}}).ok());

  ValidationReport closure = validate({{{0, 1}, {1, 2}}, {}});
  REQUIRE(closure.closure_witness.has_value());
  CHECK(closure.closure_witness->first == 1);
  CHECK(closure.closure_witness->second == 1);
  CHECK_THROWS_AS(GroupTable::from_table({{{0, 1}, {1, 2}}, {}}), Error);

  // Z_3 with mul(1,2) perturbed; each row/column still hits 0 so only
  // axioms beyond closure can catch it.
  RawTable broken = z3_table();
  broken.mul[1][2] = 1;
  ValidationReport rep = validate(broken);
  CHECK_FALSE(rep.ok());
  // independent exhaustive triple check agrees there is a failing triple
  bool failing = false;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        failing = failing || broken.mul[broken.mul[a][b]][c] != broken.mul[a][broken.mul[b][c]];
  CHECK(failing);
  REQUIRE(rep.associativity_witness.has_value());
  auto [a, b, c] = *rep.associativity_witness;
  CHECK(broken.mul[broken.mul[a][b]][c] != broken.mul[a][broken.mul[b][c]]);

  try {
    GroupTable::from_table(broken);
    FAIL("expected InvalidTable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidTable);
  }

  CHECK(validate({{{0, 1}}, {}}).shape_error.has_value());
  CHECK(validate({{{0, 1}, {1, 0}}, {"a", "a"}}).label_witness == std::optional<std::string>("a"));
  // no identity: constant table
  ValidationReport no_id = validate({{{0, 0}, {0, 0}}, {}});
  CHECK_FALSE(no_id.identity_found);
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(cyclic(65), Error);
  CHECK_NOTHROW(cyclic(65, {128}));
  try {
    symmetric(5);
    FAIL("expected SizeLimitExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeLimitExceeded);
  }
  CHECK(symmetric(5, {120}).order() == 120);
}

TEST_CASE("multi-word subsets above 64 elements") {
  GroupTable z100 = cyclic(100, {128});
  Subset a = Subset(100, {0, 63, 64, 99});
  CHECK(a.size() == 4);
  Subset shifted = left_translate(z100, 1, a);
  CHECK(shifted == Subset(100, {1, 64, 65, 0}));
  CHECK(closure(z100, Subset(100, {10})).size() == 10);
  CHECK(Subset::full(100).size() == 100);
}

TEST_CASE("closure") {
  GroupTable z6 = cyclic(6);
  CHECK(closure(z6, z6.empty_set()) == z6.identity_set());
  CHECK(closure(z6, z6.set({2})) == z6.set({0, 2, 4}));

  GroupTable s3 = symmetric(3);
  Element transposition = *s3.find_label("(1 2)");
  Element three_cycle = *s3.find_label("(1 2 3)");
  CHECK(closure(s3, s3.set({transposition, three_cycle})) == s3.all());

  // idempotent and monotone on random inputs
  Rng rng(7);
  for (const auto& entry : catalogue(16)) {
    GroupTable g = build_preset(entry.spec);
    for (int t = 0; t < 20; ++t) {
      Subset x = rng.nonempty_subset(g.order()) & rng.nonempty_subset(g.order());
      Subset y = x | rng.nonempty_subset(g.order());
      Subset cx = closure(g, x);
      CHECK(closure(g, cx) == cx);
      CHECK(cx.is_subset_of(closure(g, y)));
      CHECK(is_subgroup(g, cx));
      CHECK(oracle::closed_subgroup(g, oracle::to_set(cx)));
    }
  }
}

TEST_CASE("enumerate_subgroups matches all-subsets brute force") {
  CHECK(enumerate_subgroups(cyclic(6)).size() == 4);
  std::vector<std::size_t> orders;
  for (const auto& h : enumerate_subgroups(cyclic(6))) orders.push_back(h.size());
  CHECK(orders == std::vector<std::size_t>{1, 2, 3, 6});
  CHECK(enumerate_subgroups(cyclic(7)).size() == 2);
  CHECK(enumerate_subgroups(cyclic(13)).size() == 2);
  CHECK(enumerate_subgroups(dihedral(4)).size() == 10);

  for (const auto& entry : catalogue(16)) {
    CAPTURE(entry.name);
    GroupTable g = build_preset(entry.spec);
    auto subs = enumerate_subgroups(g);
    auto expected = oracle::all_subgroups(g);
    REQUIRE(subs.size() == expected.size());
    std::vector<oracle::Set> got;
    for (const auto& h : subs) {
      got.push_back(oracle::to_set(h));
      CHECK(g.order() % h.size() == 0);
    }
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
    CHECK(subs.front() == g.identity_set());
    CHECK(subs.back() == g.all());
    CHECK(std::is_sorted(subs.begin(), subs.end(), canonical_less));
  }
}

TEST_CASE("cosets") {
  GroupTable z6 = cyclic(6);
  Subset h = z6.set({0, 3});
  CHECK(left_coset(z6, h, 0) == h);
  CHECK(left_coset(z6, h, 1) == z6.set({1, 4}));
  CHECK(right_coset(z6, h, 1) == z6.set({1, 4}));
  CHECK_THROWS_AS(left_coset(z6, z6.set({0, 1}), 1, true), Error);

  GroupTable s3 = symmetric(3);
  Subset t = closure(s3, s3.set({*s3.find_label("(1 2)")}));
  Element c = *s3.find_label("(1 2 3)");
  CHECK(left_coset(s3, t, c) != right_coset(s3, t, c));
  CHECK(left_coset(s3, t, c).size() == 2);

  // cosets partition G into |G|/|H| blocks, on each side
  for (const auto& entry : catalogue(16)) {
    GroupTable g = build_preset(entry.spec);
    for (const auto& sub : enumerate_subgroups(g)) {
      for (bool left : {true, false}) {
        std::vector<Subset> blocks;
        Subset seen = g.empty_set();
        for (Element x = 0; x < g.order(); ++x) {
          Subset b = left ? left_coset(g, sub, x) : right_coset(g, sub, x);
          CHECK(b.size() == sub.size());
          if (!seen.intersects(b)) {
            blocks.push_back(b);
            seen |= b;
          } else {
            CHECK(b.is_subset_of(seen));
          }
        }
        CHECK(seen == g.all());
        CHECK(blocks.size() * sub.size() == g.order());
      }
    }
  }
}

TEST_CASE("group spec parsing") {
  GroupSpec s = parse_group_inline("cyclic:12");
  CHECK(s.kind == PresetKind::cyclic);
  CHECK(s.n == 12);
  CHECK(spec_order(parse_group_inline("sym:7")) == 5040);
  CHECK(spec_order(parse_group_inline("quaternion")) == 8);
  GroupSpec prod = parse_group_inline("cyclic:2xdihedral:3");
  CHECK(prod.kind == PresetKind::direct_product);
  CHECK(build_preset(prod).order() == 12);
  CHECK_FALSE(build_preset(prod).is_abelian());

  auto j = nlohmann::json::parse(R"({"preset":"direct_product","factors":[{"preset":"cyclic","n":2},{"preset":"cyclic","n":3}]})");
  GroupTable z2z3 = build_preset(group_spec_from_json(j));
  CHECK(z2z3.order() == 6);
  CHECK(z2z3.is_abelian());
  CHECK(to_json(group_spec_from_json(j)) == j);

  auto t = nlohmann::json::parse(R"({"table":[[0,1],[1,0]],"labels":["e","t"]})");
  GroupTable z2 = build_preset(group_spec_from_json(t));
  CHECK(parse_subset(z2, "t") == z2.set({1}));
  CHECK(parse_subset(z2, "0, t") == z2.all());

  auto bad = nlohmann::json::parse(R"({"table":[[0,1],[1,1]]})");
  CHECK_THROWS_AS(build_preset(group_spec_from_json(bad)), Error);
  CHECK_THROWS_AS(parse_group_inline("tetra:3"), Error);
}

TEST_CASE("subset literals") {
  GroupTable s3 = symmetric(3);
  CHECK(parse_subset(s3, "0,1,2") == s3.set({0, 1, 2}));
  CHECK(parse_subset(s3, "(),(1 2)") == s3.set({0, *s3.find_label("(1 2)")}));
  CHECK(parse_subset(s3, "").empty());
  CHECK_THROWS_AS(parse_subset(s3, "9"), Error);
  CHECK_THROWS_AS(parse_subset(s3, "0,,1"), Error);

  // label "1" names element 0 and index 1 names element 1: ambiguous
  GroupTable swapped = GroupTable::from_table({{{0, 1}, {1, 0}}, {"1", "0"}});
  CHECK_THROWS_AS(parse_subset(swapped, "1"), Error);
}

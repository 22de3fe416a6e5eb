#include <doctest.h>

#include <numeric>
#include <set>

#include "extdiff/error.hpp"
#include "extdiff/group.hpp"
#include "extdiff/multiset.hpp"

using namespace extdiff;

namespace {

std::vector<Element> els(std::initializer_list<Element> xs) { return std::vector<Element>(xs); }

void check_latin_and_identity(const Group& g) {
  const auto v = g.order();
  for (Element a = 0; a < v; ++a) {
    std::set<Element> row, col;
    for (Element b = 0; b < v; ++b) {
      row.insert(g.op(a, b));
      col.insert(g.op(b, a));
    }
    CHECK(row.size() == v);
    CHECK(col.size() == v);
    CHECK(g.op(g.identity(), a) == a);
    CHECK(g.op(a, g.identity()) == a);
    CHECK(g.op(a, g.inverse(a)) == g.identity());
  }
}

void check_assoc(const Group& g) {
  const auto v = g.order();
  for (Element a = 0; a < v; ++a)
    for (Element b = 0; b < v; ++b)
      for (Element c = 0; c < v; ++c) REQUIRE(g.op(g.op(a, b), c) == g.op(a, g.op(b, c)));
}

}  // namespace

TEST_CASE("cyclic arithmetic") {
  Group g(GroupSpec::cyclic(10));
  CHECK(g.order() == 10);
  CHECK(g.op(3, 9) == 2);
  CHECK(g.inverse(3) == 7);
  CHECK(g.difference(1, 4) == 7);
  CHECK(g.is_abelian());
  check_latin_and_identity(g);
}

TEST_CASE("dihedral of order 8") {
  Group g(GroupSpec::dihedral(4));
  CHECK(g.order() == 8);
  const Element alpha = 2, beta = 1;
  const Element alpha3beta = 7;
  CHECK(g.op(beta, alpha) == alpha3beta);
  CHECK(g.op(alpha, beta) == 3);
  CHECK_FALSE(g.is_abelian());
  CHECK(g.element_name(alpha3beta) == "a^3b");
  CHECK(g.parse_element("a^3b") == alpha3beta);
  check_latin_and_identity(g);
  check_assoc(g);
}

TEST_CASE("quaternion group") {
  Group g(GroupSpec::quaternion8());
  auto e = [&](const char* n) { return *g.parse_element(n); };
  CHECK(g.op(e("i"), e("j")) == e("k"));
  CHECK(g.op(e("j"), e("i")) == e("-k"));
  CHECK(g.op(e("i"), e("i")) == e("-1"));
  CHECK(g.op(e("k"), e("i")) == e("j"));
  CHECK(g.inverse(e("i")) == e("-i"));
  check_latin_and_identity(g);
  check_assoc(g);
}

TEST_CASE("direct product uses mixed radix") {
  Group g(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(3)}));
  CHECK(g.order() == 6);
  // (1,2) + (1,2) = (0,1)
  CHECK(g.op(5, 5) == 1);
  CHECK(g.element_name(5) == "(1,2)");
  check_latin_and_identity(g);
  check_assoc(g);

  Group k4k4(GroupSpec::product({GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}),
                                 GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)})}));
  CHECK(k4k4.order() == 16);
  check_latin_and_identity(k4k4);
}

TEST_CASE("spec text round trip") {
  for (const char* s : {"cyclic:30", "dihedral:4", "q8", "product(cyclic:2,product(cyclic:3,q8))"}) {
    CHECK(to_string(parse_group_spec(s)) == s);
  }
  CHECK_THROWS_AS(Group(parse_group_spec("cyclic:0")), StructureError);
  CHECK_THROWS_AS(parse_group_spec("sym:3"), UsageError);
}

TEST_CASE("table groups are validated") {
  // Z_3 as a table
  Group z3(GroupSpec::table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
  CHECK(z3.op(2, 2) == 1);

  CHECK_THROWS_AS(Group(GroupSpec::table({{0, 1}, {1, 1}})), StructureError);
  try {
    Group(GroupSpec::table({{0, 1}, {1, 1}}));
  } catch (const StructureError& e) {
    CHECK(std::string(e.what()).find("Latin") != std::string::npos);
  }
  // Latin square with identity 0 that is not associative (order 5 loop)
  std::vector<std::vector<Element>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    Group bad(GroupSpec::table(loop));
    FAIL("non-associative table accepted");
  } catch (const StructureError& e) {
    CHECK(std::string(e.what()).find("associativ") != std::string::npos);
  }
}

TEST_CASE("subgroup generation") {
  Group z15(GroupSpec::cyclic(15));
  CHECK(subgroup_generated(z15, els({3})).elements == els({0, 3, 6, 9, 12}));
  CHECK(subgroup_generated(z15, els({0})).elements == els({0}));
  Group q8(GroupSpec::quaternion8());
  auto h = subgroup_generated(q8, els({*q8.parse_element("i")}));
  CHECK(h.elements == els({0, 1, 2, 3}));
  Group d8(GroupSpec::dihedral(4));
  CHECK(subgroup_generated(d8, els({1, 2})).order() == 8);
}

TEST_CASE("product sets") {
  Group d8(GroupSpec::dihedral(4));
  Subgroup h{d8, els({0, 1, 4, 5}), {}};
  Subgroup k{d8, els({0, 3, 4, 7}), {}};
  auto hk = product_set(h, k);
  CHECK(hk.is_all_of_group);
  CHECK(hk.intersection_size == 2);
  CHECK(hk.elements.size() == 8);

  auto hh = product_set(h, h);
  CHECK(hh.elements == h.elements);
  CHECK(hh.intersection_size == 4);

  Group z30(GroupSpec::cyclic(30));
  auto h6 = subgroup_generated(z30, els({6}));
  auto h10 = subgroup_generated(z30, els({10}));
  auto p = product_set(h6, h10);
  std::set<Element> sums;
  for (int a = 0; a < 30; a += 6)
    for (int b = 0; b < 30; b += 10) sums.insert((a + b) % 30);
  CHECK(p.elements == std::vector<Element>(sums.begin(), sums.end()));
  CHECK(p.elements == subgroup_generated(z30, els({2})).elements);
  CHECK(p.intersection_size == 1);
  CHECK_FALSE(p.is_all_of_group);

  Group z10(GroupSpec::cyclic(10));
  CHECK_THROWS_AS(product_set(h6, subgroup_generated(z10, els({2}))), UsageError);
}

TEST_CASE("product set order law and coprime indices") {
  Group z60(GroupSpec::cyclic(60));
  std::vector<Subgroup> subs;
  for (Element d = 1; d <= 60; ++d)
    if (60 % d == 0) subs.push_back(subgroup_generated(z60, els({d % 60})));
  for (const auto& h : subs)
    for (const auto& k : subs) {
      auto p = product_set(h, k);
      CHECK(p.elements.size() * p.intersection_size == h.order() * k.order());
      const auto ih = 60 / h.order(), ik = 60 / k.order();
      if (std::gcd(ih, ik) == 1) CHECK(p.is_all_of_group);
    }
  Group d12(GroupSpec::dihedral(6));
  auto subs3 = all_subgroups_of_order(d12, 2);
  auto subs6 = all_subgroups_of_order(d12, 6);
  for (const auto& h : subs3)
    for (const auto& k : subs6) {
      auto p = product_set(h, k);
      CHECK(p.elements.size() * p.intersection_size == h.order() * k.order());
    }
}

TEST_CASE("cosets and coset unions") {
  Group z15(GroupSpec::cyclic(15));
  auto h = subgroup_generated(z15, els({5}));
  CHECK(coset(h, 2) == els({2, 7, 12}));
  auto u = coset_union(h, els({0, 1, 2}));
  CHECK(u.elements() == els({0, 1, 2, 5, 6, 7, 10, 11, 12}));
  CHECK(coset_union(h, els({0})).elements() == h.elements);
  CHECK_THROWS_AS(coset_union(h, els({0, 5})), ValidationError);

  Group z24(GroupSpec::cyclic(24));
  auto h4 = subgroup_generated(z24, els({4}));
  CHECK(coset_union(h4, els({0, 1})).elements() == els({0, 1, 4, 5, 8, 9, 12, 13, 16, 17, 20, 21}));

  for (Element r = 1; r <= 4; ++r) {
    std::vector<Element> reps(r);
    std::iota(reps.begin(), reps.end(), 0);
    CHECK(coset_union(h4, reps).size() == r * h4.order());
  }
}

TEST_CASE("partitions") {
  Group k4(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}));
  auto subs = all_subgroups_of_order(k4, 2);
  CHECK(subs.size() == 3);
  CHECK(is_partition(k4, subs));
  std::vector<Subgroup> whole{subgroup_generated(k4, els({1, 2}))};
  CHECK(is_partition(k4, whole));

  Group z30(GroupSpec::cyclic(30));
  std::vector<Subgroup> two{subgroup_generated(z30, els({6})), subgroup_generated(z30, els({10}))};
  CHECK_FALSE(is_partition(z30, two));
}

TEST_CASE("subgroup enumeration") {
  Group z3z3(GroupSpec::product({GroupSpec::cyclic(3), GroupSpec::cyclic(3)}));
  CHECK(all_subgroups_of_order(z3z3, 3).size() == 4);
  CHECK(all_subgroups_of_order(z3z3, 1).size() == 1);
  Group q8(GroupSpec::quaternion8());
  CHECK(all_subgroups_of_order(q8, 4).size() == 3);
  CHECK(all_subgroups_of_order(q8, 2).size() == 1);
  Group d8(GroupSpec::dihedral(4));
  CHECK(all_subgroups_of_order(d8, 2).size() == 5);
  CHECK(all_subgroups_of_order(d8, 4).size() == 3);
  Group z12(GroupSpec::cyclic(12));
  CHECK(all_subgroups_of_order(z12, 5).empty());
  Group big(GroupSpec::cyclic(300));
  CHECK_THROWS_AS(all_subgroups_of_order(big, 3), CapacityError);
  CHECK(all_subgroups_of_order(big, 3, 512).size() == 1);
}

TEST_CASE("quotients order cosets by smallest element") {
  Group z15(GroupSpec::cyclic(15));
  auto h = subgroup_generated(z15, els({5}));
  REQUIRE(is_normal(h));
  auto q = quotient(h);
  CHECK(q.group.order() == 5);
  CHECK(q.representatives == els({0, 1, 2, 3, 4}));
  CHECK(q.coset_index[7] == 2);
  CHECK(q.group.op(3, 4) == 2);

  Group d8(GroupSpec::dihedral(4));
  Subgroup refl{d8, els({0, 1}), {}};
  CHECK_FALSE(is_normal(refl));
  CHECK_THROWS(quotient(refl));
}

#include <doctest.h>

#include <numeric>
#include <set>

#include "extdiff/certificate.hpp"
#include "extdiff/constructions.hpp"
#include "extdiff/difference.hpp"
#include "extdiff/error.hpp"
#include "oracle.hpp"

using namespace extdiff;

namespace {

std::vector<int> ints(const GMultiset& a) {
  std::vector<int> out;
  for (Element e : a.elements()) out.push_back(static_cast<int>(e));
  return out;
}

std::vector<Element> support(const GMultiset& a) { return a.support(); }

// lambda matrix of a cyclic family by brute force; -1 where a pair is not constant
std::vector<std::vector<long long>> cyclic_lambdas(const Family& f) {
  const int v = static_cast<int>(f.group().order());
  const std::size_t m = f.size();
  std::vector<std::vector<long long>> out(m, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) out[i][j] = oracle::constant_value(oracle::cyclic_difference(ints(f.member(i)), ints(f.member(j)), v));
  return out;
}

std::vector<std::vector<long long>> table_lambdas(const Family& f, const std::vector<std::vector<int>>& t) {
  const auto inv = oracle::inverses(t);
  const std::size_t m = f.size();
  std::vector<std::vector<long long>> out(m, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) out[i][j] = oracle::constant_value(oracle::table_difference(ints(f.member(i)), ints(f.member(j)), t, inv));
  return out;
}

std::string bits(const GMultiset& a) { return multiset_to_sequence(a).to_text(); }

void check_claim(const Construction& c) {
  const Certificate cert = classify_family(c.family);
  CHECK_MESSAGE(c.expected.matches(cert), c.expected.mismatch(cert));
}

}  // namespace

TEST_CASE("modular two-set family with explicit tables") {
  ModularTables t;
  t.a = 4;
  t.b = 5;
  t.s = {1, 3};
  t.r = {{0, 1, 3}, {0, 2, 3}, {0, 1, 2}, {1, 2, 3}, {0, 2, 3}};
  auto c = build_modular_two_set(t);
  CHECK(support(c.family.member(0)) == std::vector<Element>{1, 3, 6, 8, 11, 13, 16, 18});
  CHECK(bits(c.family.member(0)) == "01010010100101001010");
  CHECK(bits(c.family.member(1)) == "11101101100111111011");
  const auto lam = cyclic_lambdas(c.family);
  CHECK(lam[0][1] == 6);
  CHECK(lam[1][0] == 6);
  CHECK(c.expected.labels.at(Label::ND_GPSEDF) == std::vector<Count>{0, 6, 6, 0});
  CHECK(c.expected.sizes == std::vector<Count>{8, 15});
  check_claim(c);
}

TEST_CASE("modular two-set sweep with default tables") {
  for (Int a = 2; a <= 6; ++a)
    for (Int b = 2; b <= 6; ++b)
      for (Int k1 = 1; k1 < b; ++k1)
        for (Int k2 = 1; k2 < a; ++k2) {
          auto c = build_modular_two_set(default_modular_tables(a, b, k1, k2));
          const auto lam = cyclic_lambdas(c.family);
          CHECK(lam[0][1] == static_cast<long long>(k1 * k2));
          CHECK(lam[1][0] == static_cast<long long>(k1 * k2));
          CHECK(c.family.member(0).size() == k1 * a);
          CHECK(c.family.member(1).size() == k2 * b);
          check_claim(c);
        }
  CHECK_THROWS_AS(build_modular_two_set(default_modular_tables(4, 5, 5, 1)), ParameterError);
  CHECK_THROWS_AS(build_modular_two_set(default_modular_tables(4, 5, 1, 4)), ParameterError);
  auto bad = default_modular_tables(4, 5, 2, 2);
  bad.r[2] = {1, 1};
  CHECK_THROWS_AS(build_modular_two_set(bad), ParameterError);
}

TEST_CASE("block chain sweep") {
  int built = 0;
  for (Int c0 = 2; c0 <= 4; ++c0)
    for (Int c1 = 2; c1 <= 4; ++c1)
      for (Int c2 = 1; c2 <= 3; ++c2)
        for (Int d1 = 1; d1 < c0; ++d1)
          for (Int d2 = 1; d2 < c1; ++d2) {
            auto c = build_block_by_factors({c0, c1, c2}, {d1, d2});
            const Int v = c0 * c1 * c2;
            REQUIRE(c.family.group().order() == v);
            CHECK(c.family.member(0).size() == d1 * v / c0);
            CHECK(c.family.member(1).size() == d2 * v / c1);
            // a_0 eta_1 a_1 eta_2 a_2 / (a_0 a_1) with a_1 = c1 c2, a_2 = c2
            const long long expect = static_cast<long long>(d1 * d2 * c2);
            const auto lam = cyclic_lambdas(c.family);
            CHECK(lam[0][1] == expect);
            CHECK(lam[1][0] == expect);
            check_claim(c);
            ++built;
          }
  CHECK(built > 100);

  auto three = build_block({{24, 12, 4, 2}, {1, 2, 1}});
  const auto lam = cyclic_lambdas(three.family);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(lam[i][j] >= 0);
  CHECK(lam[0][1] == 24 * 1 * 12 * 2 * 4 / (24 * 12));
  check_claim(three);

  CHECK_THROWS_AS(build_block({{12, 5, 1}, {1, 1}}), ParameterError);
  CHECK_THROWS_AS(build_block({{12, 6, 3}, {1, 2}}), ParameterError);
  CHECK_THROWS_AS(build_block({{12, 6}, {1}}), ParameterError);
  CHECK_THROWS_AS(build_block_by_factors({1, 3, 1}, {1, 1}), ParameterError);
}

TEST_CASE("equal-size rational family") {
  auto c = build_psedf_rational({3, 3, 1}, {2, 2});
  CHECK(c.family.group().order() == 9);
  CHECK(c.expected.labels.at(Label::ND_PSEDF) == std::vector<Count>{4});
  CHECK(c.expected.sizes == std::vector<Count>{6, 6});
  CHECK(cyclic_lambdas(c.family)[0][1] == 4);
  check_claim(c);

  // powers: (S^N, N, S^{N-1}, S^{N-2}), and the summed rows give (N-1) S^{N-2}
  for (Int s : {2u, 3u})
    for (std::size_t n : {3u, 4u}) {
      std::vector<Int> cs(n, s), ds(n, 1);
      cs.push_back(1);
      auto p = build_psedf_rational(cs, ds);
      Int v = 1;
      for (std::size_t i = 0; i < n; ++i) v *= s;
      CHECK(p.family.group().order() == v);
      CHECK(p.expected.labels.at(Label::ND_PSEDF) == std::vector<Count>{v / s / s});
      CHECK(p.expected.labels.at(Label::ND_SEDF) == std::vector<Count>{(n - 1) * v / s / s});
      for (const auto& row : cyclic_lambdas(p.family))
        for (auto x : row) CHECK((x == 0 || x == static_cast<long long>(v / s / s)));
      check_claim(p);
    }

  // z = 2/4 written two ways
  auto mixed = build_psedf_rational({4, 2, 3}, {2, 1});
  CHECK(mixed.expected.sizes == std::vector<Count>{12, 12});
  CHECK(mixed.expected.labels.at(Label::ND_PSEDF) == std::vector<Count>{6});
  check_claim(mixed);

  CHECK_THROWS_AS(build_psedf_rational({3, 4, 1}, {2, 2}), ParameterError);
  CHECK_THROWS_AS(build_psedf_rational({3, 3, 1}, {3, 3}), ParameterError);
}

TEST_CASE("coprime divisor family and coset unions") {
  auto c = build_mod_coprime(15, {5, 3});
  CHECK(support(c.family.member(0)) == std::vector<Element>{0, 5, 10});
  CHECK(support(c.family.member(1)) == std::vector<Element>{0, 3, 6, 9, 12});
  CHECK(cyclic_lambdas(c.family)[0][1] == 1);
  check_claim(c);

  auto u = build_mod_coprime(15, {5, 3}, {3, 2});
  CHECK(support(u.family.member(0)) == std::vector<Element>{0, 1, 2, 5, 6, 7, 10, 11, 12});
  CHECK(support(u.family.member(1)) == std::vector<Element>{0, 1, 3, 4, 6, 7, 9, 10, 12, 13});
  CHECK(cyclic_lambdas(u.family)[0][1] == 6);
  CHECK(u.expected.sizes == std::vector<Count>{9, 10});
  check_claim(u);

  auto three = build_mod_coprime(60, {3, 4, 5}, {2, 3, 1});
  const auto lam = cyclic_lambdas(three.family);
  CHECK(lam[0][1] == 2 * 3 * 60 / 12);
  CHECK(lam[1][2] == 3 * 60 / 20);
  CHECK(lam[2][0] == 2 * 60 / 15);
  check_claim(three);

  CHECK_THROWS_AS(build_mod_coprime(24, {4, 6}), ParameterError);
  CHECK_THROWS_AS(build_mod_coprime(15, {5, 4}), ParameterError);
  CHECK_THROWS_AS(build_mod_coprime(15, {5, 3}, {5, 1}), ParameterError);
}

TEST_CASE("weighted block family") {
  auto c = build_block_multiset({12, 6, 3, 1}, {{2}, {3, 2}, {4, 5}});
  CHECK(c.expected.sizes == std::vector<Count>{12, 30, 36});
  CHECK(c.family.member(1).count(0) == 3);
  CHECK(c.family.member(1).count(4) == 2);
  CHECK(c.family.member(2).count(7) == 5);
  CHECK(c.family.member(2).count(5) == 0);
  const auto lam = cyclic_lambdas(c.family);
  CHECK(lam[0][1] == 30);
  CHECK(lam[0][2] == 36);
  CHECK(lam[1][2] == 90);
  CHECK(lam[2][1] == 90);
  CHECK(c.expected.labels.at(Label::ND_MGSEDF) == std::vector<Count>{66, 120, 126});
  CHECK_FALSE(c.expected.labels.count(Label::ND_GPSEDF));
  check_claim(c);

  // unit weights reproduce the plain block family
  auto plain = build_block_multiset({12, 6, 3}, {{1}, {1}});
  auto block = build_block({{12, 6, 3}, {1, 1}});
  CHECK(plain.family.member(0) == block.family.member(0));
  CHECK(plain.family.member(1) == block.family.member(1));
  CHECK(plain.expected.labels == block.expected.labels);

  CHECK_THROWS_AS(build_block_multiset({12, 6, 3}, {{1, 1, 1}, {1}}), ParameterError);
  CHECK_THROWS_AS(build_block_multiset({12, 6, 3}, {{0}, {1}}), ParameterError);
}

TEST_CASE("subgroup families in non-abelian groups") {
  Group d8(GroupSpec::dihedral(4));
  Subgroup h{d8, {0, 1, 4, 5}, {}};
  Subgroup k{d8, {0, 3, 4, 7}, {}};
  auto c = build_subgroup_family(d8, {h, k});
  const auto lam = table_lambdas(c.family, oracle::dihedral_table(4));
  CHECK(lam[0][1] == 2);
  CHECK(lam[1][0] == 2);
  CHECK(c.expected.labels.at(Label::ND_PSEDF) == std::vector<Count>{2});
  check_claim(c);

  Group d10(GroupSpec::dihedral(5));
  auto dn = build_subgroup_family(d10, {subgroup_generated(d10, std::vector<Element>{2}),
                                        subgroup_generated(d10, std::vector<Element>{1})});
  CHECK(dn.expected.sizes == std::vector<Count>{5, 2});
  CHECK(table_lambdas(dn.family, oracle::dihedral_table(5))[0][1] == 1);
  check_claim(dn);

  Group q8(GroupSpec::quaternion8());
  auto gen = [&](const char* n) { return subgroup_generated(q8, std::vector<Element>{*q8.parse_element(n)}); };
  auto two = build_subgroup_family(q8, {gen("i"), gen("j")});
  CHECK(two.expected.labels.at(Label::ND_PSEDF) == std::vector<Count>{2});
  check_claim(two);
  auto three = build_subgroup_family(q8, {gen("i"), gen("j"), gen("k")});
  CHECK(three.expected.labels.at(Label::ND_PSEDF) == std::vector<Count>{2});
  check_claim(three);

  // coset replacement multiplies the affected lambdas
  auto cosets = build_subgroup_family(d8, {h, k}, {{0, 2}, {}});
  CHECK(cosets.expected.sizes == std::vector<Count>{8, 4});
  CHECK(table_lambdas(cosets.family, oracle::dihedral_table(4))[0][1] == 4);
  check_claim(cosets);

  Group z30(GroupSpec::cyclic(30));
  try {
    build_subgroup_family(z30, {subgroup_generated(z30, std::vector<Element>{6}),
                                subgroup_generated(z30, std::vector<Element>{10})});
    FAIL("non-covering pair accepted");
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()).find("H_1 H_2") != std::string::npos);
  }
}

TEST_CASE("elementary abelian subgroup families") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Group g(GroupSpec::product({GroupSpec::cyclic(p), GroupSpec::cyclic(p)}));
    auto subs = all_subgroups_of_order(g, p);
    REQUIRE(subs.size() == p + 1);
    auto c = build_subgroup_family(g, subs);
    CHECK(c.expected.labels.at(Label::ND_PSEDF) == std::vector<Count>{1});
    check_claim(c);
  }
}

TEST_CASE("chunk assignment") {
  CHECK(cyclic_chunk_choices(3) == std::vector<std::size_t>{0, 2, 1});
  CHECK(default_chunk_choices(3) == std::vector<std::size_t>{0, 0, 1});
  CHECK(chunk_assign({4, 6, 8}, cyclic_chunk_choices(3)) == std::vector<Int>{2, 2, 4});
  CHECK(chunk_assign({6, 15, 10}, cyclic_chunk_choices(3)) == std::vector<Int>{3, 5, 2});
  CHECK(chunk_assign({4, 6, 8}, default_chunk_choices(3)) == std::vector<Int>{4, 2, 1});

  auto c = build_chunk_family(24, {4, 6, 8}, cyclic_chunk_choices(3));
  CHECK(bits(c.family.member(0)) == "110011001100110011001100");
  CHECK(bits(c.family.member(1)) == "110000110000110000110000");
  CHECK(bits(c.family.member(2)) == "111100001111000011110000");
  const auto lam = cyclic_lambdas(c.family);
  CHECK(lam[0][1] == 4);
  CHECK(lam[1][2] == 4);
  CHECK(lam[2][0] == 6);
  check_claim(c);

  auto z30 = build_chunk_family(30, {6, 15, 10}, cyclic_chunk_choices(3));
  CHECK(z30.expected.sizes == std::vector<Count>{15, 10, 6});
  for (const auto& row : cyclic_lambdas(z30.family))
    for (auto x : row) CHECK(x >= 0);
  check_claim(z30);
}

TEST_CASE("chunk family sweep over divisor triples") {
  for (Int n : {12u, 24u, 36u, 60u}) {
    std::vector<Int> divs;
    for (Int d = 2; d < n; ++d)
      if (n % d == 0) divs.push_back(d);
    for (std::size_t x = 0; x < divs.size(); ++x)
      for (std::size_t y = x + 1; y < divs.size(); ++y)
        for (std::size_t z = y + 1; z < divs.size(); ++z)
          for (const auto& choice : {default_chunk_choices(3), cyclic_chunk_choices(3)}) {
            const std::vector<Int> a{divs[x], divs[y], divs[z]};
            auto c = build_chunk_family(n, a, choice);
            const auto ch = chunk_assign(a, choice);
            const auto lam = cyclic_lambdas(c.family);
            for (std::size_t i = 0; i < 3; ++i)
              for (std::size_t j = 0; j < 3; ++j)
                if (i != j) CHECK(lam[i][j] == static_cast<long long>(n * ch[i] * ch[j] / (a[i] * a[j])));
          }
  }
  CHECK_THROWS_AS(build_chunk_family(24, {4, 4}), ParameterError);
  CHECK_THROWS_AS(build_chunk_family(24, {4, 5}), ParameterError);
  CHECK_THROWS_AS(build_chunk_family(24, {4, 6}, {2}), ParameterError);
}

TEST_CASE("partition families") {
  Group g(GroupSpec::product({GroupSpec::cyclic(3), GroupSpec::cyclic(3)}));
  auto subs = all_subgroups_of_order(g, 3);
  auto pf = build_partition_family(g, subs);
  CHECK(pf.subgroups.expected.labels.at(Label::ND_PSEDF) == std::vector<Count>{1});
  check_claim(pf.subgroups);

  // grand union of the punctured members by brute force over Z3 x Z3 (index 3x+y)
  std::vector<std::uint64_t> grand(9, 0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j)
        for (Element x : pf.punctured.family.member(i).elements())
          for (Element y : pf.punctured.family.member(j).elements())
            grand[((x / 3 + 3 - y / 3) % 3) * 3 + (x % 3 + 3 - y % 3) % 3]++;
  CHECK(oracle::punctured(grand, 6));
  CHECK(pf.punctured.expected.labels == LabelSet{{Label::C_GEDF, {6}}, {Label::C_EDF, {6}}});
  check_claim(pf.punctured);

  Group k4(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}));
  auto kp = build_partition_family(k4, all_subgroups_of_order(k4, 2));
  CHECK(kp.punctured.expected.labels.at(Label::C_EDF) == std::vector<Count>{2});
  check_claim(kp.punctured);

  Group z6(GroupSpec::cyclic(6));
  CHECK_THROWS_AS(build_partition_family(z6, {subgroup_generated(z6, std::vector<Element>{2}),
                                              subgroup_generated(z6, std::vector<Element>{3})}),
                  ParameterError);
}

TEST_CASE("classical two-set construction") {
  for (Int h1 = 1; h1 <= 3; ++h1)
    for (Int h2 = 1; h2 <= 3; ++h2)
      for (Int h3 = 1; h3 <= 3; ++h3)
        for (Int h4 = 1; h4 <= 3; ++h4) {
          auto c = build_classical(h1, h2, h3, h4);
          const int v = static_cast<int>(h1 * h2 * h3 * h4 + 1);
          const auto a = ints(c.family.member(0)), b = ints(c.family.member(1));
          CHECK(a.size() == h1 * h3);
          CHECK(b.size() == h2 * h4);
          CHECK(oracle::punctured(oracle::cyclic_difference(a, b, v), 1));
          CHECK(oracle::punctured(oracle::cyclic_difference(b, a, v), 1));
          check_claim(c);
        }
  auto z10 = build_classical(1, 1, 3, 3);
  CHECK(z10.expected.labels.count(Label::C_PSEDF));
}

TEST_CASE("direct products") {
  Group k4(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}));
  auto base = build_subgroup_family(k4, all_subgroups_of_order(k4, 2));
  CHECK(base.expected.labels.at(Label::ND_PSEDF) == std::vector<Count>{1});
  auto p = product_family(base.family, base.family);
  CHECK(p.family.group().order() == 16);
  CHECK(p.expected.labels.at(Label::ND_PSEDF) == std::vector<Count>{1});
  CHECK(p.expected.sizes == std::vector<Count>{4, 4, 4});
  // every digit is mod 2, so the group operation is xor on indices
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) {
        std::vector<std::uint64_t> d(16, 0);
        for (Element x : p.family.member(i).elements())
          for (Element y : p.family.member(j).elements()) d[x ^ y]++;
        CHECK(oracle::constant(d, 1));
      }
  check_claim(p);

  auto z9 = build_psedf_rational({3, 3, 1}, {2, 2});
  auto z4 = build_psedf_rational({2, 2, 1}, {1, 1});
  auto z36 = product_family(z9.family, z4.family);
  CHECK(z36.expected.labels.at(Label::ND_PSEDF) == std::vector<Count>{4});
  check_claim(z36);

  auto mixed = product_family(build_modular_two_set(default_modular_tables(3, 2, 1, 2)).family,
                              build_mod_coprime(6, {2, 3}).family);
  check_claim(mixed);

  auto classical = build_classical(1, 1, 3, 3);
  CHECK_THROWS_AS(product_family(classical.family, classical.family), UsageError);
}

TEST_CASE("transforms") {
  auto base = build_block_by_factors({3, 2, 2}, {1, 1});  // sizes 4, 6 in Z_12
  const auto k = base.expected.sizes;

  auto one = transform(base.family, ComplementOne{0});
  CHECK(one.expected.sizes == std::vector<Count>{8, 6});
  auto lam = cyclic_lambdas(one.family);
  const auto base_lam = cyclic_lambdas(base.family);
  CHECK(lam[1][0] == static_cast<long long>(k[1]) - base_lam[1][0]);
  CHECK(lam[0][1] == static_cast<long long>(k[1]) - base_lam[0][1]);
  check_claim(one);

  auto all = transform(base.family, ComplementAll{});
  CHECK(all.expected.sizes == std::vector<Count>{8, 6});
  lam = cyclic_lambdas(all.family);
  CHECK(lam[0][1] == 12 - 4 - 6 + base_lam[0][1]);
  check_claim(all);

  auto moved = transform(base.family, Translate{1, 5});
  CHECK(cyclic_lambdas(moved.family) == base_lam);
  check_claim(moved);

  auto other = transform(base.family, Translate{0, 1});
  auto merged = transform(base.family, MergeWith{other.family, 0});
  CHECK(merged.expected.sizes == std::vector<Count>{8, 6});
  CHECK(cyclic_lambdas(merged.family)[0][1] == 2 * base_lam[0][1]);
  check_claim(merged);
  auto self = transform(base.family, MergeWith{base.family, 0});
  CHECK_FALSE(self.family.all_sets());
  check_claim(self);

  auto un = transform(base.family, UnionTranslates{1, {0, 1, 2}});
  CHECK(un.expected.sizes == std::vector<Count>{4, 18});
  CHECK(cyclic_lambdas(un.family)[0][1] == 3 * base_lam[0][1]);
  check_claim(un);

  CHECK_THROWS_AS(transform(base.family, Translate{2, 0}), UsageError);
  CHECK_THROWS_AS(transform(base.family, MergeWith{moved.family, 0}), UsageError);
  CHECK_THROWS_AS(transform(build_classical(1, 1, 3, 3).family, ComplementOne{0}), UsageError);
  auto weighted = build_block_multiset({12, 6, 3}, {{2}, {1}});
  CHECK_THROWS_AS(transform(weighted.family, ComplementAll{}), UsageError);
  CHECK_NOTHROW(transform(weighted.family, Translate{0, 3}));
}

TEST_CASE("coset lifting") {
  Group z18(GroupSpec::cyclic(18));
  auto h = subgroup_generated(z18, std::vector<Element>{6});
  auto small = build_mod_coprime(6, {2, 3});
  auto lifted = coset_lift(small.family, h);
  CHECK(lifted.expected.sizes == std::vector<Count>{9, 6});
  for (Element x = 0; x < 18; ++x) CHECK(lifted.family.member(1).count(x) == (x % 3 == 0 ? 1u : 0u));
  CHECK(cyclic_lambdas(lifted.family)[0][1] == 3 * cyclic_lambdas(small.family)[0][1]);
  check_claim(lifted);

  auto weighted = build_block_multiset({6, 3, 1}, {{2}, {1, 3}});
  auto wl = coset_lift(weighted.family, h);
  CHECK(wl.family.member(1).count(7) == 3);
  CHECK(cyclic_lambdas(wl.family)[1][0] == 3 * cyclic_lambdas(weighted.family)[1][0]);
  check_claim(wl);

  // non-abelian parent: D_8 over its centre
  Group d8(GroupSpec::dihedral(4));
  auto centre = subgroup_generated(d8, std::vector<Element>{4});
  auto q = quotient(centre);
  auto klein = build_subgroup_family(q.group, all_subgroups_of_order(q.group, 2));
  auto up = coset_lift(klein.family, centre);
  const auto lam = table_lambdas(up.family, oracle::dihedral_table(4));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(lam[i][j] == 2);
  check_claim(up);

  CHECK_THROWS_AS(coset_lift(small.family, subgroup_generated(z18, std::vector<Element>{9})), UsageError);
  Subgroup refl{d8, {0, 1}, {}};
  CHECK_THROWS_AS(coset_lift(klein.family, refl), UsageError);
}

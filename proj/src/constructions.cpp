#include "extdiff/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "extdiff/error.hpp"

namespace extdiff {

namespace {

using u128 = unsigned __int128;

// prod(num) / prod(den), which the caller knows to be an exact integer
Int exact_ratio(std::initializer_list<Int> num, std::initializer_list<Int> den) {
  u128 n = 1, d = 1;
  for (Int x : num) n *= x;
  for (Int x : den) d *= x;
  if (d == 0 || n % d != 0) throw std::logic_error("non-integral closed-form parameter");
  const u128 q = n / d;
  if (q > static_cast<u128>(~Int{0})) throw std::logic_error("closed-form parameter overflows");
  return static_cast<Int>(q);
}

std::uint32_t group_order(Int v, const char* what) {
  if (v == 0 || v > (Int{1} << 24)) throw ParameterError(std::string(what) + ": group order out of range");
  return static_cast<std::uint32_t>(v);
}

std::string idx(std::size_t i) { return std::to_string(i + 1); }

using Matrix = std::vector<std::vector<Count>>;

Matrix square(std::size_t m) { return Matrix(m, std::vector<Count>(m, 0)); }

// uniform pair lambdas of an already certified family
Matrix uniform_lambdas(const Certificate& c) {
  Matrix out = square(c.m);
  for (std::size_t i = 0; i < c.m; ++i)
    for (std::size_t j = 0; j < c.m; ++j)
      if (i != j) out[i][j] = c.pairs[i][j].lambda;
  return out;
}

Certificate require_uniform(const Family& f, const char* what, bool need_sets) {
  Certificate c = classify_family(f);
  const Label need = need_sets ? Label::ND_GPSEDF : Label::ND_MGPSEDF;
  if (!c.has(need))
    throw UsageError(std::string(what) + ": input does not certify as " + std::string(label_name(need)));
  return c;
}

void check_chain(const std::vector<Int>& a, const char* what) {
  if (a.size() < 3) throw ParameterError(std::string(what) + ": need a_0..a_m with m >= 2");
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i + 1] == 0 || a[i] % a[i + 1] != 0 || a[i] / a[i + 1] < 2)
      throw ParameterError(std::string(what) + ": a_" + std::to_string(i) + " = " + std::to_string(a[i]) +
                           " is not a multiple >= 2 of a_" + std::to_string(i + 1) + " = " + std::to_string(a[i + 1]));
  }
}

// Both block constructions share this shape: member i carries weight w[i][j] on
// the j-th width-a_i block of every length-a_{i-1} period.
Construction block_family(const std::vector<Int>& a, const std::vector<std::vector<Count>>& w, Provenance prov) {
  const std::size_t m = a.size() - 1;
  Group g(GroupSpec::cyclic(group_order(a[0], "block construction")));
  std::vector<GMultiset> members;
  std::vector<Count> sizes, totals;
  for (std::size_t i = 1; i <= m; ++i) {
    GMultiset x(g);
    for (Int t = 0; t < a[0]; ++t) {
      const Int block = (t % a[i - 1]) / a[i];
      if (block < w[i - 1].size() && w[i - 1][block]) x.add(static_cast<Element>(t), w[i - 1][block]);
    }
    members.push_back(std::move(x));
    const Count total = std::accumulate(w[i - 1].begin(), w[i - 1].end(), Count{0});
    totals.push_back(total);
    sizes.push_back(exact_ratio({total, a[i], a[0]}, {a[i - 1]}));
  }
  Matrix lam = square(m);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      if (i != j) lam[i - 1][j - 1] = exact_ratio({a[0], totals[i - 1], a[i], totals[j - 1], a[j]}, {a[i - 1], a[j - 1]});
  bool sets = true;
  for (const auto& row : w)
    for (Count x : row) sets = sets && x <= 1;
  Family f(g, std::move(members), std::move(prov));
  return {std::move(f), expect_uniform_pairs(g.order(), sizes, lam, sets)};
}

}  // namespace

Construction build_block(const ChainParams& p) {
  check_chain(p.a_chain, "block");
  const std::size_t m = p.a_chain.size() - 1;
  if (p.eta.size() != m) throw ParameterError("block: expected " + std::to_string(m) + " eta values");
  std::vector<std::vector<Count>> w(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Int b = p.a_chain[i] / p.a_chain[i + 1];
    if (p.eta[i] < 1 || p.eta[i] > b - 1)
      throw ParameterError("block: eta_" + idx(i) + " = " + std::to_string(p.eta[i]) + " outside [1, " +
                           std::to_string(b - 1) + "]");
    w[i].assign(p.eta[i], 1);
  }
  Provenance prov{"block", {{"chain", p.a_chain}, {"eta", p.eta}}};
  return block_family(p.a_chain, w, std::move(prov));
}

Construction build_block_by_factors(const std::vector<Int>& c, const std::vector<Int>& d) {
  if (c.size() < 3) throw ParameterError("block-factors: need c_0..c_m with m >= 2");
  if (d.size() + 1 != c.size()) throw ParameterError("block-factors: need one d per c_0..c_{m-1}");
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i] < 2) throw ParameterError("block-factors: c_" + std::to_string(i) + " must be at least 2");
    if (d[i] < 1 || d[i] > c[i] - 1)
      throw ParameterError("block-factors: d_" + idx(i) + " outside [1, c_" + std::to_string(i) + " - 1]");
  }
  if (c.back() < 1) throw ParameterError("block-factors: c_m must be positive");
  ChainParams p;
  p.a_chain.assign(c.size(), 1);
  u128 acc = 1;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= c[i];
    if (acc > (u128{1} << 24)) throw ParameterError("block-factors: group order out of range");
    p.a_chain[i] = static_cast<Int>(acc);
  }
  p.eta = d;
  Construction out = build_block(p);
  out.family.set_provenance({"block-factors", {{"c", c}, {"d", d}}});
  return out;
}

Construction build_psedf_rational(const std::vector<Int>& c, const std::vector<Int>& d) {
  if (c.size() < 3 || d.size() + 1 != c.size()) throw ParameterError("psedf: need c_0..c_m and d_1..d_m with m >= 2");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0 || d[i] >= c[i]) throw ParameterError("psedf: d_" + idx(i) + "/c_" + std::to_string(i) + " is not in (0,1)");
    if (u128{d[i]} * c[0] != u128{d[0]} * c[i])
      throw ParameterError("psedf: d_" + idx(i) + "/c_" + std::to_string(i) + " differs from d_1/c_0");
  }
  Construction out = build_block_by_factors(c, d);
  out.family.set_provenance({"psedf", {{"c", c}, {"d", d}}});
  return out;
}

ModularTables default_modular_tables(Int a, Int b, Int k1, Int k2) {
  ModularTables t;
  t.a = a;
  t.b = b;
  for (Int i = 0; i < k1; ++i) t.s.push_back(i);
  std::vector<Int> row;
  for (Int j = 0; j < k2; ++j) row.push_back(j);
  t.r.assign(b, row);
  return t;
}

Construction build_modular_two_set(const ModularTables& t) {
  const Int a = t.a, b = t.b;
  if (a < 2 || b < 2) throw ParameterError("modular: a and b must be at least 2");
  const Int k1 = t.s.size();
  if (k1 < 1 || k1 > b - 1) throw ParameterError("modular: |S| must lie in [1, b-1]");
  if (t.r.size() != b) throw ParameterError("modular: R needs exactly b = " + std::to_string(b) + " rows");
  const Int k2 = t.r[0].size();
  if (k2 < 1 || k2 > a - 1) throw ParameterError("modular: R rows must have length in [1, a-1]");
  std::set<Int> seen(t.s.begin(), t.s.end());
  if (seen.size() != k1 || *seen.rbegin() >= b) throw ParameterError("modular: S must hold distinct residues mod b");
  for (std::size_t i = 0; i < b; ++i) {
    std::set<Int> row(t.r[i].begin(), t.r[i].end());
    if (t.r[i].size() != k2) throw ParameterError("modular: R row " + std::to_string(i) + " has the wrong length");
    if (row.size() != k2 || *row.rbegin() >= a)
      throw ParameterError("modular: R row " + std::to_string(i) + " must hold distinct residues mod a");
  }
  Group g(GroupSpec::cyclic(group_order(a * b, "modular")));
  std::vector<Element> xa, xb;
  for (Int s : t.s)
    for (Int j = 0; j < a; ++j) xa.push_back(static_cast<Element>(j * b + s));
  for (Int i = 0; i < b; ++i)
    for (Int r : t.r[i]) xb.push_back(static_cast<Element>(r * b + i));
  Provenance prov{"modular", {{"a", a}, {"b", b}, {"s", t.s}, {"r", t.r}}};
  Family f = Family::from_sets(g, {xa, xb}, std::move(prov));
  Matrix lam = square(2);
  lam[0][1] = lam[1][0] = k1 * k2;
  return {std::move(f), expect_uniform_pairs(g.order(), {k1 * a, k2 * b}, lam, true)};
}

Construction build_mod_coprime(Int v, const std::vector<Int>& divisors, std::vector<Int> mu) {
  const std::size_t m = divisors.size();
  if (m < 2) throw ParameterError("coprime: need at least two divisors");
  if (mu.empty()) mu.assign(m, 1);
  if (mu.size() != m) throw ParameterError("coprime: need one mu per divisor");
  Group g(GroupSpec::cyclic(group_order(v, "coprime")));
  for (std::size_t i = 0; i < m; ++i) {
    if (divisors[i] == 0 || v % divisors[i] != 0)
      throw ParameterError("coprime: a_" + idx(i) + " = " + std::to_string(divisors[i]) + " does not divide v");
    if (mu[i] < 1 || mu[i] + 1 > divisors[i])
      throw ParameterError("coprime: mu_" + idx(i) + " outside [1, a_" + idx(i) + " - 1]");
    for (std::size_t j = i + 1; j < m; ++j)
      if (std::gcd(divisors[i], divisors[j]) != 1)
        throw ParameterError("coprime: a_" + idx(i) + " and a_" + idx(j) + " are not coprime");
  }
  std::vector<std::vector<Element>> sets(m);
  std::vector<Count> sizes(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (Int t = 0; t < v; ++t)
      if (t % divisors[i] < mu[i]) sets[i].push_back(static_cast<Element>(t));
    sizes[i] = exact_ratio({mu[i], v}, {divisors[i]});
  }
  Matrix lam = square(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) lam[i][j] = exact_ratio({mu[i], mu[j], v}, {divisors[i], divisors[j]});
  Provenance prov{"coprime", {{"v", v}, {"divisors", divisors}, {"mu", mu}}};
  return {Family::from_sets(g, sets, std::move(prov)), expect_uniform_pairs(g.order(), sizes, lam, true)};
}

Construction build_block_multiset(const std::vector<Int>& a_chain, const std::vector<std::vector<Count>>& weights) {
  check_chain(a_chain, "block-multiset");
  const std::size_t m = a_chain.size() - 1;
  if (weights.size() != m) throw ParameterError("block-multiset: expected " + std::to_string(m) + " weight rows");
  for (std::size_t i = 0; i < m; ++i) {
    const Int b = a_chain[i] / a_chain[i + 1];
    if (weights[i].empty() || weights[i].size() > b)
      throw ParameterError("block-multiset: k_" + idx(i) + " outside [1, " + std::to_string(b) + "]");
    for (Count w : weights[i])
      if (w == 0) throw ParameterError("block-multiset: weights must be positive");
  }
  Provenance prov{"block-multiset", {{"chain", a_chain}, {"weights", weights}}};
  return block_family(a_chain, weights, std::move(prov));
}

Construction build_subgroup_family(const Group& g, const std::vector<Subgroup>& subs,
                                   const std::vector<std::vector<Element>>& coset_reps) {
  const std::size_t m = subs.size();
  if (m < 2) throw ParameterError("subgroups: need at least two subgroups");
  if (!coset_reps.empty() && coset_reps.size() != m) throw ParameterError("subgroups: need one rep list per subgroup");
  for (const auto& h : subs)
    if (!(h.parent == g)) throw UsageError("subgroups: subgroup of a different group");
  Matrix lam = square(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto p = product_set(subs[i], subs[j]);
      if (!p.is_all_of_group)
        throw ParameterError("subgroups: H_" + idx(i) + " H_" + idx(j) + " has " + std::to_string(p.elements.size()) +
                             " elements, not all of G");
      lam[i][j] = lam[j][i] = p.intersection_size;
    }
  std::vector<GMultiset> members;
  std::vector<Count> sizes;
  nlohmann::json gens = nlohmann::json::array(), reps_json = nlohmann::json::array();
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Element> reps = coset_reps.empty() || coset_reps[i].empty() ? std::vector<Element>{g.identity()}
                                                                             : coset_reps[i];
    members.push_back(coset_union(subs[i], reps, true));
    sizes.push_back(reps.size() * subs[i].order());
    gens.push_back(subs[i].generators.empty() ? subs[i].elements : subs[i].generators);
    reps_json.push_back(reps);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) lam[i][j] *= (sizes[i] / subs[i].order()) * (sizes[j] / subs[j].order());
  Provenance prov{"subgroups", {{"generators", gens}, {"reps", reps_json}}};
  return {Family(g, std::move(members), std::move(prov)), expect_uniform_pairs(g.order(), sizes, lam, true)};
}

std::vector<std::size_t> default_chunk_choices(std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) out.push_back(i);
  return out;
}

std::vector<std::size_t> cyclic_chunk_choices(std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if ((i + 1) % m == j) out.push_back(i);
      else if ((j + 1) % m == i) out.push_back(j);
      else out.push_back(i);
    }
  return out;
}

std::vector<Int> chunk_assign(const std::vector<Int>& divisors, const std::vector<std::size_t>& choices) {
  const std::size_t m = divisors.size();
  if (choices.size() != m * (m - 1) / 2)
    throw ParameterError("chunk: expected " + std::to_string(m * (m - 1) / 2) + " choices, one per pair");
  std::vector<Int> ch(m, 1);
  std::size_t p = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j, ++p) {
      const std::size_t k = choices[p];
      if (k != i && k != j)
        throw ParameterError("chunk: choice for pair (" + idx(i) + "," + idx(j) + ") must be " + idx(i) + " or " + idx(j));
      ch[k] = std::lcm(ch[k], std::gcd(divisors[i], divisors[j]));
    }
  return ch;
}

Construction build_chunk_family(Int n, const std::vector<Int>& divisors, std::vector<std::size_t> choices) {
  const std::size_t m = divisors.size();
  if (m < 2) throw ParameterError("chunk: need at least two divisors");
  Group g(GroupSpec::cyclic(group_order(n, "chunk")));
  for (std::size_t i = 0; i < m; ++i) {
    if (divisors[i] == 0 || n % divisors[i] != 0)
      throw ParameterError("chunk: a_" + idx(i) + " = " + std::to_string(divisors[i]) + " does not divide n");
    for (std::size_t j = 0; j < i; ++j)
      if (divisors[i] == divisors[j]) throw ParameterError("chunk: divisors must be distinct");
  }
  if (choices.empty()) choices = default_chunk_choices(m);
  const std::vector<Int> ch = chunk_assign(divisors, choices);
  std::vector<std::vector<Element>> sets(m);
  std::vector<Count> sizes(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (Int t = 0; t < n; ++t)
      if (t % divisors[i] < ch[i]) sets[i].push_back(static_cast<Element>(t));
    sizes[i] = exact_ratio({n, ch[i]}, {divisors[i]});
  }
  Matrix lam = square(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) lam[i][j] = exact_ratio({n, ch[i], ch[j]}, {divisors[i], divisors[j]});
  std::vector<std::size_t> one_based;
  for (auto c : choices) one_based.push_back(c + 1);
  Provenance prov{"chunk", {{"n", n}, {"divisors", divisors}, {"choices", one_based}, {"chunks", ch}}};
  return {Family::from_sets(g, sets, std::move(prov)), expect_uniform_pairs(g.order(), sizes, lam, true)};
}

PartitionFamilies build_partition_family(const Group& g, const std::vector<Subgroup>& subs) {
  const std::size_t m = subs.size();
  if (m < 2) throw ParameterError("partition: need at least two subgroups");
  for (std::size_t i = 0; i < m; ++i)
    if (subs[i].order() < 2) throw ParameterError("partition: H_" + idx(i) + " is trivial");
  if (!is_partition(g, subs)) throw ParameterError("partition: subgroups do not partition G");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (subs[i].order() * subs[j].order() != g.order())
        throw ParameterError("partition: |H_" + idx(i) + "||H_" + idx(j) + "| != |G|");

  Construction whole = build_subgroup_family(g, subs);
  whole.family.set_provenance({"partition", whole.family.provenance().params});

  std::vector<std::vector<Element>> punctured;
  std::vector<Count> sizes;
  Count total = 0;
  for (const auto& h : subs) {
    std::vector<Element> s;
    for (Element x : h.elements)
      if (x != g.identity()) s.push_back(x);
    sizes.push_back(s.size());
    punctured.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) total += sizes[i] * sizes[j];
  Expectation e;
  e.v = g.order();
  e.sizes = sizes;
  const Count lambda = exact_ratio({total}, {g.order() - 1u});
  e.labels[Label::C_GEDF] = {lambda};
  if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) == sizes.end())
    e.labels[Label::C_EDF] = {lambda};
  Provenance prov{"partition-punctured", whole.family.provenance().params};
  return {std::move(whole), {Family::from_sets(g, punctured, std::move(prov)), std::move(e)}};
}

Construction build_classical(Int h1, Int h2, Int h3, Int h4) {
  if (!h1 || !h2 || !h3 || !h4) throw ParameterError("classical: h_1..h_4 must be positive");
  const u128 prod = u128{h1} * h2 * h3 * h4 + 1;
  if (prod > (u128{1} << 24)) throw ParameterError("classical: group order out of range");
  const Int v = static_cast<Int>(prod);
  Group g(GroupSpec::cyclic(static_cast<std::uint32_t>(v)));
  std::vector<Element> a, b;
  for (Int i = 0; i < h3; ++i)
    for (Int alpha = 0; alpha < h1; ++alpha) a.push_back(static_cast<Element>(i * h1 * h2 + alpha));
  for (Int i = 0; i < h4; ++i)
    for (Int beta = 1; beta <= h2; ++beta)
      b.push_back(static_cast<Element>(i * h1 * h2 * h3 + h1 * h2 * (h3 - 1) + beta * h1));
  Provenance prov{"classical", {{"h", {h1, h2, h3, h4}}}};
  Matrix lam = square(2);
  lam[0][1] = lam[1][0] = 1;
  return {Family::from_sets(g, {a, b}, std::move(prov)), expect_punctured_pairs(g.order(), {h1 * h3, h2 * h4}, lam, true)};
}

Construction product_family(const Family& a, const Family& b) {
  if (a.size() != b.size()) throw UsageError("product: families have different member counts");
  const Certificate ca = require_uniform(a, "product (first family)", false);
  const Certificate cb = require_uniform(b, "product (second family)", false);
  const Group g(GroupSpec::product({a.group().spec(), b.group().spec()}));
  const std::uint32_t nb = b.group().order();
  std::vector<GMultiset> members;
  std::vector<Count> sizes;
  for (std::size_t i = 0; i < a.size(); ++i) {
    GMultiset x(g);
    for (Element p : a.member(i).support())
      for (Element q : b.member(i).support()) x.add(p * nb + q, a.member(i).count(p) * b.member(i).count(q));
    sizes.push_back(x.size());
    members.push_back(std::move(x));
  }
  Matrix lam = uniform_lambdas(ca), lb = uniform_lambdas(cb);
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (std::size_t j = 0; j < lam.size(); ++j) lam[i][j] *= lb[i][j];
  Provenance prov{"product", {{"first", a.provenance().construction}, {"second", b.provenance().construction}}};
  const bool sets = a.all_sets() && b.all_sets();
  return {Family(g, std::move(members), std::move(prov)), expect_uniform_pairs(g.order(), sizes, lam, sets)};
}

namespace {

struct TransformVisitor {
  const Family& f;

  Construction operator()(const ComplementOne& t) const { return complement(std::vector<std::size_t>{t.j}, "complement"); }

  Construction operator()(const ComplementAll&) const {
    std::vector<std::size_t> all(f.size());
    std::iota(all.begin(), all.end(), 0);
    return complement(all, "complement-all");
  }

  Construction operator()(const Translate& t) const {
    const Certificate c = require_uniform(f, "translate", false);
    check_index(t.j);
    if (t.g >= f.group().order()) throw UsageError("translate: element out of range");
    std::vector<GMultiset> members = f.members();
    members[t.j] = members[t.j].translated(t.g);
    Provenance prov{"translate", {{"j", t.j + 1}, {"g", t.g}, {"from", f.provenance().construction}}};
    return {Family(f.group(), std::move(members), std::move(prov)),
            expect_uniform_pairs(c.v, c.sizes, uniform_lambdas(c), f.all_sets())};
  }

  Construction operator()(const MergeWith& t) const {
    const Certificate ca = require_uniform(f, "merge", false);
    check_index(t.j);
    if (t.other.size() != f.size() || !(t.other.group() == f.group()))
      throw UsageError("merge: the second family must have the same group and member count");
    for (std::size_t i = 0; i < f.size(); ++i)
      if (i != t.j && !(t.other.member(i) == f.member(i)))
        throw UsageError("merge: families differ in member " + idx(i) + ", not only in member " + idx(t.j));
    const Certificate cb = require_uniform(t.other, "merge (second family)", false);
    std::vector<GMultiset> members = f.members();
    members[t.j] += t.other.member(t.j);
    Matrix lam = uniform_lambdas(ca), lb = uniform_lambdas(cb);
    for (std::size_t i = 0; i < lam.size(); ++i)
      for (std::size_t j = 0; j < lam.size(); ++j) lam[i][j] += lb[i][j];
    std::vector<Count> sizes = ca.sizes;
    sizes[t.j] += cb.sizes[t.j];
    const bool sets = std::all_of(members.begin(), members.end(), [](const GMultiset& x) { return x.is_set(); });
    Provenance prov{"merge", {{"j", t.j + 1}, {"from", f.provenance().construction}}};
    return {Family(f.group(), std::move(members), std::move(prov)), expect_uniform_pairs(ca.v, sizes, lam, sets)};
  }

  Construction operator()(const UnionTranslates& t) const {
    const Certificate c = require_uniform(f, "union-translates", false);
    check_index(t.j);
    if (t.gs.empty()) throw UsageError("union-translates: need at least one translate");
    GMultiset u(f.group());
    for (Element g : t.gs) {
      if (g >= f.group().order()) throw UsageError("union-translates: element out of range");
      u += f.member(t.j).translated(g);
    }
    std::vector<GMultiset> members = f.members();
    members[t.j] = std::move(u);
    const Count n = t.gs.size();
    Matrix lam = uniform_lambdas(c);
    for (std::size_t i = 0; i < lam.size(); ++i)
      if (i != t.j) {
        lam[i][t.j] *= n;
        lam[t.j][i] *= n;
      }
    std::vector<Count> sizes = c.sizes;
    sizes[t.j] *= n;
    const bool sets = std::all_of(members.begin(), members.end(), [](const GMultiset& x) { return x.is_set(); });
    Provenance prov{"union-translates", {{"j", t.j + 1}, {"gs", t.gs}, {"from", f.provenance().construction}}};
    return {Family(f.group(), std::move(members), std::move(prov)), expect_uniform_pairs(c.v, sizes, lam, sets)};
  }

  void check_index(std::size_t j) const {
    if (j >= f.size()) throw UsageError("transform: member index " + idx(j) + " out of range");
  }

  Construction complement(const std::vector<std::size_t>& which, const char* name) const {
    const Certificate c = require_uniform(f, name, true);
    std::vector<GMultiset> members = f.members();
    Matrix lam = uniform_lambdas(c);
    std::vector<Count> sizes = c.sizes;
    for (std::size_t j : which) {
      check_index(j);
      if (sizes[j] == c.v) throw UsageError(std::string(name) + ": member " + idx(j) + " is the whole group");
      members[j] = members[j].complement();
      // Δ(A_i, G \ A_j) = (k_i - λ_ij) G, applied one member at a time
      for (std::size_t i = 0; i < lam.size(); ++i)
        if (i != j) {
          lam[i][j] = sizes[i] - lam[i][j];
          lam[j][i] = sizes[i] - lam[j][i];
        }
      sizes[j] = c.v - sizes[j];
    }
    nlohmann::json js = nlohmann::json::array();
    for (auto j : which) js.push_back(j + 1);
    Provenance prov{name, {{"members", js}, {"from", f.provenance().construction}}};
    return {Family(f.group(), std::move(members), std::move(prov)), expect_uniform_pairs(c.v, sizes, lam, true)};
  }
};

}  // namespace

Construction transform(const Family& f, const TransformSpec& t) { return std::visit(TransformVisitor{f}, t); }

Construction coset_lift(const Family& f, const Subgroup& h) {
  const Certificate c = require_uniform(f, "coset-lift", false);
  if (!is_normal(h)) throw UsageError("coset-lift: subgroup is not normal");
  const Quotient q = quotient(h);
  const Group& small = f.group();
  if (small.order() != q.group.order())
    throw UsageError("coset-lift: family group has order " + std::to_string(small.order()) + ", quotient has " +
                     std::to_string(q.group.order()));
  for (Element x = 0; x < small.order(); ++x)
    for (Element y = 0; y < small.order(); ++y)
      if (small.op(x, y) != q.group.op(x, y))
        throw UsageError("coset-lift: family group does not match the quotient's coset numbering");
  const Group& g = h.parent;
  std::vector<GMultiset> members;
  for (const auto& m : f.members()) {
    GMultiset x(g);
    for (Element e = 0; e < g.order(); ++e)
      if (Count k = m.count(q.coset_index[e])) x.add(e, k);
    members.push_back(std::move(x));
  }
  const Count hs = h.order();
  Matrix lam = uniform_lambdas(c);
  for (auto& row : lam)
    for (auto& x : row) x *= hs;
  std::vector<Count> sizes = c.sizes;
  for (auto& s : sizes) s *= hs;
  Provenance prov{"coset-lift", {{"subgroup", h.elements}, {"from", f.provenance().construction}}};
  return {Family(g, std::move(members), std::move(prov)), expect_uniform_pairs(g.order(), sizes, lam, f.all_sets())};
}

}  // namespace extdiff

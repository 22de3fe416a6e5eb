#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "extdiff/certificate.hpp"
#include "extdiff/group.hpp"
#include "extdiff/multiset.hpp"

namespace extdiff {

// A generated family together with what its generator claims about it. The
// claim comes from closed-form parameter arithmetic only; nothing here computes
// a difference multiset.
struct Construction {
  Family family;
  Expectation expected;
};

using Int = std::uint64_t;

// Divisibility chain a_0 > a_1 > ... > a_m with a_{i-1} = b_i a_i, b_i >= 2,
// and block widths 1 <= eta_i <= b_i - 1.
struct ChainParams {
  std::vector<Int> a_chain;
  std::vector<Int> eta;
};

// X_i repeats with period a_{i-1}: eta_i blocks of a_i ones, then zeros.
Construction build_block(const ChainParams& p);

// Same family from factors: v = c_0...c_m, a_i = c_i...c_m, eta_i = d_i.
Construction build_block_by_factors(const std::vector<Int>& c, const std::vector<Int>& d);

// Equal-size specialization: every d_i / c_{i-1} is the same z in (0,1).
Construction build_psedf_rational(const std::vector<Int>& c, const std::vector<Int>& d);

// Two-set family in Z_{ab}. s holds k_1 distinct residues mod b; r has b rows
// of k_2 distinct residues mod a.
struct ModularTables {
  Int a = 0;
  Int b = 0;
  std::vector<Int> s;
  std::vector<std::vector<Int>> r;
};

// s = {0..k_1-1}, every row of r = {0..k_2-1}.
ModularTables default_modular_tables(Int a, Int b, Int k1, Int k2);
Construction build_modular_two_set(const ModularTables& t);

// A_i = union over g < mu_i of g + a_i Z_v, divisors pairwise coprime.
// Empty mu means all ones.
Construction build_mod_coprime(Int v, const std::vector<Int>& divisors, std::vector<Int> mu = {});

// Multiset blocks: on each period a_{i-1}, the j-th width-a_i block carries
// weights[i][j]; k_i = weights[i].size() <= b_i.
Construction build_block_multiset(const std::vector<Int>& a_chain, const std::vector<std::vector<Count>>& weights);

// Subgroups whose pairwise products are all of G; each may be replaced by a
// union of left cosets r*H_i (coset_reps[i], empty for the subgroup itself).
Construction build_subgroup_family(const Group& g, const std::vector<Subgroup>& subs,
                                   const std::vector<std::vector<Element>>& coset_reps = {});

// choices[p] is the zero-based index picked for the p-th pair (i,j) in loop
// order (i ascending, then j ascending).
std::vector<std::size_t> default_chunk_choices(std::size_t m);
// Picks the member whose cyclic successor is the other one when such a member
// exists, the smaller index otherwise. For three divisors this is
// (1,2)->1, (1,3)->3, (2,3)->2.
std::vector<std::size_t> cyclic_chunk_choices(std::size_t m);
std::vector<Int> chunk_assign(const std::vector<Int>& divisors, const std::vector<std::size_t>& choices);
// H_i = union over r < ch(a_i) of r + a_i Z_n. Empty choices means the default.
Construction build_chunk_family(Int n, const std::vector<Int>& divisors, std::vector<std::size_t> choices = {});

struct PartitionFamilies {
  Construction subgroups;  // the subgroups themselves
  Construction punctured;  // each subgroup minus the identity
};
PartitionFamilies build_partition_family(const Group& g, const std::vector<Subgroup>& subs);

// A_i = union over the first h_3 blocks of length h_1 h_2 of h_1 leading elements;
// B_i = spaced runs of h_2 elements offset so that A and B never meet.
Construction build_classical(Int h1, Int h2, Int h3, Int h4);

// Members A_i x B_i in the direct product; both inputs must have every ordered
// pair uniform.
Construction product_family(const Family& a, const Family& b);

struct ComplementOne {
  std::size_t j = 0;
};
struct ComplementAll {};
struct Translate {
  std::size_t j = 0;
  Element g = 0;
};
// other must agree with the input everywhere except member j.
struct MergeWith {
  Family other;
  std::size_t j = 0;
};
struct UnionTranslates {
  std::size_t j = 0;
  std::vector<Element> gs;
};
using TransformSpec = std::variant<ComplementOne, ComplementAll, Translate, MergeWith, UnionTranslates>;

// The input must certify with every pair uniform (and be a set family for the
// complement transforms); UsageError otherwise.
Construction transform(const Family& f, const TransformSpec& t);

// f lives in G/H with cosets ordered as quotient() orders them; each element
// q becomes its whole coset, carrying q's multiplicity.
Construction coset_lift(const Family& f, const Subgroup& h);

}  // namespace extdiff

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "extdiff/multiset.hpp"

namespace extdiff {

enum class Label {
  ND_PSEDF,
  ND_SEDF,
  ND_GPSEDF,
  ND_GSEDF,
  ND_MGPSEDF,
  ND_MGSEDF,
  ND_SCEDF,
  C_PSEDF,
  C_SEDF,
  C_SCEDF,
  C_GPSEDF,
  C_GSEDF,
  C_EDF,
  C_GEDF,
  C_MGPSEDF,
  C_MGSEDF,
};

inline constexpr Label kAllLabels[] = {
    Label::ND_PSEDF, Label::ND_SEDF,   Label::ND_GPSEDF, Label::ND_GSEDF,  Label::ND_MGPSEDF, Label::ND_MGSEDF,
    Label::ND_SCEDF, Label::C_PSEDF,   Label::C_SEDF,    Label::C_SCEDF,   Label::C_GPSEDF,   Label::C_GSEDF,
    Label::C_EDF,    Label::C_GEDF,    Label::C_MGPSEDF, Label::C_MGSEDF,
};

std::string_view label_name(Label l);
std::optional<Label> parse_label(std::string_view name);

enum class PairKind { Uniform, Punctured, NonUniform };

// Uniform: every element appears lambda times. Punctured: identity absent,
// every other element appears lambda times. identity_count is always the raw
// multiplicity of the identity.
struct PairClass {
  PairKind kind = PairKind::NonUniform;
  Count lambda = 0;
  Count identity_count = 0;

  bool operator==(const PairClass&) const = default;
};

PairClass classify_pair(const GMultiset& d);

// Label parameters, by label family:
//   PSEDF, SEDF, SCEDF, EDF, GEDF : {lambda}
//   GSEDF, MGSEDF                 : {lambda_1, ..., lambda_m}
//   GPSEDF, MGPSEDF               : the m x m lambda-matrix, row-major, zero diagonal
using LabelSet = std::map<Label, std::vector<Count>>;

struct Certificate {
  std::uint32_t v = 0;
  std::size_t m = 0;
  std::vector<Count> sizes;
  bool all_sets = false;
  bool pairwise_disjoint = false;  // on supports
  bool equal_sizes = false;

  std::vector<std::vector<PairClass>> pairs;  // pairs[i][j] classifies Δ(A_i, A_j); diagonal unused
  std::vector<PairClass> rows;                // ⊎_{j≠i} Δ(A_i, A_j)
  PairClass grand_union;                      // ⊎_{i≠j} Δ(A_i, A_j)
  std::vector<PairClass> circular;            // circular[j] = Δ(A_{j+1 mod m}, A_j)

  LabelSet labels;

  bool has(Label l) const { return labels.count(l) != 0; }
  const std::vector<Count>& params(Label l) const { return labels.at(l); }

  // Zero diagonal, nullopt where the pair is neither Uniform nor Punctured.
  std::vector<std::vector<std::optional<Count>>> lambda_matrix() const;
};

// Throws UsageError for fewer than two members.
Certificate classify_family(const Family& f);

// Classifies {A_i, ⊎_{j≠i} A_j}. i is zero-based.
Certificate merged_pair_check(const Family& f, std::size_t i);

// Assigns labels from already-classified pieces. Shared by the classifier and
// by expectations built from closed-form pair predictions.
LabelSet derive_labels(std::uint32_t v, const std::vector<Count>& sizes, bool all_sets, bool pairwise_disjoint,
                       const std::vector<std::vector<PairClass>>& pairs, const std::vector<PairClass>& rows,
                       const PairClass& grand_union, const std::vector<PairClass>& circular);

// What a construction claims about its output before any difference is computed.
struct Expectation {
  std::uint32_t v = 0;
  std::vector<Count> sizes;
  LabelSet labels;

  // True iff sizes and the full label set with parameters agree exactly.
  bool matches(const Certificate& c) const;
  // Human readable account of the first disagreement, empty on match.
  std::string mismatch(const Certificate& c) const;
};

// Every ordered pair uniform with the given lambda matrix (diagonal ignored).
Expectation expect_uniform_pairs(std::uint32_t v, std::vector<Count> sizes,
                                 const std::vector<std::vector<Count>>& lambda, bool all_sets);

// Every ordered pair punctured with the given lambda matrix; members disjoint.
Expectation expect_punctured_pairs(std::uint32_t v, std::vector<Count> sizes,
                                   const std::vector<std::vector<Count>>& lambda, bool all_sets);

nlohmann::json certificate_to_json(const Certificate& c);
// One line per label in the literature's parameter notation, e.g.
// "C-SEDF (10,2,3,1)".
std::string describe(const Certificate& c);
std::string label_signature(Label l, std::uint32_t v, const std::vector<Count>& sizes, const std::vector<Count>& params);

}  // namespace extdiff

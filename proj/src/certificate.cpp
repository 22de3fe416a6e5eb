#include "extdiff/certificate.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "extdiff/difference.hpp"
#include "extdiff/error.hpp"

namespace extdiff {

namespace {

constexpr std::array<std::pair<Label, std::string_view>, 16> kNames{{
    {Label::ND_PSEDF, "ND-PSEDF"},   {Label::ND_SEDF, "ND-SEDF"},     {Label::ND_GPSEDF, "ND-GPSEDF"},
    {Label::ND_GSEDF, "ND-GSEDF"},   {Label::ND_MGPSEDF, "ND-MGPSEDF"}, {Label::ND_MGSEDF, "ND-MGSEDF"},
    {Label::ND_SCEDF, "ND-SCEDF"},   {Label::C_PSEDF, "C-PSEDF"},     {Label::C_SEDF, "C-SEDF"},
    {Label::C_SCEDF, "C-SCEDF"},     {Label::C_GPSEDF, "C-GPSEDF"},   {Label::C_GSEDF, "C-GSEDF"},
    {Label::C_EDF, "C-EDF"},         {Label::C_GEDF, "C-GEDF"},       {Label::C_MGPSEDF, "C-MGPSEDF"},
    {Label::C_MGSEDF, "C-MGSEDF"},
}};

bool all_off_diagonal(const std::vector<std::vector<PairClass>>& pairs, PairKind kind) {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (i != j && pairs[i][j].kind != kind) return false;
  return true;
}

bool all_of_kind(const std::vector<PairClass>& xs, PairKind kind) {
  return std::all_of(xs.begin(), xs.end(), [kind](const PairClass& p) { return p.kind == kind; });
}

std::vector<Count> flat_matrix(const std::vector<std::vector<PairClass>>& pairs) {
  std::vector<Count> out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j) out.push_back(i == j ? 0 : pairs[i][j].lambda);
  return out;
}

std::vector<Count> lambdas(const std::vector<PairClass>& xs) {
  std::vector<Count> out;
  for (const auto& p : xs) out.push_back(p.lambda);
  return out;
}

std::string join(const std::vector<Count>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(xs[i]);
  }
  return out;
}

bool equal_entries(const std::vector<Count>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) == xs.end();
}

PairClass sum_class(const PairClass& a, const PairClass& b) {
  if (a.kind != b.kind || a.kind == PairKind::NonUniform) return {PairKind::NonUniform, 0, a.identity_count + b.identity_count};
  return {a.kind, a.lambda + b.lambda, a.identity_count + b.identity_count};
}

Expectation expect_from_pairs(std::uint32_t v, std::vector<Count> sizes, std::vector<std::vector<PairClass>> pairs,
                              bool all_sets, bool disjoint) {
  const std::size_t m = sizes.size();
  std::vector<PairClass> rows(m);
  PairClass grand;
  std::vector<PairClass> circular(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool first = true;
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      rows[i] = first ? pairs[i][j] : sum_class(rows[i], pairs[i][j]);
      first = false;
    }
    grand = i == 0 ? rows[0] : sum_class(grand, rows[i]);
    circular[i] = pairs[(i + 1) % m][i];
  }
  Expectation e;
  e.v = v;
  e.labels = derive_labels(v, sizes, all_sets, disjoint, pairs, rows, grand, circular);
  e.sizes = std::move(sizes);
  return e;
}

std::vector<std::vector<PairClass>> pair_grid(const std::vector<std::vector<Count>>& lambda, PairKind kind) {
  const std::size_t m = lambda.size();
  std::vector<std::vector<PairClass>> pairs(m, std::vector<PairClass>(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (lambda[i].size() != m) throw UsageError("lambda matrix is not square");
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) pairs[i][j] = {kind, lambda[i][j], kind == PairKind::Uniform ? lambda[i][j] : 0};
  }
  return pairs;
}

}  // namespace

std::string_view label_name(Label l) {
  for (const auto& [label, name] : kNames)
    if (label == l) return name;
  return "?";
}

std::optional<Label> parse_label(std::string_view name) {
  for (const auto& [label, n] : kNames)
    if (n == name) return label;
  return std::nullopt;
}

PairClass classify_pair(const GMultiset& d) {
  const auto& c = d.counts();
  const Element e = d.group().identity();
  PairClass out;
  out.identity_count = c[e];
  if (std::all_of(c.begin(), c.end(), [&](Count x) { return x == c[0]; })) {
    out.kind = PairKind::Uniform;
    out.lambda = c[0];
    return out;
  }
  if (c[e] != 0) return out;
  std::optional<Count> common;
  for (Element g = 0; g < c.size(); ++g) {
    if (g == e) continue;
    if (!common) common = c[g];
    else if (*common != c[g]) return out;
  }
  out.kind = PairKind::Punctured;
  out.lambda = common.value_or(0);
  return out;
}

LabelSet derive_labels(std::uint32_t v, const std::vector<Count>& sizes, bool all_sets, bool pairwise_disjoint,
                       const std::vector<std::vector<PairClass>>& pairs, const std::vector<PairClass>& rows,
                       const PairClass& grand_union, const std::vector<PairClass>& circular) {
  (void)v;
  LabelSet out;
  const bool equal = equal_entries(sizes);

  if (all_off_diagonal(pairs, PairKind::Uniform)) {
    out[Label::ND_MGPSEDF] = flat_matrix(pairs);
    if (all_sets) {
      out[Label::ND_GPSEDF] = flat_matrix(pairs);
      if (equal) out[Label::ND_PSEDF] = {pairs[0][1].lambda};
    }
  }
  if (all_of_kind(rows, PairKind::Uniform)) {
    out[Label::ND_MGSEDF] = lambdas(rows);
    if (all_sets) {
      out[Label::ND_GSEDF] = lambdas(rows);
      if (equal) out[Label::ND_SEDF] = {rows[0].lambda};
    }
  }
  if (all_sets && equal && all_of_kind(circular, PairKind::Uniform) && equal_entries(lambdas(circular)))
    out[Label::ND_SCEDF] = {circular[0].lambda};

  if (!pairwise_disjoint) return out;

  if (all_off_diagonal(pairs, PairKind::Punctured)) {
    out[Label::C_MGPSEDF] = flat_matrix(pairs);
    if (all_sets) {
      out[Label::C_GPSEDF] = flat_matrix(pairs);
      if (equal) out[Label::C_PSEDF] = {pairs[0][1].lambda};
    }
  }
  if (all_of_kind(rows, PairKind::Punctured)) {
    out[Label::C_MGSEDF] = lambdas(rows);
    if (all_sets) {
      out[Label::C_GSEDF] = lambdas(rows);
      if (equal) out[Label::C_SEDF] = {rows[0].lambda};
    }
  }
  if (all_sets && equal && all_of_kind(circular, PairKind::Punctured) && equal_entries(lambdas(circular)))
    out[Label::C_SCEDF] = {circular[0].lambda};
  if (all_sets && grand_union.kind == PairKind::Punctured) {
    out[Label::C_GEDF] = {grand_union.lambda};
    if (equal) out[Label::C_EDF] = {grand_union.lambda};
  }
  return out;
}

std::vector<std::vector<std::optional<Count>>> Certificate::lambda_matrix() const {
  std::vector<std::vector<std::optional<Count>>> out(m, std::vector<std::optional<Count>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) out[i][j] = 0;
      else if (pairs[i][j].kind != PairKind::NonUniform) out[i][j] = pairs[i][j].lambda;
    }
  return out;
}

Certificate classify_family(const Family& f) {
  const std::size_t m = f.size();
  if (m < 2) throw UsageError("classify: a family needs at least two members, got " + std::to_string(m));
  const Group& g = f.group();
  Certificate c;
  c.v = g.order();
  c.m = m;
  c.sizes = f.member_sizes();
  c.all_sets = f.all_sets();
  c.equal_sizes = equal_entries(c.sizes);

  c.pairwise_disjoint = true;
  for (std::size_t i = 0; i < m && c.pairwise_disjoint; ++i)
    for (std::size_t j = i + 1; j < m && c.pairwise_disjoint; ++j)
      for (Element x : f.member(i).support())
        if (f.member(j).count(x)) {
          c.pairwise_disjoint = false;
          break;
        }

  c.pairs.assign(m, std::vector<PairClass>(m));
  c.rows.resize(m);
  c.circular.resize(m);
  GMultiset grand(g);
  for (std::size_t i = 0; i < m; ++i) {
    GMultiset row(g);
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      GMultiset d = external_difference(f.member(i), f.member(j));
      c.pairs[i][j] = classify_pair(d);
      row += d;
    }
    c.rows[i] = classify_pair(row);
    grand += row;
  }
  c.grand_union = classify_pair(grand);
  for (std::size_t j = 0; j < m; ++j) c.circular[j] = c.pairs[(j + 1) % m][j];
  c.labels = derive_labels(c.v, c.sizes, c.all_sets, c.pairwise_disjoint, c.pairs, c.rows, c.grand_union, c.circular);
  return c;
}

Certificate merged_pair_check(const Family& f, std::size_t i) {
  if (f.size() < 2) throw UsageError("merged pair: a family needs at least two members");
  if (i >= f.size()) throw UsageError("merged pair: index out of range");
  GMultiset rest(f.group());
  for (std::size_t j = 0; j < f.size(); ++j)
    if (j != i) rest += f.member(j);
  return classify_family(Family(f.group(), {f.member(i), rest}));
}

bool Expectation::matches(const Certificate& c) const { return mismatch(c).empty(); }

std::string Expectation::mismatch(const Certificate& c) const {
  if (c.v != v) return "group order " + std::to_string(c.v) + " != expected " + std::to_string(v);
  if (c.sizes != sizes) return "sizes (" + join(c.sizes, ',') + ") != expected (" + join(sizes, ',') + ")";
  for (const auto& [label, params] : labels) {
    auto it = c.labels.find(label);
    if (it == c.labels.end()) return "missing label " + std::string(label_name(label));
    if (it->second != params)
      return std::string(label_name(label)) + " parameters (" + join(it->second, ',') + ") != expected (" +
             join(params, ',') + ")";
  }
  for (const auto& [label, params] : c.labels)
    if (!labels.count(label)) return "unexpected label " + std::string(label_name(label));
  return {};
}

Expectation expect_uniform_pairs(std::uint32_t v, std::vector<Count> sizes,
                                 const std::vector<std::vector<Count>>& lambda, bool all_sets) {
  if (lambda.size() != sizes.size()) throw UsageError("lambda matrix size does not match member count");
  return expect_from_pairs(v, std::move(sizes), pair_grid(lambda, PairKind::Uniform), all_sets, false);
}

Expectation expect_punctured_pairs(std::uint32_t v, std::vector<Count> sizes,
                                   const std::vector<std::vector<Count>>& lambda, bool all_sets) {
  if (lambda.size() != sizes.size()) throw UsageError("lambda matrix size does not match member count");
  return expect_from_pairs(v, std::move(sizes), pair_grid(lambda, PairKind::Punctured), all_sets, true);
}

std::string label_signature(Label l, std::uint32_t v, const std::vector<Count>& sizes,
                            const std::vector<Count>& params) {
  const std::string vm = std::to_string(v) + "," + std::to_string(sizes.size());
  const std::string k0 = sizes.empty() ? "0" : std::to_string(sizes[0]);
  std::ostringstream os;
  switch (l) {
    case Label::ND_PSEDF:
    case Label::ND_SEDF:
    case Label::C_PSEDF:
    case Label::C_SEDF:
    case Label::C_EDF:
      os << "(" << vm << "," << k0 << "," << params.at(0) << ")";
      break;
    case Label::ND_SCEDF:
    case Label::C_SCEDF:
      os << "(" << vm << "," << k0 << ";" << params.at(0) << ")";
      break;
    case Label::ND_GSEDF:
    case Label::ND_MGSEDF:
    case Label::C_GSEDF:
    case Label::C_MGSEDF:
      os << "(" << vm << ";" << join(sizes, ',') << ";" << join(params, ',') << ")";
      break;
    case Label::C_GEDF:
      os << "(" << vm << ";" << join(sizes, ',') << ";" << params.at(0) << ")";
      break;
    case Label::ND_GPSEDF:
    case Label::ND_MGPSEDF:
    case Label::C_GPSEDF:
    case Label::C_MGPSEDF: {
      os << "(" << vm << "," << join(sizes, ',') << ") lambda=[";
      const std::size_t m = sizes.size();
      for (std::size_t i = 0; i < m; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < m; ++j) os << (j ? " " : "") << params.at(i * m + j);
      }
      os << "]";
      break;
    }
  }
  return os.str();
}

nlohmann::json certificate_to_json(const Certificate& c) {
  nlohmann::json j;
  j["v"] = c.v;
  j["m"] = c.m;
  j["sizes"] = c.sizes;
  j["all_sets"] = c.all_sets;
  j["pairwise_disjoint"] = c.pairwise_disjoint;
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& [label, params] : c.labels)
    labels.push_back({{"label", label_name(label)}, {"params", params},
                      {"signature", label_signature(label, c.v, c.sizes, params)}});
  j["labels"] = labels;
  nlohmann::json lm = nlohmann::json::array();
  for (const auto& row : c.lambda_matrix()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(x ? nlohmann::json(*x) : nlohmann::json(nullptr));
    lm.push_back(r);
  }
  j["lambda_matrix"] = lm;
  return j;
}

std::string describe(const Certificate& c) {
  std::ostringstream os;
  os << "v=" << c.v << " m=" << c.m << " sizes=(" << join(c.sizes, ',') << ")"
     << " sets=" << (c.all_sets ? "yes" : "no") << " disjoint=" << (c.pairwise_disjoint ? "yes" : "no") << "\n";
  if (c.labels.empty()) os << "no labels\n";
  for (const auto& [label, params] : c.labels)
    os << label_name(label) << " " << label_signature(label, c.v, c.sizes, params) << "\n";
  return os.str();
}

}  // namespace extdiff

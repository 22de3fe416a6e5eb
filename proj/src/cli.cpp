#include "extdiff/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "extdiff/catalog.hpp"
#include "extdiff/certificate.hpp"
#include "extdiff/constructions.hpp"
#include "extdiff/error.hpp"
#include "extdiff/ooc.hpp"

namespace extdiff {

using nlohmann::json;

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t to_uint(const std::string& s, const char* what) {
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    x = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || s[0] == '-')
    throw UsageError(std::string(what) + ": \"" + s + "\" is not a non-negative integer");
  return x;
}

std::vector<std::uint64_t> uint_list(const std::string& s, const char* what) {
  std::vector<std::uint64_t> out;
  if (s.empty()) return out;
  for (const auto& t : split(s, ',')) out.push_back(to_uint(t, what));
  return out;
}

std::vector<std::vector<std::uint64_t>> uint_table(const std::string& s, const char* what) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& row : split(s, ';')) out.push_back(uint_list(row, what));
  return out;
}

Element element(const Group& g, const std::string& token) {
  auto e = g.parse_element(token);
  if (!e) throw UsageError("\"" + token + "\" is not an element of " + to_string(g.spec()));
  return *e;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot write " + path);
  os << text;
}

// A family file is a bare family object, construct/verify output with a
// "family" key, or a catalog (first entry).
Family load_family_file(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw UsageError(path + ": malformed family file (" + e.what() + ")");
  }
  if (j.contains("entries")) {
    auto all = parse_catalog(j.dump());
    if (all.empty()) throw UsageError(path + ": catalog has no entries");
    return all.front();
  }
  if (j.contains("family")) j = j["family"];
  return family_from_json(j, 0, false);
}

struct FamilySource {
  std::string group, sets, in;

  void add(CLI::App* app, const std::string& suffix = "") {
    app->add_option("--group" + suffix, group, "group, e.g. cyclic:10, dihedral:4, q8, product(cyclic:2,cyclic:2)");
    app->add_option("--sets" + suffix, sets, "members separated by '|', elements by ',', e:c for multiplicity");
    app->add_option("--in" + suffix, in, "family JSON file")->check(CLI::ExistingFile);
  }

  bool given() const { return !in.empty() || !sets.empty(); }

  Family load() const {
    if (!in.empty()) return load_family_file(in);
    if (group.empty() || sets.empty()) throw UsageError("need --in, or --group with --sets");
    return parse_inline_family(Group(parse_group_spec(group)), sets);
  }
};

void print_family(std::ostream& out, const Family& f) {
  out << "group: " << to_string(f.group().spec()) << "\n";
  if (!f.provenance().construction.empty())
    out << "construction: " << f.provenance().construction << " " << f.provenance().params.dump() << "\n";
  out << "members: " << format_inline_family(f) << "\n";
}

// Prints family and recomputed certificate; returns 1 when a claim disagrees.
int report(std::ostream& out, const Family& f, const Expectation* claim, const std::string& format) {
  const Certificate c = classify_family(f);
  std::string mismatch = claim ? claim->mismatch(c) : "";
  if (format == "json") {
    json j{{"family", family_to_json(f)}, {"certificate", certificate_to_json(c)}};
    if (claim) j["claim"] = {{"matches", mismatch.empty()}, {"mismatch", mismatch}};
    out << j.dump(1) << "\n";
  } else {
    print_family(out, f);
    out << describe(c);
    if (claim) out << (mismatch.empty() ? "claim: verified\n" : "claim: MISMATCH " + mismatch + "\n");
  }
  return mismatch.empty() ? 0 : 1;
}

std::vector<std::size_t> parse_choices(const std::string& s, std::size_t m) {
  if (s.empty() || s == "default") return default_chunk_choices(m);
  if (s == "cyclic") return cyclic_chunk_choices(m);
  std::vector<std::size_t> out;
  for (auto x : uint_list(s, "--choices")) {
    if (x == 0) throw UsageError("--choices are 1-based member indices");
    out.push_back(x - 1);
  }
  return out;
}

std::vector<Subgroup> parse_subgroups(const Group& g, const std::string& gens) {
  std::vector<Subgroup> out;
  for (const auto& part : split(gens, ';')) {
    std::vector<Element> es;
    for (const auto& t : split(part, ','))
      if (!t.empty()) es.push_back(element(g, t));
    out.push_back(subgroup_generated(g, es));
  }
  return out;
}

struct ConstructOpts {
  std::string name, chain, eta, factors, divisors, mu, choices, h, weights, ab, k, s, r, gens, reps, n, order, group;
};

Construction construct(const ConstructOpts& o, bool punctured) {
  const std::string& n = o.name;
  if (n == "block") return build_block({uint_list(o.chain, "--chain"), uint_list(o.eta, "--eta")});
  if (n == "block-factors") return build_block_by_factors(uint_list(o.factors, "--factors"), uint_list(o.eta, "--eta"));
  if (n == "psedf") return build_psedf_rational(uint_list(o.factors, "--factors"), uint_list(o.eta, "--eta"));
  if (n == "modular") {
    const auto ab = uint_list(o.ab, "--ab");
    if (ab.size() != 2) throw UsageError("modular: --ab needs a,b");
    ModularTables t;
    if (!o.k.empty()) {
      const auto k = uint_list(o.k, "--k");
      if (k.size() != 2) throw UsageError("modular: --k needs k1,k2");
      t = default_modular_tables(ab[0], ab[1], k[0], k[1]);
    } else {
      t.a = ab[0];
      t.b = ab[1];
    }
    if (!o.s.empty()) t.s = uint_list(o.s, "--s");
    if (!o.r.empty()) t.r = uint_table(o.r, "--r");
    if (t.s.empty() || t.r.empty()) throw UsageError("modular: give --k or both --s and --r");
    return build_modular_two_set(t);
  }
  if (n == "coprime") return build_mod_coprime(to_uint(o.n, "--n"), uint_list(o.divisors, "--divisors"), uint_list(o.mu, "--mu"));
  if (n == "block-multiset") return build_block_multiset(uint_list(o.chain, "--chain"), uint_table(o.weights, "--weights"));
  if (n == "chunk") {
    const auto d = uint_list(o.divisors, "--divisors");
    return build_chunk_family(to_uint(o.n, "--n"), d, parse_choices(o.choices, d.size()));
  }
  if (n == "classical") {
    const auto h = uint_list(o.h, "--h");
    if (h.size() != 4) throw UsageError("classical: --h needs four integers");
    return build_classical(h[0], h[1], h[2], h[3]);
  }
  if (n == "subgroups" || n == "partition") {
    if (o.group.empty()) throw UsageError(n + ": --group is required");
    Group g(parse_group_spec(o.group));
    std::vector<Subgroup> subs;
    if (!o.order.empty()) subs = all_subgroups_of_order(g, to_uint(o.order, "--order"));
    else if (!o.gens.empty()) subs = parse_subgroups(g, o.gens);
    else throw UsageError(n + ": give --generators or --order");
    if (n == "partition") {
      auto pf = build_partition_family(g, subs);
      return punctured ? pf.punctured : pf.subgroups;
    }
    std::vector<std::vector<Element>> reps;
    if (!o.reps.empty())
      for (const auto& part : split(o.reps, ';')) {
        std::vector<Element> es;
        for (const auto& t : split(part, ','))
          if (!t.empty()) es.push_back(element(g, t));
        reps.push_back(es);
      }
    return build_subgroup_family(g, subs, reps);
  }
  throw UsageError("unknown construction \"" + n +
                   "\"; expected block, block-factors, psedf, modular, coprime, block-multiset, chunk, subgroups, "
                   "partition or classical");
}

TransformSpec parse_op(const std::string& op, const Group& g, const std::optional<Family>& other) {
  const auto parts = split(op, ':');
  auto index = [&](std::size_t p) -> std::size_t {
    if (parts.size() <= p) throw UsageError("--op " + op + ": missing member index");
    const auto j = to_uint(parts[p], "--op");
    if (j == 0) throw UsageError("--op member indices are 1-based");
    return j - 1;
  };
  if (parts[0] == "complement") return ComplementOne{index(1)};
  if (parts[0] == "complement-all") return ComplementAll{};
  if (parts[0] == "translate") {
    if (parts.size() != 3) throw UsageError("--op translate:j:g");
    return Translate{index(1), element(g, parts[2])};
  }
  if (parts[0] == "union") {
    if (parts.size() != 3) throw UsageError("--op union:j:g1,g2,...");
    std::vector<Element> gs;
    for (const auto& t : split(parts[2], ',')) gs.push_back(element(g, t));
    return UnionTranslates{index(1), gs};
  }
  if (parts[0] == "merge") {
    if (!other) throw UsageError("--op merge:j needs the second family (--sets2 or --in2)");
    return MergeWith{*other, index(1)};
  }
  throw UsageError("unknown --op \"" + op + "\"");
}

std::vector<IntSequence> sequences_of(const Family& f) {
  std::vector<IntSequence> out;
  for (const auto& m : f.members()) out.push_back(multiset_to_sequence(m));
  return out;
}

void print_code(std::ostream& out, const CodeSet& cs) {
  out << "v=" << cs.v << " N=" << cs.codewords.size() << "\n";
  for (std::size_t i = 0; i < cs.codewords.size(); ++i)
    out << "codeword " << i + 1 << ": " << cs.codewords[i].to_text() << " weight=" << cs.weights[i]
        << " lambda_a=" << cs.lambda_a[i] << "\n";
  if (cs.lambda_c) out << "lambda_c=" << *cs.lambda_c << "\n";
  else out << "lambda_c=absent\n";
}

}  // namespace

Family parse_inline_family(const Group& g, std::string_view text) {
  std::vector<GMultiset> members;
  for (const auto& part : split(text, '|')) {
    GMultiset m(g);
    for (const auto& tok : split(part, ',')) {
      if (tok.empty()) continue;
      const auto colon = tok.rfind(':');
      if (colon != std::string::npos) {
        const Count c = to_uint(tok.substr(colon + 1), "multiplicity");
        if (c == 0) throw UsageError("multiplicity must be positive in \"" + tok + "\"");
        m.add(element(g, tok.substr(0, colon)), c);
      } else {
        m.add(element(g, tok));
      }
    }
    if (m.empty()) throw UsageError("empty member in \"" + std::string(text) + "\"");
    members.push_back(std::move(m));
  }
  return Family(g, std::move(members));
}

std::string format_inline_family(const Family& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += "|";
    bool first = true;
    for (Element e : f.member(i).support()) {
      if (!first) s += ",";
      first = false;
      s += f.group().element_name(e);
      if (f.member(i).count(e) > 1) s += ":" + std::to_string(f.member(i).count(e));
    }
  }
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"External difference families: construct, certify, transform, search and export"};
  app.name("extdiff");
  app.set_help_flag("--help", "print help");  // -h would clash with the classical --h option
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&](CLI::App* a) {
    a->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  ConstructOpts co;
  bool punctured = false;
  std::string out_path;
  auto* c_construct = app.add_subcommand("construct", "build a family from parameters and certify it");
  c_construct->add_option("name", co.name, "construction name")->required();
  c_construct->add_option("--chain", co.chain, "divisor chain a_0,...,a_m");
  c_construct->add_option("--eta", co.eta, "block counts (eta_i or d_i)");
  c_construct->add_option("--factors", co.factors, "c_0,...,c_m");
  c_construct->add_option("--divisors", co.divisors, "divisors a_1,...,a_m");
  c_construct->add_option("--mu", co.mu, "coset counts mu_i");
  c_construct->add_option("--choices", co.choices, "chunk choices: default, cyclic, or 1-based picks per pair");
  c_construct->add_option("--h", co.h, "h1,h2,h3,h4");
  c_construct->add_option("--weights", co.weights, "block weights, rows separated by ';'");
  c_construct->add_option("--ab", co.ab, "a,b for the modular construction");
  c_construct->add_option("--k", co.k, "k1,k2 for the modular construction");
  c_construct->add_option("--s", co.s, "residues mod b");
  c_construct->add_option("--r", co.r, "rows of residues mod a, separated by ';'");
  c_construct->add_option("--generators", co.gens, "subgroup generators, subgroups separated by ';'");
  c_construct->add_option("--reps", co.reps, "coset representatives per subgroup, separated by ';'");
  c_construct->add_option("--order", co.order, "use every subgroup of this order");
  c_construct->add_option("--n", co.n, "group order for coprime and chunk");
  c_construct->add_option("--group", co.group, "group for subgroups and partition");
  c_construct->add_flag("--punctured", punctured, "partition: remove the identity from each subgroup");
  c_construct->add_option("--out", out_path, "write the family as JSON");
  add_format(c_construct);

  FamilySource src, src2;
  std::vector<std::string> expect;
  auto* c_verify = app.add_subcommand("verify", "certify a family");
  src.add(c_verify);
  c_verify->add_option("--expect", expect, "labels that must hold (exit 1 otherwise)");
  add_format(c_verify);

  std::string op, parent, subgroup_gens;
  auto* c_transform = app.add_subcommand("transform", "apply a transform to a certified family");
  src.add(c_transform);
  src2.add(c_transform, "2");
  c_transform->add_option("--op", op,
                          "complement:j, complement-all, translate:j:g, union:j:g1,g2, merge:j, lift")
      ->required();
  c_transform->add_option("--parent", parent, "lift: group the family is lifted into");
  c_transform->add_option("--subgroup", subgroup_gens, "lift: generators of the normal subgroup");
  c_transform->add_option("--out", out_path, "write the result as JSON");
  add_format(c_transform);

  auto* c_product = app.add_subcommand("product", "direct product of two uniform families");
  src.add(c_product);
  src2.add(c_product, "2");
  c_product->add_option("--out", out_path, "write the result as JSON");
  add_format(c_product);

  SearchQuery sq;
  std::string s_group, s_sizes, s_labels;
  std::uint64_t s_lambda = 0;
  bool no_mod = false;
  auto* c_search = app.add_subcommand("search", "exhaustive search for small set families");
  c_search->add_option("--group", s_group, "group")->required();
  c_search->add_option("--m", sq.m, "number of members")->required();
  c_search->add_option("--sizes", s_sizes, "k_1,...,k_m or any")->default_str("any");
  c_search->add_option("--labels", s_labels, "required labels, comma separated")->required();
  c_search->add_option("--lambda", s_lambda, "target for single-parameter labels");
  c_search->add_option("--budget", sq.budget, "node budget");
  c_search->add_flag("--no-translation-mod", no_mod, "keep member translates as distinct results");
  c_search->add_option("--out", out_path, "write the results as a catalog");
  add_format(c_search);

  auto* c_export = app.add_subcommand("export-ooc", "write a cyclic set family as an optical orthogonal code");
  src.add(c_export);
  c_export->add_option("--out", out_path, "code file");
  add_format(c_export);

  std::uint64_t vw_n = 0;
  std::string vw_divisors;
  auto* c_vw = app.add_subcommand("export-vw", "variable-weight code from subgroups a_i Z_v");
  c_vw->add_option("--n", vw_n, "length v")->required();
  c_vw->add_option("--divisors", vw_divisors, "a_1,...,a_m")->required();
  c_vw->add_option("--out", out_path, "code file");
  add_format(c_vw);

  SIOptions si;
  std::string codes;
  bool sample = false;
  auto* c_si = app.add_subcommand("check-si", "shift invariance of a cyclic family or code file");
  src.add(c_si);
  c_si->add_option("--codes", codes, "code file from export-ooc")->check(CLI::ExistingFile);
  c_si->add_option("--max-k", si.max_k, "largest k for k-wise checks");
  c_si->add_option("--limit", si.limit, "shift tuples allowed per k");
  c_si->add_flag("--sample", sample, "sample shift tuples beyond the limit");
  c_si->add_option("--samples", si.samples, "samples per subset when sampling");
  c_si->add_option("--seed", si.seed, "sampling seed");

  std::string action, catalog_path;
  auto* c_catalog = app.add_subcommand("catalog", "verify, list or extend a catalog file");
  c_catalog->add_option("action", action, "verify, list or add")->required()->check(CLI::IsMember({"verify", "list", "add"}));
  c_catalog->add_option("path", catalog_path, "catalog file")->required();
  src.add(c_catalog);
  add_format(c_catalog);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_construct->parsed()) {
      auto c = construct(co, punctured);
      if (!out_path.empty()) write_file(out_path, family_to_json(c.family).dump(1) + "\n");
      return report(out, c.family, &c.expected, format);
    }
    if (c_verify->parsed()) {
      Family f = src.load();
      int code = report(out, f, nullptr, format);
      const Certificate c = classify_family(f);
      for (const auto& name : expect) {
        auto l = parse_label(name);
        if (!l) throw UsageError("unknown label \"" + name + "\"");
        if (!c.has(*l)) {
          err << "expected " << name << " does not hold\n";
          code = 1;
        }
      }
      return code;
    }
    if (c_transform->parsed()) {
      Family f = src.load();
      Construction c = [&] {
        if (op == "lift") {
          if (parent.empty() || subgroup_gens.empty()) throw UsageError("lift needs --parent and --subgroup");
          Group g(parse_group_spec(parent));
          return coset_lift(f, parse_subgroups(g, subgroup_gens).front());
        }
        std::optional<Family> other;
        if (src2.given()) {
          FamilySource s2 = src2;
          if (s2.group.empty()) s2.group = to_string(f.group().spec());
          other = s2.load();
        }
        return transform(f, parse_op(op, f.group(), other));
      }();
      if (!out_path.empty()) write_file(out_path, family_to_json(c.family).dump(1) + "\n");
      return report(out, c.family, &c.expected, format);
    }
    if (c_product->parsed()) {
      auto c = product_family(src.load(), src2.load());
      if (!out_path.empty()) write_file(out_path, family_to_json(c.family).dump(1) + "\n");
      return report(out, c.family, &c.expected, format);
    }
    if (c_search->parsed()) {
      sq.group = parse_group_spec(s_group);
      if (!s_sizes.empty() && s_sizes != "any") sq.sizes = uint_list(s_sizes, "--sizes");
      for (const auto& name : split(s_labels, ',')) {
        auto l = parse_label(name);
        if (!l) throw UsageError("unknown label \"" + name + "\"");
        sq.labels.push_back(*l);
      }
      if (c_search->count("--lambda")) sq.lambda = s_lambda;
      sq.mod_translation = !no_mod;
      auto r = search(sq);
      if (!out_path.empty()) save_catalog(out_path, r.families);
      if (format == "json") {
        json j{{"exhaustive", r.exhaustive}, {"nodes", r.nodes}, {"families", json::array()}};
        for (const auto& f : r.families) j["families"].push_back(family_to_json(f));
        out << j.dump(1) << "\n";
      } else {
        for (const auto& f : r.families) {
          out << format_inline_family(f);
          for (const auto& [l, p] : classify_family(f).labels) out << " " << label_name(l);
          out << "\n";
        }
        out << r.families.size() << " families, " << r.nodes << " nodes, "
            << (r.exhaustive ? "exhaustive" : "NOT exhaustive") << "\n";
      }
      if (!r.exhaustive) {
        err << "error: search budget of " << sq.budget << " nodes exceeded; results above are partial\n";
        return 2;
      }
      return 0;
    }
    if (c_export->parsed()) {
      const Family fam = src.load();
      auto cs = export_ooc(fam);
      const Certificate cert = classify_family(fam);
      if (!out_path.empty()) write_file(out_path, ooc_file_text(cs, false));
      std::optional<OptimalReport> opt;
      const bool equal = std::all_of(cs.weights.begin(), cs.weights.end(), [&](Count w) { return w == cs.weights[0]; });
      if (cs.codewords.size() >= 2 && equal) opt = check_optimal(cs);
      if (format == "json") {
        json j{{"v", cs.v}, {"weights", cs.weights}, {"lambda_a", cs.lambda_a}};
        j["lambda_c"] = cs.lambda_c ? json(*cs.lambda_c) : json(nullptr);
        j["codewords"] = json::array();
        for (const auto& x : cs.codewords) j["codewords"].push_back(x.to_text());
        if (opt) j["optimal"] = {{"optimal", opt->optimal}, {"bound", opt->bound.to_string()}};
        j["certificate"] = certificate_to_json(cert);
        out << j.dump(1) << "\n";
      } else {
        out << describe(cert);
        print_code(out, cs);
        if (opt)
          out << "bound w^2/v=" << opt->bound.to_string() << " " << (opt->optimal ? "optimal" : "not optimal")
              << (opt->recertified.value_or(true) ? "" : " (re-certification FAILED)") << "\n";
      }
      return opt && opt->recertified == false ? 1 : 0;
    }
    if (c_vw->parsed()) {
      if (vw_n == 0 || vw_n > (1u << 24)) throw UsageError("--n out of range");
      auto vw = build_vw_ooc(static_cast<std::uint32_t>(vw_n), uint_list(vw_divisors, "--divisors"));
      if (!out_path.empty()) write_file(out_path, ooc_file_text(vw.code, true));
      const bool ok = vw.params == vw.expected;
      if (format == "json") {
        json ratios = json::array();
        for (const auto& r : vw.params.ratios) ratios.push_back(r.to_string());
        out << json{{"v", vw.code.v},          {"n", vw.params.n},
                    {"weights", vw.params.weights}, {"lambda_a", vw.params.lambda_a},
                    {"lambda_c", vw.params.lambda_c}, {"ratios", ratios},
                    {"matches", ok}}
                   .dump(1)
            << "\n";
      } else {
        print_code(out, vw.code);
        out << "ratios:";
        for (const auto& r : vw.params.ratios) out << " " << r.to_string();
        out << "\n" << (ok ? "claim: verified" : "claim: MISMATCH") << "\n";
      }
      return ok ? 0 : 1;
    }
    if (c_si->parsed()) {
      std::vector<IntSequence> seqs = codes.empty() ? sequences_of(src.load()) : parse_ooc_file(read_file(codes)).codewords;
      if (!c_si->count("--max-k")) si.max_k = std::min<std::size_t>(2, seqs.size());
      si.allow_sampling = sample;
      auto r = si_report(seqs, si);
      auto t = prime_power_condition(seqs);
      json j = si_report_to_json(r);
      j["prime_power_hypothesis"] = {{"holds", t.holds},
                                     {"p", t.p ? json(*t.p) : json(nullptr)},
                                     {"k", t.k},
                                     {"common_period", t.common_period}};
      out << j.dump(1) << "\n";
      return 0;
    }
    if (c_catalog->parsed()) {
      if (action == "add") {
        std::vector<Family> entries;
        if (std::ifstream(catalog_path).good()) entries = load_catalog(catalog_path);
        Family f = src.load();
        const auto key = canonical_form(f).key;
        bool dup = false;
        for (const auto& e : entries) dup = dup || canonical_form(e).key == key;
        if (!dup) entries.push_back(f);
        save_catalog(catalog_path, entries);
        out << (dup ? "already present" : "added") << "; " << entries.size() << " entries\n";
        return 0;
      }
      auto entries = load_catalog(catalog_path);
      if (action == "verify") {
        out << entries.size() << " entries verified\n";
        return 0;
      }
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const Certificate c = classify_family(entries[i]);
        out << i << ": " << to_string(entries[i].group().spec()) << " " << format_inline_family(entries[i]);
        for (const auto& [l, p] : c.labels) out << " " << label_name(l);
        out << "\n";
      }
      return 0;
    }
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace extdiff

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "extdiff/catalog.hpp"
#include "extdiff/certificate.hpp"
#include "extdiff/cli.hpp"
#include "extdiff/constructions.hpp"
#include "extdiff/difference.hpp"
#include "extdiff/error.hpp"
#include "extdiff/ooc.hpp"

namespace py = pybind11;
using namespace extdiff;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_py(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Group group_of(const std::string& spec) { return Group(parse_group_spec(spec)); }

// members as element lists; repeats add multiplicity
Family make_family(const Group& g, const std::vector<std::vector<Element>>& members) {
  std::vector<GMultiset> ms;
  for (const auto& m : members) {
    for (Element e : m)
      if (e >= g.order()) throw UsageError("element " + std::to_string(e) + " is outside the group");
    ms.push_back(GMultiset::from_elements(g, m));
  }
  return Family(g, std::move(ms));
}

std::vector<std::vector<Element>> members_of(const Family& f) {
  std::vector<std::vector<Element>> out;
  for (const auto& m : f.members()) out.push_back(m.elements());
  return out;
}

std::vector<std::size_t> choices_of(const py::object& choices, std::size_t m) {
  if (choices.is_none()) return default_chunk_choices(m);
  if (py::isinstance<py::str>(choices)) {
    const auto s = choices.cast<std::string>();
    if (s == "default") return default_chunk_choices(m);
    if (s == "cyclic") return cyclic_chunk_choices(m);
    throw UsageError("choices must be 'default', 'cyclic' or a list of zero-based indices");
  }
  return choices.cast<std::vector<std::size_t>>();
}

std::vector<IntSequence> sequences(const std::vector<std::string>& texts) {
  std::vector<IntSequence> out;
  for (const auto& t : texts) out.push_back(IntSequence::parse(t));
  return out;
}

py::dict code_dict(const CodeSet& cs) {
  py::dict d;
  d["v"] = cs.v;
  std::vector<std::string> words;
  for (const auto& w : cs.codewords) words.push_back(w.to_text());
  d["codewords"] = words;
  d["weights"] = cs.weights;
  d["lambda_a"] = cs.lambda_a;
  d["lambda_c"] = cs.lambda_c ? py::cast(*cs.lambda_c) : py::none();
  return d;
}

py::tuple rational(const Rational& r) { return py::make_tuple(r.num, r.den); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "External difference families over finite groups";

  // later registrations are tried first, so subclasses follow the base
  auto& base = py::register_exception<Error>(m, "ExtdiffError");
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<StructureError>(m, "StructureError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
  py::register_exception<IntegrityError>(m, "IntegrityError", base.ptr());

  py::class_<Group>(m, "Group")
      .def(py::init(&group_of), py::arg("spec"))
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("identity", &Group::identity)
      .def_property_readonly("spec", [](const Group& g) { return to_string(g.spec()); })
      .def("op", &Group::op)
      .def("inverse", &Group::inverse)
      .def("difference", &Group::difference)
      .def("is_abelian", &Group::is_abelian)
      .def("element_name", &Group::element_name)
      .def("parse_element", &Group::parse_element)
      .def("__repr__", [](const Group& g) { return "Group('" + to_string(g.spec()) + "')"; });

  py::class_<Family>(m, "Family")
      .def(py::init(&make_family), py::arg("group"), py::arg("members"))
      .def_property_readonly("group", &Family::group)
      .def_property_readonly("members", &members_of)
      .def_property_readonly("sizes", &Family::member_sizes)
      .def_property_readonly("all_sets", &Family::all_sets)
      .def_property_readonly("construction", [](const Family& f) { return f.provenance().construction; })
      .def("to_json", [](const Family& f) { return to_py(family_to_json(f)); })
      .def_static("from_json", [](const py::object& o) { return family_from_json(from_py(o), 0, false); })
      .def("inline", &format_inline_family)
      .def("__len__", &Family::size)
      .def("__repr__", [](const Family& f) {
        return "Family('" + to_string(f.group().spec()) + "', '" + format_inline_family(f) + "')";
      });

  py::class_<Construction>(m, "Construction")
      .def_readonly("family", &Construction::family)
      .def_property_readonly("expected",
                             [](const Construction& c) {
                               py::dict d;
                               for (const auto& [l, p] : c.expected.labels) d[py::str(std::string(label_name(l)))] = p;
                               return d;
                             })
      .def("mismatch", [](const Construction& c) { return c.expected.mismatch(classify_family(c.family)); })
      .def("verify", [](const Construction& c) { return c.expected.matches(classify_family(c.family)); });

  m.def("parse_family", [](const std::string& group, const std::string& text) {
    return parse_inline_family(group_of(group), text);
  });
  m.def("certify", [](const Family& f) { return to_py(certificate_to_json(classify_family(f))); });
  m.def("describe", [](const Family& f) { return describe(classify_family(f)); });
  m.def("labels", [](const Family& f) {
    py::dict d;
    for (const auto& [l, p] : classify_family(f).labels) d[py::str(std::string(label_name(l)))] = p;
    return d;
  });
  m.def("external_difference", [](const Family& f, std::size_t i, std::size_t j) {
    return external_difference(f.member(i), f.member(j)).counts();
  });
  m.def("correlation_profile", [](const std::string& x, const std::string& y) {
    return correlation_profile(IntSequence::parse(x), IntSequence::parse(y));
  });

  m.def("build_block", [](std::vector<Int> chain, std::vector<Int> eta) { return build_block({chain, eta}); },
        py::arg("chain"), py::arg("eta"));
  m.def("build_block_by_factors", &build_block_by_factors, py::arg("c"), py::arg("d"));
  m.def("build_psedf_rational", &build_psedf_rational, py::arg("c"), py::arg("d"));
  m.def(
      "build_modular_two_set",
      [](Int a, Int b, std::vector<Int> s, std::vector<std::vector<Int>> r) {
        return build_modular_two_set({a, b, std::move(s), std::move(r)});
      },
      py::arg("a"), py::arg("b"), py::arg("s"), py::arg("r"));
  m.def(
      "build_modular_default",
      [](Int a, Int b, Int k1, Int k2) { return build_modular_two_set(default_modular_tables(a, b, k1, k2)); },
      py::arg("a"), py::arg("b"), py::arg("k1"), py::arg("k2"));
  m.def("build_mod_coprime", &build_mod_coprime, py::arg("v"), py::arg("divisors"), py::arg("mu") = std::vector<Int>{});
  m.def("build_block_multiset", &build_block_multiset, py::arg("chain"), py::arg("weights"));
  m.def(
      "build_chunk_family",
      [](Int n, std::vector<Int> divisors, py::object choices) {
        auto c = choices_of(choices, divisors.size());
        return build_chunk_family(n, divisors, c);
      },
      py::arg("n"), py::arg("divisors"), py::arg("choices") = py::none());
  m.def(
      "chunk_assign",
      [](std::vector<Int> divisors, py::object choices) {
        return chunk_assign(divisors, choices_of(choices, divisors.size()));
      },
      py::arg("divisors"), py::arg("choices") = py::none());
  m.def("build_classical", &build_classical, py::arg("h1"), py::arg("h2"), py::arg("h3"), py::arg("h4"));
  m.def(
      "build_subgroup_family",
      [](const Group& g, const std::vector<std::vector<Element>>& generators,
         const std::vector<std::vector<Element>>& reps) {
        std::vector<Subgroup> subs;
        for (const auto& gens : generators) subs.push_back(subgroup_generated(g, gens));
        return build_subgroup_family(g, subs, reps);
      },
      py::arg("group"), py::arg("generators"), py::arg("reps") = std::vector<std::vector<Element>>{});
  m.def(
      "build_partition_family",
      [](const Group& g, std::size_t order) {
        auto pf = build_partition_family(g, all_subgroups_of_order(g, order));
        return py::make_tuple(pf.subgroups, pf.punctured);
      },
      py::arg("group"), py::arg("order"));
  m.def("product_family", &product_family);

  m.def("complement", [](const Family& f, std::size_t j) { return transform(f, ComplementOne{j}); });
  m.def("complement_all", [](const Family& f) { return transform(f, ComplementAll{}); });
  m.def("translate", [](const Family& f, std::size_t j, Element g) { return transform(f, Translate{j, g}); });
  m.def("union_translates",
        [](const Family& f, std::size_t j, std::vector<Element> gs) { return transform(f, UnionTranslates{j, gs}); });
  m.def("merge", [](const Family& f, const Family& other, std::size_t j) { return transform(f, MergeWith{other, j}); });
  m.def(
      "coset_lift",
      [](const Family& f, const std::string& parent, const std::vector<Element>& generators) {
        Group g = group_of(parent);
        return coset_lift(f, subgroup_generated(g, generators));
      },
      py::arg("family"), py::arg("parent"), py::arg("generators"));

  m.def("export_ooc", [](const Family& f) { return code_dict(export_ooc(f)); });
  m.def("check_optimal", [](const Family& f) {
    auto r = check_optimal(export_ooc(f));
    py::dict d;
    d["optimal"] = r.optimal;
    d["v"] = r.v;
    d["w"] = r.w;
    d["lambda_c"] = r.lambda_c;
    d["bound"] = rational(r.bound);
    d["recertified"] = r.recertified ? py::cast(*r.recertified) : py::none();
    return d;
  });
  m.def(
      "build_vw_ooc",
      [](std::uint32_t v, const std::vector<std::uint64_t>& divisors) {
        auto vw = build_vw_ooc(v, divisors);
        py::dict d = code_dict(vw.code);
        std::vector<py::tuple> ratios;
        for (const auto& r : vw.params.ratios) ratios.push_back(rational(r));
        d["vw_weights"] = vw.params.weights;
        d["vw_lambda_a"] = vw.params.lambda_a;
        d["ratios"] = ratios;
        d["matches"] = vw.params == vw.expected;
        return d;
      },
      py::arg("v"), py::arg("divisors"));
  m.def(
      "si_report",
      [](const std::vector<std::string>& seqs, std::size_t max_k, std::uint64_t limit, bool allow_sampling,
         std::uint64_t seed, std::uint64_t samples) {
        SIOptions o{max_k, limit, allow_sampling, seed, samples};
        return to_py(si_report_to_json(si_report(sequences(seqs), o)));
      },
      py::arg("sequences"), py::arg("max_k") = 2, py::arg("limit") = 10'000'000, py::arg("allow_sampling") = false,
      py::arg("seed") = 1, py::arg("samples") = 100'000);
  m.def("prime_power_condition", [](const std::vector<std::string>& seqs) {
    auto t = prime_power_condition(sequences(seqs));
    py::dict d;
    d["holds"] = t.holds;
    d["p"] = t.p ? py::cast(*t.p) : py::none();
    d["k"] = t.k;
    d["common_period"] = t.common_period;
    return d;
  });
  m.def("sequences", [](const Family& f) {
    std::vector<std::string> out;
    for (const auto& x : f.members()) out.push_back(multiset_to_sequence(x).to_text());
    return out;
  });

  m.def(
      "search",
      [](const std::string& group, std::size_t members, const std::vector<std::string>& labels,
         std::vector<Count> sizes, std::optional<Count> lambda, std::uint64_t budget, bool mod_translation) {
        SearchQuery q;
        q.group = parse_group_spec(group);
        q.m = members;
        q.sizes = std::move(sizes);
        for (const auto& name : labels) {
          auto l = parse_label(name);
          if (!l) throw UsageError("unknown label \"" + name + "\"");
          q.labels.push_back(*l);
        }
        q.lambda = lambda;
        q.budget = budget;
        q.mod_translation = mod_translation;
        auto r = search(q);
        return py::make_tuple(r.families, r.exhaustive, r.nodes);
      },
      py::arg("group"), py::arg("m"), py::arg("labels"), py::arg("sizes") = std::vector<Count>{},
      py::arg("lam") = py::none(), py::arg("budget") = 50'000'000, py::arg("mod_translation") = true);

  m.def("catalog_text", &catalog_text);
  m.def("parse_catalog", &parse_catalog);
  m.def("save_catalog", &save_catalog);
  m.def("load_catalog", &load_catalog);
  m.def("canonical_key", [](const Family& f, bool mod_translation) { return canonical_form(f, mod_translation).key; },
        py::arg("family"), py::arg("mod_translation") = false);
}

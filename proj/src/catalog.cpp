#include "extdiff/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "extdiff/error.hpp"

namespace extdiff {

using nlohmann::json;

json group_spec_to_json(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          return {{"kind", "cyclic"}, {"v", s.v}};
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          json parts = json::array();
          for (const auto& p : s.parts) parts.push_back(group_spec_to_json(p));
          return {{"kind", "product"}, {"parts", parts}};
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          return {{"kind", "dihedral"}, {"n", s.n}};
        } else if constexpr (std::is_same_v<T, Quaternion8Spec>) {
          return {{"kind", "q8"}};
        } else {
          return {{"kind", "table"}, {"order", s.order}, {"table", s.table}};
        }
      },
      spec.kind);
}

GroupSpec group_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw UsageError("group: expected an object with a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cyclic") return GroupSpec::cyclic(j.at("v").get<std::uint32_t>());
  if (kind == "dihedral") return GroupSpec::dihedral(j.at("n").get<std::uint32_t>());
  if (kind == "q8") return GroupSpec::quaternion8();
  if (kind == "product") {
    std::vector<GroupSpec> parts;
    for (const auto& p : j.at("parts")) parts.push_back(group_spec_from_json(p));
    return GroupSpec::product(std::move(parts));
  }
  if (kind == "table") {
    auto rows = j.at("table").get<std::vector<std::vector<Element>>>();
    if (rows.size() != j.at("order").get<std::size_t>()) throw UsageError("group: table size disagrees with order");
    return GroupSpec::table(std::move(rows));
  }
  throw UsageError("group: unknown kind \"" + kind + "\"");
}

json certificate_summary(const Certificate& c) {
  json labels = json::array();
  for (const auto& [label, params] : c.labels) labels.push_back({{"label", label_name(label)}, {"params", params}});
  json lm = json::array();
  for (const auto& row : c.lambda_matrix()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x ? json(*x) : json(nullptr));
    lm.push_back(r);
  }
  return {{"labels", labels}, {"lambda_matrix", lm}};
}

json family_to_json(const Family& f) {
  json j;
  j["group"] = group_spec_to_json(f.group().spec());
  json members = json::array(), mult = json::array();
  for (const auto& m : f.members()) {
    const auto s = m.support();
    members.push_back(s);
    std::vector<Count> c;
    for (Element e : s) c.push_back(m.count(e));
    mult.push_back(c);
  }
  j["members"] = members;
  if (!f.all_sets()) j["multiplicities"] = mult;
  j["provenance"] = {{"construction", f.provenance().construction}, {"params", f.provenance().params}};
  j["certificate"] = certificate_summary(classify_family(f));
  return j;
}

Family family_from_json(const json& j, std::size_t index, bool require_certificate) {
  const std::string where = "catalog entry " + std::to_string(index);
  try {
    Group g(group_spec_from_json(j.at("group")));
    const auto& members = j.at("members");
    std::vector<GMultiset> ms;
    for (std::size_t i = 0; i < members.size(); ++i) {
      GMultiset x(g);
      const auto els = members[i].get<std::vector<std::int64_t>>();
      std::vector<Count> counts(els.size(), 1);
      if (j.contains("multiplicities")) counts = j["multiplicities"].at(i).get<std::vector<Count>>();
      if (counts.size() != els.size()) throw IntegrityError(where + ": multiplicities do not line up with member " + std::to_string(i + 1));
      for (std::size_t k = 0; k < els.size(); ++k) {
        if (els[k] < 0 || els[k] >= g.order())
          throw IntegrityError(where + ": member " + std::to_string(i + 1) + " holds " + std::to_string(els[k]) +
                               ", outside the group");
        if (counts[k] == 0) throw IntegrityError(where + ": zero multiplicity");
        x.add(static_cast<Element>(els[k]), counts[k]);
      }
      ms.push_back(std::move(x));
    }
    Provenance prov;
    if (j.contains("provenance")) {
      prov.construction = j["provenance"].value("construction", "");
      prov.params = j["provenance"].value("params", json::object());
    }
    Family f(g, std::move(ms), std::move(prov));
    const json recomputed = certificate_summary(classify_family(f));
    if (!j.contains("certificate") && !require_certificate) return f;
    if (!j.contains("certificate") || j["certificate"] != recomputed)
      throw IntegrityError(where + ": stored certificate does not match the recomputed one");
    return f;
  } catch (const IntegrityError&) {
    throw;
  } catch (const json::exception& e) {
    throw IntegrityError(where + ": malformed (" + std::string(e.what()) + ")");
  } catch (const Error& e) {
    throw IntegrityError(where + ": " + e.what());
  }
}

std::string catalog_text(const std::vector<Family>& entries) {
  json doc;
  doc["version"] = kCatalogVersion;
  doc["entries"] = json::array();
  for (const auto& f : entries) doc["entries"].push_back(family_to_json(f));
  return doc.dump(1) + "\n";
}

std::vector<Family> parse_catalog(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw IntegrityError(std::string("catalog: not valid JSON (") + e.what() + ")");
  }
  if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer())
    throw IntegrityError("catalog: missing version");
  if (doc["version"].get<int>() != kCatalogVersion)
    throw IntegrityError("catalog: version " + doc["version"].dump() + " is not supported");
  std::vector<Family> out;
  const auto& entries = doc.value("entries", json::array());
  for (std::size_t i = 0; i < entries.size(); ++i) out.push_back(family_from_json(entries[i], i));
  return out;
}

void save_catalog(const std::string& path, const std::vector<Family>& entries) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("catalog: cannot write " + path);
  os << catalog_text(entries);
}

std::vector<Family> load_catalog(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw UsageError("catalog: cannot read " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_catalog(ss.str());
}

namespace {

using Member = std::vector<std::pair<Element, Count>>;

Member as_pairs(const GMultiset& m) {
  Member out;
  for (Element e : m.support()) out.emplace_back(e, m.count(e));
  return out;
}

Member least_translate(const GMultiset& m) {
  Member best = as_pairs(m);
  for (Element g = 0; g < m.group().order(); ++g) {
    Member t = as_pairs(m.translated(g));
    if (t < best) best = std::move(t);
  }
  return best;
}

Count weight(const Member& m) {
  Count s = 0;
  for (const auto& [e, c] : m) s += c;
  return s;
}

}  // namespace

CanonicalForm canonical_form(const Family& f, bool mod_translation) {
  CanonicalForm out{f.group().spec(), {}, {}};
  for (const auto& m : f.members()) out.members.push_back(mod_translation ? least_translate(m) : as_pairs(m));
  std::sort(out.members.begin(), out.members.end(), [](const Member& a, const Member& b) {
    const Count wa = weight(a), wb = weight(b);
    return wa != wb ? wa < wb : a < b;
  });
  json key{{"group", group_spec_to_json(out.group)}, {"members", out.members}};
  out.key = key.dump();
  return out;
}

namespace {

constexpr Count kNoBound = std::numeric_limits<Count>::max();

bool order_dependent(Label l) { return l == Label::ND_SCEDF || l == Label::C_SCEDF; }

bool classical(Label l) { return label_name(l).substr(0, 2) == "C-"; }

bool single_param(Label l) {
  switch (l) {
    case Label::ND_PSEDF:
    case Label::ND_SEDF:
    case Label::ND_SCEDF:
    case Label::C_PSEDF:
    case Label::C_SEDF:
    case Label::C_SCEDF:
    case Label::C_EDF:
    case Label::C_GEDF:
      return true;
    default:
      return false;
  }
}

bool equal_size_label(Label l) {
  switch (l) {
    case Label::ND_PSEDF:
    case Label::ND_SEDF:
    case Label::ND_SCEDF:
    case Label::C_PSEDF:
    case Label::C_SEDF:
    case Label::C_SCEDF:
    case Label::C_EDF:
      return true;
    default:
      return false;
  }
}

enum class Scope { Pair, Row, Grand, Circular };

Scope scope_of(Label l) {
  switch (l) {
    case Label::ND_PSEDF:
    case Label::ND_GPSEDF:
    case Label::ND_MGPSEDF:
    case Label::C_PSEDF:
    case Label::C_GPSEDF:
    case Label::C_MGPSEDF:
      return Scope::Pair;
    case Label::ND_SEDF:
    case Label::ND_GSEDF:
    case Label::ND_MGSEDF:
    case Label::C_SEDF:
    case Label::C_GSEDF:
    case Label::C_MGSEDF:
      return Scope::Row;
    case Label::ND_SCEDF:
    case Label::C_SCEDF:
      return Scope::Circular;
    default:
      return Scope::Grand;
  }
}

// Upper bounds on running difference counts implied by the requested labels
// for one size profile. Empty optional: the profile cannot work.
struct Bounds {
  std::vector<std::vector<Count>> pair;  // pair[i][j], i < j, on Δ(A_i, A_j)
  std::vector<Count> row;
  Count grand = kNoBound;
  bool disjoint = false;
};

std::optional<Count> ratio(Count num, Count den) {
  if (den == 0 || num % den) return std::nullopt;
  return num / den;
}

std::optional<Bounds> bounds_for(const SearchQuery& q, std::uint32_t v, const std::vector<Count>& k) {
  const std::size_t m = k.size();
  Bounds b;
  b.pair.assign(m, std::vector<Count>(m, kNoBound));
  b.row.assign(m, kNoBound);
  const bool equal = std::all_of(k.begin(), k.end(), [&](Count x) { return x == k[0]; });
  for (Label l : q.labels) {
    if (equal_size_label(l) && !equal) return std::nullopt;
    const bool c = classical(l);
    b.disjoint = b.disjoint || c;
    const Count den = c ? v - 1 : v;
    auto target = [&](Count natural_num) -> std::optional<Count> {
      auto r = ratio(natural_num, den);
      if (q.lambda && single_param(l)) {
        if (!r || *r != *q.lambda) return std::nullopt;
      }
      return r;
    };
    switch (scope_of(l)) {
      case Scope::Pair:
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = i + 1; j < m; ++j) {
            auto t = target(k[i] * k[j]);
            if (!t) return std::nullopt;
            b.pair[i][j] = std::min(b.pair[i][j], *t);
          }
        break;
      case Scope::Circular:
        for (std::size_t j = 0; j < m; ++j) {
          const std::size_t i = (j + 1) % m;
          auto t = target(k[i] * k[j]);
          if (!t) return std::nullopt;
          auto& slot = b.pair[std::min(i, j)][std::max(i, j)];
          slot = std::min(slot, *t);
        }
        break;
      case Scope::Row:
        for (std::size_t i = 0; i < m; ++i) {
          Count others = 0;
          for (std::size_t j = 0; j < m; ++j)
            if (j != i) others += k[j];
          auto t = target(k[i] * others);
          if (!t) return std::nullopt;
          b.row[i] = std::min(b.row[i], *t);
        }
        break;
      case Scope::Grand: {
        Count total = 0;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j)
            if (i != j) total += k[i] * k[j];
        auto t = target(total);
        if (!t) return std::nullopt;
        b.grand = std::min(b.grand, *t);
        break;
      }
    }
  }
  return b;
}

double binom(std::uint32_t n, Count k) {
  double r = 1;
  for (Count i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

class Searcher {
 public:
  Searcher(const SearchQuery& q, const Group& g, std::vector<Count> k, Bounds b, SearchResult& res,
           std::set<std::string>& seen)
      : q_(q), g_(g), k_(std::move(k)), b_(std::move(b)), res_(res), seen_(seen) {
    const std::size_t m = k_.size(), v = g_.order();
    members_.assign(m, {});
    pair_.assign(m, std::vector<std::vector<Count>>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (b_.pair[i][j] != kNoBound) pair_[i][j].assign(v, 0);
    row_.assign(m, std::vector<Count>(v, 0));
    grand_.assign(v, 0);
    used_.assign(v, 0);
    ordered_ = std::none_of(q_.labels.begin(), q_.labels.end(), order_dependent);
  }

  void run() { place(0, 0); }

 private:
  bool budget_left() {
    if (res_.nodes >= q_.budget) {
      res_.exhaustive = false;
      return false;
    }
    ++res_.nodes;
    return true;
  }

  // Adds or removes x in member j, returning false if a bound is exceeded
  // (the counts are updated either way so removal can mirror it).
  bool apply(std::size_t j, Element x, int sign) {
    bool ok = true;
    const bool track_rows = any_row(), track_grand = b_.grand != kNoBound;
    for (std::size_t i = 0; i < j; ++i)
      for (Element a : members_[i]) {
        const Element d = g_.difference(a, x);  // in Δ(A_i, A_j)
        const Element e = g_.inverse(d);         // in Δ(A_j, A_i)
        if (!pair_[i][j].empty()) ok &= bump(pair_[i][j][d], sign, b_.pair[i][j]);
        if (track_rows) {
          ok &= bump(row_[i][d], sign, b_.row[i]);
          ok &= bump(row_[j][e], sign, b_.row[j]);
        }
        if (track_grand) {
          ok &= bump(grand_[d], sign, b_.grand);
          ok &= bump(grand_[e], sign, b_.grand);
        }
      }
    return ok;
  }

  bool any_row() const {
    return std::any_of(b_.row.begin(), b_.row.end(), [](Count c) { return c != kNoBound; });
  }

  static bool bump(Count& c, int sign, Count bound) {
    if (sign > 0) return ++c <= bound;
    --c;
    return true;
  }

  void place(std::size_t j, Element start) {
    if (!res_.exhaustive) return;
    if (j == k_.size()) {
      finish();
      return;
    }
    if (members_[j].size() == k_[j]) {
      place(j + 1, 0);
      return;
    }
    const std::size_t pos = members_[j].size();
    const bool tie_break = ordered_ && j > 0 && k_[j] == k_[j - 1];
    for (Element x = start; x < g_.order(); ++x) {
      // room for the rest of the member
      if (g_.order() - x < k_[j] - pos) break;
      if (b_.disjoint && used_[x]) continue;
      if (tie_break && !prefix_ok(j, pos, x)) continue;
      if (q_.mod_translation && j == 0 && pos == 0 && g_.identity() == 0 && x != 0) {
        // some translate of the whole family puts the identity in the first member
        break;
      }
      if (!budget_left()) return;
      members_[j].push_back(x);
      ++used_[x];
      const bool ok = apply(j, x, +1);
      if (ok) place(j, x + 1);
      apply(j, x, -1);
      --used_[x];
      members_[j].pop_back();
      if (!res_.exhaustive) return;
    }
  }

  // member j stays lexicographically >= member j-1
  bool prefix_ok(std::size_t j, std::size_t pos, Element x) const {
    const auto& prev = members_[j - 1];
    for (std::size_t p = 0; p < pos; ++p)
      if (members_[j][p] != prev[p]) return true;
    return x >= prev[pos];
  }

  void finish() {
    std::vector<std::vector<Element>> sets(members_.begin(), members_.end());
    Family f = Family::from_sets(g_, sets, {"search", {{"sizes", k_}}});
    const Certificate c = classify_family(f);
    for (Label l : q_.labels) {
      if (!c.has(l)) return;
      if (q_.lambda && single_param(l) && c.params(l) != std::vector<Count>{*q_.lambda}) return;
    }
    const auto key = canonical_form(f, q_.mod_translation).key;
    if (seen_.insert(key).second) res_.families.push_back(std::move(f));
  }

  const SearchQuery& q_;
  const Group& g_;
  std::vector<Count> k_;
  Bounds b_;
  SearchResult& res_;
  std::set<std::string>& seen_;
  std::vector<std::vector<Element>> members_;
  std::vector<std::vector<std::vector<Count>>> pair_;
  std::vector<std::vector<Count>> row_;
  std::vector<Count> grand_;
  std::vector<int> used_;
  bool ordered_ = true;
};

void profiles(std::size_t m, Count lo, Count hi, std::vector<Count>& cur, std::vector<std::vector<Count>>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  for (Count k = lo; k <= hi; ++k) {
    cur.push_back(k);
    profiles(m, k, hi, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SearchResult search(const SearchQuery& q) {
  if (q.m < 2) throw UsageError("search: need m >= 2");
  if (!q.sizes.empty() && q.sizes.size() != q.m) throw UsageError("search: size profile must have m entries");
  const Group g(q.group);
  for (Count k : q.sizes)
    if (k == 0 || k > g.order()) throw UsageError("search: member sizes must lie in [1, v]");
  std::vector<std::vector<Count>> todo;
  if (!q.sizes.empty()) {
    todo.push_back(q.sizes);
  } else {
    std::vector<Count> cur;
    profiles(q.m, 1, g.order(), cur, todo);
  }
  SearchResult res;
  std::set<std::string> seen;
  for (const auto& k : todo) {
    auto b = bounds_for(q, g.order(), k);
    if (!b) continue;
    if (b->disjoint && std::accumulate(k.begin(), k.end(), Count{0}) > g.order()) continue;
    double space = 1;
    for (Count x : k) space *= binom(g.order(), x);
    res.space_estimate += space;
    Searcher(q, g, k, std::move(*b), res, seen).run();
    if (!res.exhaustive) break;
  }
  return res;
}

}  // namespace extdiff

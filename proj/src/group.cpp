#include "extdiff/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "extdiff/error.hpp"

namespace extdiff {

namespace {

// Groups up to this order keep a full Cayley table; larger structural groups
// compute products on the fly.
constexpr std::uint32_t kTableCutoff = 1024;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;
constexpr std::uint32_t kAssociativityCheckBound = 64;

// Q8 unit products: kQuatUnit[u][w] = unit index, kQuatNeg[u][w] = sign flip.
// Units are ordered 1, i, j, k.
constexpr std::uint32_t kQuatUnit[4][4] = {
    {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr bool kQuatNeg[4][4] = {{false, false, false, false},
                                 {false, true, false, true},
                                 {false, true, true, false},
                                 {false, false, true, true}};
const char* const kQuatNames[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};

bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

GroupSpec GroupSpec::table(std::vector<std::vector<Element>> rows) {
  TableSpec t;
  t.order = static_cast<std::uint32_t>(rows.size());
  t.table = std::move(rows);
  return {std::move(t)};
}

struct Group::Impl {
  GroupSpec spec;
  std::uint32_t order = 0;
  Element identity = 0;
  std::vector<Element> inverse;
  std::vector<Element> table;  // row-major order x order, empty above kTableCutoff
  std::vector<Group> parts;    // ProductSpec components
  std::vector<std::uint32_t> radix;
  bool abelian = true;

  Element structural_op(Element a, Element b) const;
};

Element Group::Impl::structural_op(Element a, Element b) const {
  return std::visit(
      [&](const auto& s) -> Element {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          return static_cast<Element>((std::uint64_t{a} + b) % s.v);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          Element result = 0;
          Element scale = 1;
          for (std::size_t i = parts.size(); i-- > 0;) {
            const std::uint32_t r = radix[i];
            const Element x = a % r;
            const Element y = b % r;
            a /= r;
            b /= r;
            result += parts[i].op(x, y) * scale;
            scale *= r;
          }
          return result;
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          const std::uint32_t n = s.n;
          const std::uint32_t x = a / 2, sa = a % 2;
          const std::uint32_t y = b / 2, tb = b % 2;
          const std::uint32_t rot = sa ? (x + n - y) % n : (x + y) % n;
          return 2 * rot + (sa ^ tb);
        } else if constexpr (std::is_same_v<T, Quaternion8Spec>) {
          const std::uint32_t u = a / 2, w = b / 2;
          const bool neg = ((a % 2) != 0) ^ ((b % 2) != 0) ^ kQuatNeg[u][w];
          return 2 * kQuatUnit[u][w] + (neg ? 1 : 0);
        } else {
          return s.table[a][b];
        }
      },
      spec.kind);
}

namespace {

void validate_table(const TableSpec& t, Element& identity_out) {
  const std::uint32_t v = t.order;
  if (v == 0) throw StructureError("table group: order must be positive");
  if (t.table.size() != v) throw StructureError("table group: expected " + std::to_string(v) + " rows");
  for (std::uint32_t a = 0; a < v; ++a) {
    if (t.table[a].size() != v)
      throw StructureError("table group: row " + std::to_string(a) + " has wrong length");
    for (Element x : t.table[a])
      if (x >= v) throw StructureError("table group: entry out of range in row " + std::to_string(a));
  }
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(v);
  for (std::uint32_t a = 0; a < v; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t b = 0; b < v; ++b) {
      if (seen[t.table[a][b]]++)
        throw StructureError("table group: not a Latin square (row " + std::to_string(a) + ")");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t b = 0; b < v; ++b) {
      if (seen[t.table[b][a]]++)
        throw StructureError("table group: not a Latin square (column " + std::to_string(a) + ")");
    }
  }
  std::optional<Element> identity;
  for (Element e = 0; e < v && !identity; ++e) {
    bool ok = true;
    for (Element g = 0; g < v && ok; ++g) ok = t.table[e][g] == g && t.table[g][e] == g;
    if (ok) identity = e;
  }
  if (!identity) throw StructureError("table group: identity axiom fails (no two-sided identity)");
  for (Element a = 0; a < v; ++a) {
    bool found = false;
    for (Element b = 0; b < v && !found; ++b) found = t.table[a][b] == *identity && t.table[b][a] == *identity;
    if (!found) throw StructureError("table group: inverse axiom fails for element " + std::to_string(a));
  }
  if (v <= kAssociativityCheckBound) {
    for (Element a = 0; a < v; ++a)
      for (Element b = 0; b < v; ++b)
        for (Element c = 0; c < v; ++c)
          if (t.table[t.table[a][b]][c] != t.table[a][t.table[b][c]])
            throw StructureError("table group: associativity fails at (" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + ")");
  }
  identity_out = *identity;
}

}  // namespace

Group::Group(const GroupSpec& spec) {
  auto impl = std::make_shared<Impl>();
  impl->spec = spec;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          if (s.v == 0) throw StructureError("cyclic group: order must be positive");
          if (s.v > kMaxOrder) throw CapacityError("cyclic group: order too large");
          impl->order = s.v;
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          if (s.parts.empty()) throw StructureError("direct product: needs at least one factor");
          std::uint64_t total = 1;
          for (const auto& p : s.parts) {
            impl->parts.emplace_back(p);
            impl->radix.push_back(impl->parts.back().order());
            total *= impl->parts.back().order();
            if (total > kMaxOrder) throw CapacityError("direct product: order too large");
            impl->abelian = impl->abelian && impl->parts.back().is_abelian();
          }
          impl->order = static_cast<std::uint32_t>(total);
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          if (s.n == 0) throw StructureError("dihedral group: n must be positive");
          if (2 * std::uint64_t{s.n} > kMaxOrder) throw CapacityError("dihedral group: order too large");
          impl->order = 2 * s.n;
          impl->abelian = s.n <= 2;
        } else if constexpr (std::is_same_v<T, Quaternion8Spec>) {
          impl->order = 8;
          impl->abelian = false;
        } else {
          validate_table(s, impl->identity);
          impl->order = s.order;
        }
      },
      spec.kind);

  const std::uint32_t v = impl->order;
  if (v <= kTableCutoff) {
    impl->table.resize(std::size_t{v} * v);
    for (Element a = 0; a < v; ++a)
      for (Element b = 0; b < v; ++b) impl->table[std::size_t{a} * v + b] = impl->structural_op(a, b);
  }
  if (std::holds_alternative<TableSpec>(spec.kind)) {
    for (Element a = 0; a < v && impl->abelian; ++a)
      for (Element b = a + 1; b < v && impl->abelian; ++b)
        impl->abelian = impl->table[std::size_t{a} * v + b] == impl->table[std::size_t{b} * v + a];
  }

  impl->inverse.resize(v);
  if (std::holds_alternative<ProductSpec>(spec.kind)) {
    for (Element a = 0; a < v; ++a) {
      Element rest = a, result = 0, scale = 1;
      for (std::size_t i = impl->parts.size(); i-- > 0;) {
        const std::uint32_t r = impl->radix[i];
        result += impl->parts[i].inverse(rest % r) * scale;
        rest /= r;
        scale *= r;
      }
      impl->inverse[a] = result;
    }
  } else if (std::holds_alternative<CyclicSpec>(spec.kind)) {
    for (Element a = 0; a < v; ++a) impl->inverse[a] = (v - a) % v;
  } else if (const auto* dih = std::get_if<DihedralSpec>(&spec.kind)) {
    // Rotations invert, reflections are involutions.
    for (Element a = 0; a < v; ++a) impl->inverse[a] = a % 2 ? a : 2 * ((dih->n - a / 2) % dih->n);
  } else if (std::holds_alternative<Quaternion8Spec>(spec.kind)) {
    for (Element a = 0; a < v; ++a) impl->inverse[a] = a < 2 ? a : a ^ 1u;
  } else {
    for (Element a = 0; a < v; ++a) {
      for (Element b = 0; b < v; ++b) {
        if (impl->structural_op(a, b) == impl->identity) {
          impl->inverse[a] = b;
          break;
        }
      }
    }
  }
  impl_ = std::move(impl);
}

const GroupSpec& Group::spec() const { return impl_->spec; }
std::uint32_t Group::order() const { return impl_->order; }
Element Group::identity() const { return impl_->identity; }
bool Group::is_abelian() const { return impl_->abelian; }
bool Group::is_cyclic_spec() const { return std::holds_alternative<CyclicSpec>(impl_->spec.kind); }

Element Group::op(Element a, Element b) const {
  if (!impl_->table.empty()) return impl_->table[std::size_t{a} * impl_->order + b];
  return impl_->structural_op(a, b);
}

Element Group::inverse(Element a) const { return impl_->inverse[a]; }

bool Group::operator==(const Group& other) const {
  return impl_ == other.impl_ || impl_->spec == other.impl_->spec;
}

std::string Group::element_name(Element e) const {
  return std::visit(
      [&](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ProductSpec>) {
          std::vector<std::string> names(impl_->parts.size());
          Element rest = e;
          for (std::size_t i = impl_->parts.size(); i-- > 0;) {
            names[i] = impl_->parts[i].element_name(rest % impl_->radix[i]);
            rest /= impl_->radix[i];
          }
          std::string out = "(";
          for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
          return out + ")";
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          const std::uint32_t a = e / 2;
          const bool b = e % 2;
          if (a == 0) return b ? "b" : "e";
          std::string out = a == 1 ? "a" : "a^" + std::to_string(a);
          return b ? out + "b" : out;
        } else if constexpr (std::is_same_v<T, Quaternion8Spec>) {
          return kQuatNames[e];
        } else {
          return std::to_string(e);
        }
      },
      impl_->spec.kind);
}

std::optional<Element> Group::parse_element(std::string_view token) const {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  if (token.empty()) return std::nullopt;
  const bool named = !std::holds_alternative<CyclicSpec>(impl_->spec.kind) &&
                     !std::holds_alternative<TableSpec>(impl_->spec.kind);
  if (named) {
    for (Element e = 0; e < impl_->order; ++e)
      if (element_name(e) == token) return e;
  }
  std::uint64_t idx = 0;
  if (parse_uint(token, idx) && idx < impl_->order) return static_cast<Element>(idx);
  return std::nullopt;
}

Group build_group(const GroupSpec& spec) { return Group(spec); }

std::string to_string(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          return "cyclic:" + std::to_string(s.v);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          std::string out = "product(";
          for (std::size_t i = 0; i < s.parts.size(); ++i) out += (i ? "," : "") + to_string(s.parts[i]);
          return out + ")";
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          return "dihedral:" + std::to_string(s.n);
        } else if constexpr (std::is_same_v<T, Quaternion8Spec>) {
          return "q8";
        } else {
          return "table:" + std::to_string(s.order);
        }
      },
      spec.kind);
}

namespace {

struct SpecParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("bad group spec '" + std::string(text) + "': " + what);
  }

  bool consume(std::string_view word) {
    if (text.substr(pos, word.size()) == word) {
      pos += word.size();
      return true;
    }
    return false;
  }

  std::uint32_t number() {
    std::size_t end = pos;
    while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
    std::uint64_t value = 0;
    if (!parse_uint(text.substr(pos, end - pos), value) || value > kMaxOrder) fail("expected a number");
    pos = end;
    return static_cast<std::uint32_t>(value);
  }

  GroupSpec parse() {
    if (consume("cyclic:")) return GroupSpec::cyclic(number());
    if (consume("dihedral:")) return GroupSpec::dihedral(number());
    if (consume("q8") || consume("Q8")) return GroupSpec::quaternion8();
    if (consume("product(")) {
      std::vector<GroupSpec> parts;
      do {
        parts.push_back(parse());
      } while (consume(","));
      if (!consume(")")) fail("expected ')'");
      return GroupSpec::product(std::move(parts));
    }
    fail("unknown group kind");
  }
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  SpecParser p{text};
  GroupSpec spec = p.parse();
  if (p.pos != text.size()) p.fail("trailing characters");
  return spec;
}

bool Subgroup::contains(Element e) const { return std::binary_search(elements.begin(), elements.end(), e); }

namespace {

std::vector<Element> closure(const Group& g, std::span<const Element> generators) {
  const std::uint32_t v = g.order();
  std::vector<char> member(v, 0);
  std::vector<Element> elems{g.identity()};
  member[g.identity()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element gen : generators) {
      const Element y = g.op(elems[i], gen);
      if (!member[y]) {
        member[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

void check_index(const Group& g, Element e) {
  if (e >= g.order()) throw UsageError("element index " + std::to_string(e) + " out of range");
}

}  // namespace

Subgroup subgroup_generated(const Group& g, std::span<const Element> generators) {
  for (Element e : generators) check_index(g, e);
  Subgroup h{g, closure(g, generators), {generators.begin(), generators.end()}};
  return h;
}

ProductSet product_set(const Subgroup& h, const Subgroup& k) {
  if (!(h.parent == k.parent)) throw UsageError("product_set: subgroups belong to different groups");
  const Group& g = h.parent;
  std::vector<char> member(g.order(), 0);
  ProductSet out;
  for (Element x : h.elements)
    for (Element y : k.elements) {
      const Element z = g.op(x, y);
      if (!member[z]) {
        member[z] = 1;
        out.elements.push_back(z);
      }
    }
  std::sort(out.elements.begin(), out.elements.end());
  for (Element x : h.elements) out.intersection_size += k.contains(x) ? 1 : 0;
  if (out.elements.size() * out.intersection_size != h.order() * k.order())
    throw std::logic_error("product_set: |HK||H∩K| != |H||K|");
  out.is_all_of_group = out.elements.size() == g.order();
  return out;
}

std::vector<Element> coset(const Subgroup& h, Element g) {
  check_index(h.parent, g);
  std::vector<Element> out;
  out.reserve(h.elements.size());
  for (Element x : h.elements) out.push_back(h.parent.op(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_partition(const Group& g, std::span<const Subgroup> subgroups) {
  std::vector<std::uint32_t> cover(g.order(), 0);
  for (const auto& h : subgroups) {
    if (!(h.parent == g)) throw UsageError("is_partition: subgroup from a different group");
    for (Element x : h.elements) ++cover[x];
  }
  for (Element x = 0; x < g.order(); ++x)
    if (x != g.identity() && cover[x] != 1) return false;
  return true;
}

std::vector<Subgroup> all_subgroups_of_order(const Group& g, std::size_t k, std::uint32_t max_group_order) {
  if (g.order() > max_group_order)
    throw CapacityError("all_subgroups_of_order: group order " + std::to_string(g.order()) +
                        " exceeds exhaustive bound " + std::to_string(max_group_order));
  std::vector<Subgroup> found;
  if (k == 0 || g.order() % k != 0) return found;

  // Breadth-first over subgroups whose order divides k; every subgroup of
  // order k is reached by adding one generator at a time.
  std::set<std::vector<Element>> seen;
  std::deque<Subgroup> frontier;
  Subgroup trivial{g, {g.identity()}, {}};
  seen.insert(trivial.elements);
  frontier.push_back(trivial);
  while (!frontier.empty()) {
    Subgroup s = std::move(frontier.front());
    frontier.pop_front();
    if (s.order() == k) {
      found.push_back(std::move(s));
      continue;
    }
    std::vector<char> in_s(g.order(), 0);
    for (Element x : s.elements) in_s[x] = 1;
    for (Element x = 0; x < g.order(); ++x) {
      if (in_s[x]) continue;
      std::vector<Element> gens = s.generators;
      gens.push_back(x);
      std::vector<Element> elems = closure(g, gens);
      if (k % elems.size() != 0) continue;
      if (seen.insert(elems).second) frontier.push_back(Subgroup{g, std::move(elems), std::move(gens)});
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; });
  return found;
}

bool is_normal(const Subgroup& h) {
  const Group& g = h.parent;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y : h.elements)
      if (!h.contains(g.op(g.op(x, y), g.inverse(x)))) return false;
  return true;
}

Quotient quotient(const Subgroup& normal) {
  const Group& g = normal.parent;
  if (!is_normal(normal)) throw UsageError("quotient: subgroup is not normal");
  constexpr Element kUnassigned = std::numeric_limits<Element>::max();
  std::vector<Element> coset_index(g.order(), kUnassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_index[x] != kUnassigned) continue;
    const auto q = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element y : normal.elements) coset_index[g.op(x, y)] = q;
  }
  const auto n = static_cast<std::uint32_t>(reps.size());
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (Element p = 0; p < n; ++p)
    for (Element q = 0; q < n; ++q) rows[p][q] = coset_index[g.op(reps[p], reps[q])];
  return Quotient{Group(GroupSpec::table(std::move(rows))), normal, std::move(reps), std::move(coset_index)};
}

}  // namespace extdiff

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace extdiff {

// Canonical index of a group element, always in [0, order).
using Element = std::uint32_t;

struct GroupSpec;

struct CyclicSpec {
  std::uint32_t v = 1;
  bool operator==(const CyclicSpec&) const = default;
};

// Elements are mixed-radix tuples, first component most significant.
struct ProductSpec {
  std::vector<GroupSpec> parts;
  bool operator==(const ProductSpec& other) const;
};

// D_{2n}: element alpha^a beta^b has index 2a + b.
struct DihedralSpec {
  std::uint32_t n = 1;
  bool operator==(const DihedralSpec&) const = default;
};

// Q_8 in the fixed order 1, -1, i, -i, j, -j, k, -k.
struct Quaternion8Spec {
  bool operator==(const Quaternion8Spec&) const = default;
};

struct TableSpec {
  std::uint32_t order = 0;
  std::vector<std::vector<Element>> table;
  bool operator==(const TableSpec&) const = default;
};

struct GroupSpec {
  std::variant<CyclicSpec, ProductSpec, DihedralSpec, Quaternion8Spec, TableSpec> kind;

  static GroupSpec cyclic(std::uint32_t v) { return {CyclicSpec{v}}; }
  static GroupSpec product(std::vector<GroupSpec> parts) { return {ProductSpec{std::move(parts)}}; }
  static GroupSpec dihedral(std::uint32_t n) { return {DihedralSpec{n}}; }
  static GroupSpec quaternion8() { return {Quaternion8Spec{}}; }
  static GroupSpec table(std::vector<std::vector<Element>> rows);

  bool operator==(const GroupSpec&) const = default;
};

inline bool ProductSpec::operator==(const ProductSpec& other) const { return parts == other.parts; }

// Compact text form used by the CLI: "cyclic:10", "dihedral:4", "q8",
// "product(cyclic:2,cyclic:2)". Tables have no text form.
std::string to_string(const GroupSpec& spec);
GroupSpec parse_group_spec(std::string_view text);

// An immutable finite group. Copies share the same underlying tables.
class Group {
 public:
  // Throws StructureError naming the failed axiom when a table is not a group.
  explicit Group(const GroupSpec& spec);

  const GroupSpec& spec() const;
  std::uint32_t order() const;
  Element identity() const;
  Element op(Element a, Element b) const;
  Element inverse(Element a) const;
  // a * b^{-1}; the difference used everywhere in the library.
  Element difference(Element a, Element b) const { return op(a, inverse(b)); }
  bool is_abelian() const;
  bool is_cyclic_spec() const;

  std::string element_name(Element e) const;
  // Accepts a canonical index or an element name ("-i", "a^2b", "(1,0)").
  std::optional<Element> parse_element(std::string_view token) const;

  bool operator==(const Group& other) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

Group build_group(const GroupSpec& spec);

struct Subgroup {
  Group parent;
  std::vector<Element> elements;  // sorted
  std::vector<Element> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(Element e) const;
};

Subgroup subgroup_generated(const Group& g, std::span<const Element> generators);

struct ProductSet {
  std::vector<Element> elements;  // sorted, distinct
  bool is_all_of_group = false;
  std::size_t intersection_size = 0;
};

// HK = {hk}. Throws UsageError when H and K live in different groups.
ProductSet product_set(const Subgroup& h, const Subgroup& k);

// Left coset g*H, sorted.
std::vector<Element> coset(const Subgroup& h, Element g);

// True iff every non-identity element lies in exactly one of the subgroups.
bool is_partition(const Group& g, std::span<const Subgroup> subgroups);

inline constexpr std::uint32_t kDefaultSubgroupSearchBound = 256;

// Every subgroup of order k, sorted by element list. Throws CapacityError when
// the group order exceeds max_group_order.
std::vector<Subgroup> all_subgroups_of_order(const Group& g, std::size_t k,
                                             std::uint32_t max_group_order = kDefaultSubgroupSearchBound);

bool is_normal(const Subgroup& h);

// G/N with cosets indexed by their smallest element, ascending.
struct Quotient {
  Group group;
  Subgroup kernel;
  std::vector<Element> representatives;  // representatives[q] = min element of coset q
  std::vector<Element> coset_index;      // coset_index[g] = q
};

Quotient quotient(const Subgroup& normal);

}  // namespace extdiff

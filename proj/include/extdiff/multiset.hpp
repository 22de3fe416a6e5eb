#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "extdiff/group.hpp"

namespace extdiff {

using Count = std::uint64_t;

// A multiset of group elements stored densely as one count per element.
class GMultiset {
 public:
  explicit GMultiset(Group group);

  // Repeated elements accumulate multiplicity.
  static GMultiset from_elements(const Group& group, std::span<const Element> elements);
  static GMultiset from_counts(const Group& group, std::vector<Count> counts);

  const Group& group() const { return group_; }
  Count count(Element e) const { return counts_[e]; }
  const std::vector<Count>& counts() const { return counts_; }
  Count size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool is_set() const;

  // Distinct elements present, ascending.
  std::vector<Element> support() const;
  // Every element repeated by multiplicity, ascending.
  std::vector<Element> elements() const;

  void add(Element e, Count c = 1);
  // Multiset union, written ⊎ in the literature.
  GMultiset& operator+=(const GMultiset& other);

  // Left translate g*A.
  GMultiset translated(Element g) const;
  // G \ A; only defined for sets.
  GMultiset complement() const;

  bool operator==(const GMultiset& other) const;

 private:
  Group group_;
  std::vector<Count> counts_;
  Count size_ = 0;
};

GMultiset operator+(GMultiset a, const GMultiset& b);

// Which construction produced a family and with what raw parameters.
struct Provenance {
  std::string construction;
  nlohmann::json params = nlohmann::json::object();
};

// An ordered list of non-empty multisets over one group.
class Family {
 public:
  Family(Group group, std::vector<GMultiset> members, Provenance provenance = {});

  static Family from_sets(const Group& group, const std::vector<std::vector<Element>>& sets,
                          Provenance provenance = {});

  const Group& group() const { return group_; }
  const std::vector<GMultiset>& members() const { return members_; }
  const GMultiset& member(std::size_t i) const { return members_.at(i); }
  std::size_t size() const { return members_.size(); }
  const Provenance& provenance() const { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }

  std::vector<Count> member_sizes() const;
  bool all_sets() const;

 private:
  Group group_;
  std::vector<GMultiset> members_;
  Provenance provenance_;
};

// Union of the left cosets r*H. With require_disjoint, a repeated coset is a
// ValidationError; otherwise overlapping cosets add multiplicity.
GMultiset coset_union(const Subgroup& h, std::span<const Element> reps, bool require_disjoint = true);

}  // namespace extdiff

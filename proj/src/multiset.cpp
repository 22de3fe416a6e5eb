#include "extdiff/multiset.hpp"

#include <algorithm>
#include <numeric>

#include "extdiff/error.hpp"

namespace extdiff {

namespace {

void require_same_group(const Group& a, const Group& b, const char* where) {
  if (!(a == b)) throw UsageError(std::string(where) + ": multisets belong to different groups");
}

}  // namespace

GMultiset::GMultiset(Group group) : group_(std::move(group)), counts_(group_.order(), 0) {}

GMultiset GMultiset::from_elements(const Group& group, std::span<const Element> elements) {
  GMultiset out(group);
  for (Element e : elements) out.add(e);
  return out;
}

GMultiset GMultiset::from_counts(const Group& group, std::vector<Count> counts) {
  if (counts.size() != group.order())
    throw UsageError("multiset counts: expected " + std::to_string(group.order()) + " entries");
  GMultiset out(group);
  out.size_ = std::accumulate(counts.begin(), counts.end(), Count{0});
  out.counts_ = std::move(counts);
  return out;
}

bool GMultiset::is_set() const {
  return std::all_of(counts_.begin(), counts_.end(), [](Count c) { return c <= 1; });
}

std::vector<Element> GMultiset::support() const {
  std::vector<Element> out;
  for (Element e = 0; e < counts_.size(); ++e)
    if (counts_[e]) out.push_back(e);
  return out;
}

std::vector<Element> GMultiset::elements() const {
  std::vector<Element> out;
  out.reserve(size_);
  for (Element e = 0; e < counts_.size(); ++e) out.insert(out.end(), counts_[e], e);
  return out;
}

void GMultiset::add(Element e, Count c) {
  if (e >= counts_.size()) throw UsageError("element index " + std::to_string(e) + " out of range");
  counts_[e] += c;
  size_ += c;
}

GMultiset& GMultiset::operator+=(const GMultiset& other) {
  require_same_group(group_, other.group_, "multiset union");
  for (std::size_t e = 0; e < counts_.size(); ++e) counts_[e] += other.counts_[e];
  size_ += other.size_;
  return *this;
}

GMultiset operator+(GMultiset a, const GMultiset& b) {
  a += b;
  return a;
}

GMultiset GMultiset::translated(Element g) const {
  if (g >= counts_.size()) throw UsageError("translate: element index out of range");
  GMultiset out(group_);
  for (Element e = 0; e < counts_.size(); ++e)
    if (counts_[e]) out.add(group_.op(g, e), counts_[e]);
  return out;
}

GMultiset GMultiset::complement() const {
  if (!is_set()) throw UsageError("complement: member is a multiset");
  GMultiset out(group_);
  for (Element e = 0; e < counts_.size(); ++e)
    if (!counts_[e]) out.add(e);
  return out;
}

bool GMultiset::operator==(const GMultiset& other) const {
  return group_ == other.group_ && counts_ == other.counts_;
}

Family::Family(Group group, std::vector<GMultiset> members, Provenance provenance)
    : group_(std::move(group)), members_(std::move(members)), provenance_(std::move(provenance)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    require_same_group(group_, members_[i].group(), "family");
    if (members_[i].empty()) throw UsageError("family member " + std::to_string(i + 1) + " is empty");
  }
}

Family Family::from_sets(const Group& group, const std::vector<std::vector<Element>>& sets,
                         Provenance provenance) {
  std::vector<GMultiset> members;
  members.reserve(sets.size());
  for (const auto& s : sets) members.push_back(GMultiset::from_elements(group, s));
  return Family(group, std::move(members), std::move(provenance));
}

std::vector<Count> Family::member_sizes() const {
  std::vector<Count> out;
  for (const auto& m : members_) out.push_back(m.size());
  return out;
}

bool Family::all_sets() const {
  return std::all_of(members_.begin(), members_.end(), [](const GMultiset& m) { return m.is_set(); });
}

GMultiset coset_union(const Subgroup& h, std::span<const Element> reps, bool require_disjoint) {
  GMultiset out(h.parent);
  for (Element r : reps) {
    for (Element x : coset(h, r)) {
      if (require_disjoint && out.count(x))
        throw ValidationError("coset_union: representative " + std::to_string(r) + " repeats a coset");
      out.add(x);
    }
  }
  return out;
}

}  // namespace extdiff

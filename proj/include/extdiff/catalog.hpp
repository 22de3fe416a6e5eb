#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "extdiff/certificate.hpp"
#include "extdiff/multiset.hpp"

namespace extdiff {

inline constexpr int kCatalogVersion = 1;

nlohmann::json group_spec_to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const nlohmann::json& j);

// Labels with parameters and the lambda matrix, as stored next to each entry.
nlohmann::json certificate_summary(const Certificate& c);

nlohmann::json family_to_json(const Family& f);
// Rebuilds the family and recomputes its certificate; a stored summary that
// disagrees raises IntegrityError naming the entry. A missing summary is an
// error only when require_certificate is set.
Family family_from_json(const nlohmann::json& j, std::size_t index = 0, bool require_certificate = true);

// Sorted keys, integers only, trailing newline.
std::string catalog_text(const std::vector<Family>& entries);
std::vector<Family> parse_catalog(const std::string& text);
void save_catalog(const std::string& path, const std::vector<Family>& entries);
std::vector<Family> load_catalog(const std::string& path);

struct CanonicalForm {
  GroupSpec group;
  // each member as ascending (element, count) pairs; members ordered by (size, lexicographic)
  std::vector<std::vector<std::pair<Element, Count>>> members;
  std::string key;
};

// With mod_translation each member is first replaced by its lexicographically
// least left translate.
CanonicalForm canonical_form(const Family& f, bool mod_translation = false);

struct SearchQuery {
  GroupSpec group;
  std::size_t m = 2;
  std::vector<Count> sizes;  // empty: every non-decreasing size profile
  std::vector<Label> labels;
  std::optional<Count> lambda;  // target for labels with a single parameter
  std::uint64_t budget = 50'000'000;  // search nodes
  bool mod_translation = true;
};

struct SearchResult {
  std::vector<Family> families;
  bool exhaustive = true;
  std::uint64_t nodes = 0;
  double space_estimate = 0;  // product of binomials over the profiles tried
};

// Set families only. Every result certifies with all requested labels.
SearchResult search(const SearchQuery& q);

}  // namespace extdiff

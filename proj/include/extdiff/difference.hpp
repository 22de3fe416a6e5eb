#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "extdiff/multiset.hpp"

namespace extdiff {

// Δ(A,B) = {a * b^{-1} : a in A, b in B} with multiplicity; |Δ(A,B)| = |A||B|.
GMultiset external_difference(const GMultiset& a, const GMultiset& b);

// Δ(A) = Δ(A,A).
GMultiset internal_difference(const GMultiset& a);

// A sequence of non-negative counts indexed by Z_v. Binary when every entry
// is at most one.
struct IntSequence {
  std::vector<Count> entries;

  std::size_t length() const { return entries.size(); }
  Count weight() const;
  bool is_binary() const;

  // Binary sequences print as a digit string ("0101"), others as
  // comma-separated counts, index 0 first.
  std::string to_text() const;
  static IntSequence parse(std::string_view text);

  bool operator==(const IntSequence&) const = default;
};

// Only defined over Cyclic(v); other groups raise UnsupportedError.
IntSequence multiset_to_sequence(const GMultiset& a);
GMultiset sequence_to_multiset(const IntSequence& x);

// sum_t x_t * y_{t+shift}, indices mod v.
Count correlation(const IntSequence& x, const IntSequence& y, std::size_t shift);
// correlation(x, y, d) for every d in [0, v).
std::vector<Count> correlation_profile(const IntSequence& x, const IntSequence& y);

}  // namespace extdiff

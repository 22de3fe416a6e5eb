#include "extdiff/difference.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "extdiff/error.hpp"

namespace extdiff {

GMultiset external_difference(const GMultiset& a, const GMultiset& b) {
  if (!(a.group() == b.group())) throw UsageError("external_difference: multisets belong to different groups");
  const Group& g = a.group();
  std::vector<Count> out(g.order(), 0);
  const auto& ca = a.counts();
  const auto& cb = b.counts();
  std::vector<std::pair<Element, Count>> bs;
  for (Element y : b.support()) bs.emplace_back(g.inverse(y), cb[y]);
  for (Element x : a.support()) {
    const Count mx = ca[x];
    for (const auto& [y_inv, my] : bs) out[g.op(x, y_inv)] += mx * my;
  }
  return GMultiset::from_counts(g, std::move(out));
}

GMultiset internal_difference(const GMultiset& a) { return external_difference(a, a); }

Count IntSequence::weight() const { return std::accumulate(entries.begin(), entries.end(), Count{0}); }

bool IntSequence::is_binary() const {
  return std::all_of(entries.begin(), entries.end(), [](Count c) { return c <= 1; });
}

std::string IntSequence::to_text() const {
  std::string out;
  if (is_binary()) {
    for (Count c : entries) out.push_back(c ? '1' : '0');
    return out;
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(entries[i]);
  }
  return out;
}

IntSequence IntSequence::parse(std::string_view text) {
  IntSequence seq;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw UsageError("sequence: unexpected character '" + std::string(1, c) + "'");
      seq.entries.push_back(static_cast<Count>(c - '0'));
    }
    return seq;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string_view tok = text.substr(pos, end - pos);
    Count value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw UsageError("sequence: bad count '" + std::string(tok) + "'");
    seq.entries.push_back(value);
    pos = end + 1;
  }
  return seq;
}

IntSequence multiset_to_sequence(const GMultiset& a) {
  if (!a.group().is_cyclic_spec()) throw UnsupportedError("sequences are only defined over cyclic groups");
  return IntSequence{a.counts()};
}

GMultiset sequence_to_multiset(const IntSequence& x) {
  if (x.entries.empty()) throw UsageError("sequence_to_multiset: empty sequence");
  const Group g(GroupSpec::cyclic(static_cast<std::uint32_t>(x.length())));
  return GMultiset::from_counts(g, x.entries);
}

Count correlation(const IntSequence& x, const IntSequence& y, std::size_t shift) {
  if (x.length() != y.length()) throw UsageError("correlation: sequences have different lengths");
  const std::size_t v = x.length();
  if (v == 0) return 0;
  shift %= v;
  Count total = 0;
  for (std::size_t t = 0; t < v; ++t) {
    std::size_t u = t + shift;
    if (u >= v) u -= v;
    total += x.entries[t] * y.entries[u];
  }
  return total;
}

std::vector<Count> correlation_profile(const IntSequence& x, const IntSequence& y) {
  if (x.length() != y.length()) throw UsageError("correlation: sequences have different lengths");
  std::vector<Count> out(x.length());
  for (std::size_t d = 0; d < x.length(); ++d) out[d] = correlation(x, y, d);
  return out;
}

}  // namespace extdiff

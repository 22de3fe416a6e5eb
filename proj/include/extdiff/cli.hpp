#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "extdiff/multiset.hpp"

namespace extdiff {

// Exit codes: 0 success, 1 certification mismatch, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "0,1,2|3,6,9"; "e:c" gives element e multiplicity c; names accepted where
// the group has them ("a^2b", "-i").
Family parse_inline_family(const Group& g, std::string_view text);
std::string format_inline_family(const Family& f);

}  // namespace extdiff

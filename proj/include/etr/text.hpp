// Small string helpers shared by rendering, scoring and the CLI.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace etr::text {

std::string_view Trim(std::string_view s);
std::string_view TrimRight(std::string_view s);
std::string Lower(std::string_view s);
std::string Capitalize(std::string s);
std::string StripPeriod(std::string s);

// "a", "a and b", "a, b and c" with `conj` in place of "and".
std::string JoinList(const std::vector<std::string>& items, std::string_view conj);
inline std::string JoinAnd(const std::vector<std::string>& items) { return JoinList(items, "and"); }

std::vector<std::string> Split(std::string_view s, char sep);

}  // namespace etr::text

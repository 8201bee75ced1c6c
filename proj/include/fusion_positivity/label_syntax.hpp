#pragma once

#include "fusion_positivity/errors.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace fpos {

/// Pieces of the textual label form `P[x1,...,xm]@y1,...,yp`.
struct LabelText {
  char prefix = '\0';
  std::vector<long long> body;
  std::vector<long long> params;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::vector<long long> parse_int_list(std::string_view s, std::string_view whole) {
  std::vector<long long> out;
  s = trim(s);
  if (s.empty()) return out;
  while (true) {
    const auto comma = s.find(',');
    const std::string_view item = trim(s.substr(0, comma));
    long long v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw LabelError("malformed integer '" + std::string(item) + "' in label '" + std::string(whole) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

inline LabelText parse_label_text(std::string_view text) {
  const std::string_view s = detail::trim(text);
  const auto open = s.find('[');
  const auto close = s.find(']');
  const auto at = s.find('@');
  if (s.empty() || open != 1 || close == std::string_view::npos || close < open ||
      at != close + 1) {
    throw LabelError("label '" + std::string(text) + "' does not match P[...]@...");
  }
  LabelText out;
  out.prefix = s.front();
  out.body = detail::parse_int_list(s.substr(open + 1, close - open - 1), text);
  out.params = detail::parse_int_list(s.substr(at + 1), text);
  return out;
}

}  // namespace fpos

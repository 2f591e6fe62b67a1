#pragma once

#include <map>
#include <string>
#include <string_view>

namespace diffauction {

/// `name:key=value,key=value` or `name:positional`. Used by the distribution,
/// reserve-policy and scenario config strings.
struct ConfigString {
  std::string name;
  std::string positional;
  std::map<std::string, std::string> values;

  static ConfigString parse(std::string_view text);

  bool has(const std::string& key) const { return values.count(key) != 0; }
  double number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  std::size_t count(const std::string& key) const;
  /// Throws FormatError naming the first key not in `allowed`.
  void expect_only(std::initializer_list<std::string_view> allowed) const;
};

double parse_number(std::string_view text, std::string_view what);
std::size_t parse_count(std::string_view text, std::string_view what);

}  // namespace diffauction

#include "diffauction/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "diffauction/errors.hpp"

namespace diffauction {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

double parse_number(std::string_view text, std::string_view what) {
  text = trim(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || !std::isfinite(value)) {
    throw FormatError("invalid number for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  text = trim(text);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw FormatError("invalid count for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

ConfigString ConfigString::parse(std::string_view text) {
  ConfigString cfg;
  text = trim(text);
  auto colon = text.find(':');
  cfg.name = std::string(trim(text.substr(0, colon)));
  if (cfg.name.empty()) throw FormatError("config string has no name: '" + std::string(text) + "'");
  if (colon == std::string_view::npos) return cfg;

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      if (!cfg.positional.empty()) throw FormatError("more than one positional value in '" + std::string(text) + "'");
      cfg.positional = std::string(item);
      continue;
    }
    std::string key(trim(item.substr(0, eq)));
    if (!cfg.values.emplace(key, std::string(trim(item.substr(eq + 1)))).second) {
      throw FormatError("duplicate key '" + key + "' in '" + std::string(text) + "'");
    }
  }
  return cfg;
}

double ConfigString::number(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw FormatError("'" + name + "' config is missing '" + key + "'");
  return parse_number(it->second, key);
}

double ConfigString::number_or(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

std::size_t ConfigString::count(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw FormatError("'" + name + "' config is missing '" + key + "'");
  return parse_count(it->second, key);
}

void ConfigString::expect_only(std::initializer_list<std::string_view> allowed) const {
  for (const auto& [key, _] : values) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw FormatError("unknown key '" + key + "' for '" + name + "'");
    }
  }
}

}  // namespace diffauction

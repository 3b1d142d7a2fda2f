#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace dualwave {

/// Key/value configuration with [section] headers. Keys are addressed as
/// "section.key"; lines starting with '#' or ';' are comments. Values keep
/// their raw text; typed access via the getters, which throw
/// ValidationError naming the key.
class Config {
public:
  static Config parse_file(const std::string& path);
  static Config parse_text(const std::string& text, const std::string& origin = "<text>");

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::uint64_t get_u64(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_double_list(const std::string& key) const;

  /// Keys present in the file but never consumed by any getter; used to
  /// reject typos.
  std::vector<std::string> unconsumed() const;

  /// Canonical serialization (sorted sections/keys) for the resolved-config
  /// echo.
  std::string canonical_text() const;

  void set(const std::string& key, const std::string& value);

private:
  std::string origin_;
  std::map<std::string, std::string> values_;
  mutable std::set<std::string> consumed_;
  const std::string& raw(const std::string& key) const;
};

}  // namespace dualwave

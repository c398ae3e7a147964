#pragma once

#include "swarmlift/types.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace swarmlift::config {

/// Flat key = value configuration with '#' comments.  Keys are dotted
/// paths; values are scalars, booleans, or comma-separated number lists.
/// Lookups record which keys were consumed so validation can flag unknown
/// entries.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(const std::string& text);
  static KeyValueConfig load(const std::string& path);

  bool has(const std::string& key) const;

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& dflt) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double dflt) const;
  int get_int(const std::string& key) const;
  int get_int(const std::string& key, int dflt) const;
  bool get_bool(const std::string& key) const;
  bool get_bool(const std::string& key, bool dflt) const;
  Vec3 get_vec3(const std::string& key) const;
  Vec3 get_vec3(const std::string& key, const Vec3& dflt) const;
  std::vector<double> get_doubles(const std::string& key) const;

  /// Applies "key=value" or bare "key" (which means true) on top of the
  /// parsed entries.
  void set_override(const std::string& assignment);

  /// Line number of a key, 0 when synthetic (overrides).
  int line_of(const std::string& key) const;

  std::vector<std::string> keys() const;

  /// Keys never consumed by any getter; validation reports them.
  std::vector<std::string> unconsumed() const;

 private:
  struct Entry {
    std::string value;
    int line = 0;
  };
  std::map<std::string, Entry> entries_;
  mutable std::set<std::string> consumed_;

  const Entry& require(const std::string& key) const;
};

}  // namespace swarmlift::config

#include "swarmlift/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace swarmlift::config {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& raw, int line) {
  try {
    size_t pos = 0;
    const double v = std::stod(raw, &pos);
    while (pos < raw.size() &&
           std::isspace(static_cast<unsigned char>(raw[pos])))
      ++pos;
    if (pos != raw.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    std::ostringstream os;
    os << "key '" << key << "' (line " << line << "): '" << raw
       << "' is not a number";
    throw ConfigError(os.str());
  }
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(const std::string& text) {
  KeyValueConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string stripped = trim(raw);
    if (stripped.empty()) continue;
    const size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      std::ostringstream os;
      os << "line " << line << ": expected 'key = value', got '" << stripped
         << "'";
      throw ConfigError(os.str());
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      std::ostringstream os;
      os << "line " << line << ": empty key";
      throw ConfigError(os.str());
    }
    if (cfg.entries_.count(key) != 0) {
      std::ostringstream os;
      os << "line " << line << ": duplicate key '" << key << "' (first on line "
         << cfg.entries_[key].line << ")";
      throw ConfigError(os.str());
    }
    cfg.entries_[key] = Entry{value, line};
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

bool KeyValueConfig::has(const std::string& key) const {
  return entries_.count(key) != 0;
}

const KeyValueConfig::Entry& KeyValueConfig::require(
    const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end())
    throw ConfigError("missing required key '" + key + "'");
  consumed_.insert(key);
  return it->second;
}

std::string KeyValueConfig::get_string(const std::string& key) const {
  return require(key).value;
}

std::string KeyValueConfig::get_string(const std::string& key,
                                       const std::string& dflt) const {
  return has(key) ? get_string(key) : dflt;
}

double KeyValueConfig::get_double(const std::string& key) const {
  const Entry& e = require(key);
  return parse_double(key, e.value, e.line);
}

double KeyValueConfig::get_double(const std::string& key, double dflt) const {
  return has(key) ? get_double(key) : dflt;
}

int KeyValueConfig::get_int(const std::string& key) const {
  const Entry& e = require(key);
  const double v = parse_double(key, e.value, e.line);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    std::ostringstream os;
    os << "key '" << key << "' (line " << e.line << "): '" << e.value
       << "' is not an integer";
    throw ConfigError(os.str());
  }
  return i;
}

int KeyValueConfig::get_int(const std::string& key, int dflt) const {
  return has(key) ? get_int(key) : dflt;
}

bool KeyValueConfig::get_bool(const std::string& key) const {
  const Entry& e = require(key);
  if (e.value == "true" || e.value == "1" || e.value == "on") return true;
  if (e.value == "false" || e.value == "0" || e.value == "off") return false;
  std::ostringstream os;
  os << "key '" << key << "' (line " << e.line << "): '" << e.value
     << "' is not a boolean (true/false)";
  throw ConfigError(os.str());
}

bool KeyValueConfig::get_bool(const std::string& key, bool dflt) const {
  return has(key) ? get_bool(key) : dflt;
}

std::vector<double> KeyValueConfig::get_doubles(const std::string& key) const {
  const Entry& e = require(key);
  std::vector<double> out;
  std::string item;
  std::istringstream in(e.value);
  while (std::getline(in, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) {
      std::ostringstream os;
      os << "key '" << key << "' (line " << e.line << "): empty list element";
      throw ConfigError(os.str());
    }
    out.push_back(parse_double(key, t, e.line));
  }
  if (out.empty()) {
    std::ostringstream os;
    os << "key '" << key << "' (line " << e.line << "): empty list";
    throw ConfigError(os.str());
  }
  return out;
}

Vec3 KeyValueConfig::get_vec3(const std::string& key) const {
  const std::vector<double> v = get_doubles(key);
  if (v.size() != 3) {
    std::ostringstream os;
    os << "key '" << key << "' (line " << line_of(key) << "): expected 3 "
       << "comma-separated numbers, got " << v.size();
    throw ConfigError(os.str());
  }
  return Vec3(v[0], v[1], v[2]);
}

Vec3 KeyValueConfig::get_vec3(const std::string& key, const Vec3& dflt) const {
  return has(key) ? get_vec3(key) : dflt;
}

void KeyValueConfig::set_override(const std::string& assignment) {
  const size_t eq = assignment.find('=');
  std::string key, value;
  if (eq == std::string::npos) {
    key = trim(assignment);
    value = "true";
  } else {
    key = trim(assignment.substr(0, eq));
    value = trim(assignment.substr(eq + 1));
  }
  if (key.empty()) throw ConfigError("override with empty key");
  entries_[key] = Entry{value, 0};
}

int KeyValueConfig::line_of(const std::string& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second.line;
}

std::vector<std::string> KeyValueConfig::keys() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

std::vector<std::string> KeyValueConfig::unconsumed() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_)
    if (consumed_.count(k) == 0) out.push_back(k);
  return out;
}

}  // namespace swarmlift::config

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "depflow/digest.hpp"
#include "depflow/errors.hpp"

namespace depflow {

// Flat key-value text config: one `key = value` per line, `#` comments.
// Insertion order is preserved so serialization (and therefore the config
// digest) is stable.
class KvConfig {
 public:
  KvConfig() = default;

  static KvConfig parse(const std::string& text) {
    KvConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw PreconditionError("config line " + std::to_string(lineno) +
                                ": expected key = value");
      cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
  }

  static KvConfig load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }

  void set(const std::string& key, const std::string& value) {
    auto it = index_.find(key);
    if (it == index_.end()) {
      index_[key] = entries_.size();
      entries_.push_back({key, value});
    } else {
      entries_[it->second].second = value;
    }
  }
  void set(const std::string& key, double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    set(key, os.str());
  }
  void set(const std::string& key, std::int64_t v) { set(key, std::to_string(v)); }
  void set(const std::string& key, int v) { set(key, std::to_string(v)); }
  void set(const std::string& key, std::uint64_t v) { set(key, std::to_string(v)); }

  bool has(const std::string& key) const { return index_.count(key) > 0; }

  std::string get_str(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end())
      throw PreconditionError("missing config key: " + key);
    return entries_[it->second].second;
  }
  std::string get_str(const std::string& key, const std::string& dflt) const {
    return has(key) ? get_str(key) : dflt;
  }

  double get_double(const std::string& key) const {
    const std::string s = get_str(key);
    try {
      std::size_t pos = 0;
      const double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw PreconditionError("config key " + key + ": not a number: " + s);
    }
  }
  double get_double(const std::string& key, double dflt) const {
    return has(key) ? get_double(key) : dflt;
  }

  std::int64_t get_int(const std::string& key) const {
    const std::string s = get_str(key);
    try {
      std::size_t pos = 0;
      const std::int64_t v = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw PreconditionError("config key " + key + ": not an integer: " + s);
    }
  }
  std::int64_t get_int(const std::string& key, std::int64_t dflt) const {
    return has(key) ? get_int(key) : dflt;
  }

  std::uint64_t get_u64(const std::string& key, std::uint64_t dflt) const {
    if (!has(key)) return dflt;
    return static_cast<std::uint64_t>(std::stoull(get_str(key)));
  }

  /// Sub-config of all keys with the given `prefix.`; prefix is stripped.
  KvConfig scoped(const std::string& prefix) const {
    KvConfig out;
    const std::string p = prefix + ".";
    for (const auto& [k, v] : entries_)
      if (k.rfind(p, 0) == 0) out.set(k.substr(p.size()), v);
    return out;
  }

  std::string serialize() const {
    std::ostringstream os;
    for (const auto& [k, v] : entries_) os << k << " = " << v << "\n";
    return os.str();
  }

  /// Canonical digest: keys sorted, so equivalent configs hash equal.
  std::string digest() const {
    std::vector<std::pair<std::string, std::string>> sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    Fnv1a64 h;
    for (const auto& [k, v] : sorted) h.update(k).update("\x1f").update(v).update("\x1e");
    return h.hex();
  }

  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write config file: " + path);
    out << serialize();
  }

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

 private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  std::vector<std::pair<std::string, std::string>> entries_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace depflow

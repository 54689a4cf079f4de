#include "arpmc/harness.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace arpmc {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

KvConfig KvConfig::parse_text(const std::string& text) {
  KvConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;  // "" = global
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError("line " + std::to_string(lineno) +
                          ": empty section name");
      cfg.sections_[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    cfg.sections_[section][key] = value;
  }
  return cfg;
}

KvConfig KvConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

std::optional<std::string> KvConfig::get(const std::string& section,
                                         const std::string& key) const {
  if (!section.empty()) {
    const auto s = sections_.find(section);
    if (s != sections_.end()) {
      const auto k = s->second.find(key);
      if (k != s->second.end()) return k->second;
    }
  }
  const auto g = sections_.find("");
  if (g != sections_.end()) {
    const auto k = g->second.find(key);
    if (k != g->second.end()) return k->second;
  }
  return std::nullopt;
}

std::string KvConfig::get_string(const std::string& section,
                                 const std::string& key,
                                 const std::string& fallback) const {
  const auto v = get(section, key);
  return v ? *v : fallback;
}

double KvConfig::get_double(const std::string& section, const std::string& key,
                            double fallback) const {
  const auto v = get(section, key);
  if (!v) return fallback;
  try {
    std::size_t pos = 0;
    const double x = std::stod(*v, &pos);
    if (pos != v->size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for '" + key + "': " + *v);
  }
}

long long KvConfig::get_int(const std::string& section, const std::string& key,
                            long long fallback) const {
  const auto v = get(section, key);
  if (!v) return fallback;
  long long x = 0;
  const char* first = v->data();
  const char* last = first + v->size();
  const auto res = std::from_chars(first, last, x);
  if (res.ec != std::errc{} || res.ptr != last)
    throw ConfigError("bad integer value for '" + key + "': " + *v);
  return x;
}

std::string fmt_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace arpmc

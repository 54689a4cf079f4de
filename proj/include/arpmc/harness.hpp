#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arpmc {

inline constexpr const char* kVersion = "0.1.0";

// Exit-code taxonomy shared by the CLI and its tests.
enum ExitCode {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitViolation = 3,     // a verified certificate fails to hold
  kExitInadmissible = 4,  // parameter outside its admissible range
  kExitIo = 5,
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key=value configuration with one section per command; keys before
// the first [section] header are global. Lookup falls back from the
// section to the global scope. '#' starts a comment.
class KvConfig {
 public:
  static KvConfig parse_text(const std::string& text);
  static KvConfig parse_file(const std::string& path);

  std::optional<std::string> get(const std::string& section,
                                 const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key,
                    double fallback) const;
  long long get_int(const std::string& section, const std::string& key,
                    long long fallback) const;

  bool empty() const { return sections_.empty(); }
  const std::map<std::string, std::map<std::string, std::string>>& sections()
      const {
    return sections_;
  }

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

// Shortest decimal form that parses back to the same double.
std::string fmt_double(double x);

std::vector<std::string> split_list(const std::string& text, char sep);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace arpmc

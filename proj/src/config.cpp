#include "sympcool/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sympcool::config {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

} // namespace

std::vector<Entry> parse(std::istream& in) {
  std::vector<Entry> out;
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw ParseError("unterminated section header '" + s + "'", line);
      section = trim(s.substr(1, s.size() - 2));
      if (section.empty()) throw ParseError("empty section name", line);
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'key = value', got '" + s + "'", line);
    Entry e;
    e.section = section;
    e.key = trim(s.substr(0, eq));
    e.value = trim(s.substr(eq + 1));
    e.line = line;
    if (e.key.empty()) throw ParseError("empty key", line);
    if (e.value.empty()) throw ParseError("empty value for key '" + e.key + "'", line);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Entry> parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return parse(in);
}

double to_double(const Entry& e) {
  const char* begin = e.value.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw ParseError("key '" + e.key + "': not a number: '" + e.value + "'", e.line);
  return v;
}

long to_long(const Entry& e) {
  const char* begin = e.value.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0')
    throw ParseError("key '" + e.key + "': not an integer: '" + e.value + "'", e.line);
  return v;
}

} // namespace sympcool::config

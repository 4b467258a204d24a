#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

// Sectioned key = value text format shared by the species registry and run
// config files. Lines are one of: blank, comment (# ...), section header
// ([name]), or "key = value". Inline comments after # are stripped.
namespace sympcool::config {

struct Entry {
  std::string section;
  std::string key;
  std::string value;
  int line = 0;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ")"),
        line(line_) {}
  int line;
};

std::vector<Entry> parse(std::istream& in);
std::vector<Entry> parse_file(const std::string& path); // throws std::runtime_error if unreadable

// Strict numeric value parsing: the whole token must be consumed.
double to_double(const Entry& e);
long to_long(const Entry& e);

} // namespace sympcool::config

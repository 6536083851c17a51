#pragma once

#include <string>
#include <vector>

#include "padecert/rational.hpp"

namespace padecert {
namespace toml {

// Minimal flat TOML reader covering what instance files use: `key = value`
// lines, `#` comments, double-quoted strings without escapes, integers,
// booleans, and single-line arrays of strings or integers.  No tables, no
// nesting.  Errors carry the line number and key.
struct Value {
  enum class Kind { String, Integer, Boolean, Array };
  Kind kind = Kind::String;
  std::string str;
  long long integer = 0;
  bool boolean = false;
  std::vector<Value> items;
  unsigned line = 0;
};

struct Table {
  std::vector<std::pair<std::string, Value>> entries;  // file order

  const Value* find(const std::string& key) const;
  bool has(const std::string& key) const { return find(key) != nullptr; }
};

Table parse(const std::string& text);
Table parse_file(const std::string& path);

}  // namespace toml
}  // namespace padecert

#include "padecert/toml_lite.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace padecert {
namespace toml {

namespace {

[[noreturn]] void fail(unsigned line, const std::string& what) {
  throw parse_error("line " + std::to_string(line) + ": " + what);
}

void skip_space(const std::string& s, size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

bool key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

// One scalar starting at i: quoted string, boolean, or integer.
Value parse_scalar(const std::string& s, size_t& i, unsigned line) {
  Value v;
  v.line = line;
  if (i >= s.size()) fail(line, "missing value");
  if (s[i] == '"') {
    ++i;
    const size_t end = s.find('"', i);
    if (end == std::string::npos) fail(line, "unterminated string");
    v.kind = Value::Kind::String;
    v.str = s.substr(i, end - i);
    i = end + 1;
    return v;
  }
  size_t j = i;
  while (j < s.size() && (key_char(s[j]) || s[j] == '+' || s[j] == '.'))
    ++j;
  const std::string tok = s.substr(i, j - i);
  if (tok.empty()) fail(line, "missing value");
  i = j;
  if (tok == "true" || tok == "false") {
    v.kind = Value::Kind::Boolean;
    v.boolean = tok == "true";
    return v;
  }
  try {
    size_t used = 0;
    v.integer = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
  } catch (const std::exception&) {
    fail(line, "cannot read value '" + tok + "'");
  }
  v.kind = Value::Kind::Integer;
  return v;
}

Value parse_value(const std::string& s, size_t& i, unsigned line) {
  skip_space(s, i);
  if (i < s.size() && s[i] == '[') {
    Value v;
    v.kind = Value::Kind::Array;
    v.line = line;
    ++i;
    skip_space(s, i);
    if (i < s.size() && s[i] == ']') {
      ++i;
      return v;
    }
    for (;;) {
      v.items.push_back(parse_scalar(s, i, line));
      skip_space(s, i);
      if (i >= s.size()) fail(line, "unterminated array");
      if (s[i] == ',') {
        ++i;
        skip_space(s, i);
        if (i < s.size() && s[i] == ']') {  // trailing comma
          ++i;
          return v;
        }
        continue;
      }
      if (s[i] == ']') {
        ++i;
        return v;
      }
      fail(line, "expected ',' or ']' in array");
    }
  }
  return parse_scalar(s, i, line);
}

}  // namespace

const Value* Table::find(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

Table parse(const std::string& text) {
  Table table;
  std::istringstream in(text);
  std::string raw;
  unsigned line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    size_t i = 0;
    skip_space(raw, i);
    if (i >= raw.size() || raw[i] == '#') continue;
    size_t k0 = i;
    while (i < raw.size() && key_char(raw[i])) ++i;
    if (i == k0) fail(line, "expected a key");
    const std::string key = raw.substr(k0, i - k0);
    skip_space(raw, i);
    if (i >= raw.size() || raw[i] != '=')
      fail(line, "expected '=' after key '" + key + "'");
    ++i;
    Value v = parse_value(raw, i, line);
    skip_space(raw, i);
    if (i < raw.size() && raw[i] != '#')
      fail(line, "trailing characters after value for key '" + key + "'");
    if (table.has(key)) fail(line, "duplicate key '" + key + "'");
    table.entries.emplace_back(key, std::move(v));
  }
  return table;
}

Table parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace toml
}  // namespace padecert

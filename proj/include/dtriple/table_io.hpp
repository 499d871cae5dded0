#pragma once

// .tbl text format:
//   # comment lines (only before or between rows, whole-line)
//   n
//   n rows of n whitespace-separated integers in [0, n)
// Canonical emission: no comments unless requested, single spaces, trailing newline.

#include "dtriple/algebra.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dtriple {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

inline unsigned long parse_uint(const Token& tok, std::size_t line_no) {
  unsigned long v = 0;
  auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec == std::errc::result_out_of_range)
    throw ParseError(line_no, tok.column, "integer '" + std::string(tok.text) + "' too large");
  if (ec != std::errc() || p != tok.text.data() + tok.text.size())
    throw ParseError(line_no, tok.column, "expected non-negative integer, got '" + std::string(tok.text) + "'");
  return v;
}

}  // namespace detail

inline FiniteAlgebra parse_table(std::string_view text) {
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Element> table;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    if (toks.front().text.front() == '#') continue;
    if (!have_header) {
      if (toks.size() != 1) throw ParseError(line_no, toks[1].column, "header must contain only the carrier size");
      n = detail::parse_uint(toks[0], line_no);
      if (n == 0) throw ParseError(line_no, toks[0].column, "carrier size must be at least 1");
      if (n > 4096) throw ParseError(line_no, toks[0].column, "carrier size too large");
      have_header = true;
      table.reserve(n * n);
      continue;
    }
    if (rows == n) throw ParseError(line_no, toks[0].column, "row count mismatch: more than " + std::to_string(n) + " rows");
    if (toks.size() != n)
      throw ParseError(line_no, toks.size() > n ? toks[n].column : line.size() + 1,
                       "row has " + std::to_string(toks.size()) + " entries, expected " + std::to_string(n));
    for (const auto& tok : toks) {
      auto v = detail::parse_uint(tok, line_no);
      if (v >= n)
        throw ParseError(line_no, tok.column,
                         "entry " + std::string(tok.text) + " out of range [0," + std::to_string(n) + ")");
      table.push_back(static_cast<Element>(v));
    }
    ++rows;
  }
  if (!have_header) throw ParseError(line_no + 1, 1, "missing header line with carrier size");
  if (rows != n)
    throw ParseError(line_no + 1, 1, "row count mismatch: got " + std::to_string(rows) + " rows, expected " + std::to_string(n));
  return FiniteAlgebra(n, std::move(table));
}

inline FiniteAlgebra parse_table(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_table(std::string_view(text));
}

/// Canonical emission. `comments` are written as leading "# ..." lines.
inline std::string emit_table(const FiniteAlgebra& alg, const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  const auto n = alg.size();
  out << n << '\n';
  for (Element x = 0; x < n; ++x) {
    auto r = alg.row(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << r[y];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace dtriple

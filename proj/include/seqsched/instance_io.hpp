#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "seqsched/core.hpp"

namespace seqsched {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

inline Rational parse_nonnegative(const std::string& tok, std::size_t line) {
  if (!tok.empty() && tok.front() == '-') {
    throw ParseError(line, "negative value '" + tok + "'");
  }
  try {
    return Rational::parse(tok);
  } catch (const std::exception&) {
    throw ParseError(line, "malformed token '" + tok + "'");
  }
}

inline int parse_count(const std::string& tok, std::size_t line, const char* what) {
  Rational r = parse_nonnegative(tok, line);
  if (!r.is_integer()) throw ParseError(line, std::string(what) + " must be an integer");
  return static_cast<int>(r.num());
}

}  // namespace detail

// Text format:
//   # comment lines anywhere
//   m n
//   <n rationals>            (m rows, row i = machine i)
//   initial_loads <m rationals>   (optional)
// Rationals are "a", "a/b" or decimals; decimals are read exactly.
inline Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  int m = -1;
  int n = -1;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> init;
  std::size_t last_line = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    last_line = lineno;
    auto toks = detail::split_ws(raw);

    if (m < 0) {
      if (toks.size() != 2) throw ParseError(lineno, "expected header 'm n'");
      m = detail::parse_count(toks[0], lineno, "m");
      n = detail::parse_count(toks[1], lineno, "n");
      if (m < 1) throw ParseError(lineno, "m must be at least 1");
      continue;
    }
    if (toks.front() == "initial_loads") {
      if (n == 0 && rows.empty()) rows.assign(m, {});
      if (static_cast<int>(rows.size()) != m) {
        throw ParseError(lineno, "initial_loads before all " + std::to_string(m) +
                                     " machine rows");
      }
      if (!init.empty()) throw ParseError(lineno, "duplicate initial_loads line");
      if (static_cast<int>(toks.size()) != m + 1) {
        throw ParseError(lineno, "initial_loads needs " + std::to_string(m) + " values, got " +
                                     std::to_string(toks.size() - 1));
      }
      for (std::size_t k = 1; k < toks.size(); ++k) {
        init.push_back(detail::parse_nonnegative(toks[k], lineno));
      }
      continue;
    }
    if (static_cast<int>(rows.size()) == m) {
      throw ParseError(lineno, "unexpected extra line (instance has " + std::to_string(m) +
                                   " machines)");
    }
    if (!init.empty()) throw ParseError(lineno, "machine row after initial_loads");
    if (static_cast<int>(toks.size()) != n) {
      throw ParseError(lineno, "expected " + std::to_string(n) + " values, got " +
                                   std::to_string(toks.size()));
    }
    std::vector<Rational> row;
    row.reserve(toks.size());
    for (const auto& t : toks) row.push_back(detail::parse_nonnegative(t, lineno));
    rows.push_back(std::move(row));
  }

  if (m < 0) throw ParseError(lineno, "missing header 'm n'");
  // Zero-job rows are empty lines, which the reader skips as blank.
  if (n == 0 && rows.empty()) rows.assign(m, {});
  if (static_cast<int>(rows.size()) != m) {
    throw ParseError(last_line, "expected " + std::to_string(m) + " machine rows, got " +
                                    std::to_string(rows.size()));
  }
  return Instance(std::move(rows), std::move(init));
}

inline std::string format_instance(const Instance& inst) {
  std::string out = std::to_string(inst.machines()) + " " + std::to_string(inst.jobs()) + "\n";
  for (const auto& row : inst.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += row[j].to_string();
    }
    out += '\n';
  }
  if (inst.has_initial_loads()) {
    out += "initial_loads";
    for (const auto& l : inst.initial_loads()) out += " " + l.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace seqsched

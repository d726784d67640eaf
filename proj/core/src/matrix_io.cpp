// Copyright 2026 The Dilatia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dilatia/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "dilatia/errors.hpp"

namespace dilatia {

namespace {

// Reads an optionally signed decimal at `pos`; from_chars rejects a leading '+'.
bool read_real(std::string_view s, std::size_t& pos, double& out) {
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  if (pos >= s.size() || s[pos] == '+' || s[pos] == '-') return false;
  const char* first = s.data() + pos;
  const char* last = s.data() + s.size();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first) return false;
  pos += static_cast<std::size_t>(ptr - first);
  out = negative ? -value : value;
  return true;
}

bool is_imag_unit(char c) { return c == 'j' || c == 'i'; }

bool try_parse_complex(std::string_view s, Complex& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  // Bare imaginary unit: "j", "-j", "+j".
  {
    std::size_t p = 0;
    double sign = 1.0;
    if (s[p] == '+' || s[p] == '-') sign = s[p++] == '-' ? -1.0 : 1.0;
    if (p + 1 == s.size() && is_imag_unit(s[p])) {
      out = {0.0, sign};
      return true;
    }
  }
  double first = 0.0;
  if (!read_real(s, pos, first)) return false;
  if (pos == s.size()) {
    out = {first, 0.0};
    return true;
  }
  if (is_imag_unit(s[pos]) && pos + 1 == s.size()) {
    out = {0.0, first};
    return true;
  }
  if (s[pos] != '+' && s[pos] != '-') return false;
  double second = 0.0;
  std::size_t save = pos;
  if (pos + 2 == s.size() && is_imag_unit(s[pos + 1])) {
    second = s[pos] == '-' ? -1.0 : 1.0;
    pos += 2;
  } else {
    pos = save;
    if (!read_real(s, pos, second)) return false;
    if (pos + 1 != s.size() || !is_imag_unit(s[pos])) return false;
    ++pos;
  }
  out = {first, second};
  return true;
}

}  // namespace

Complex parse_complex(std::string_view token) {
  Complex out;
  if (!try_parse_complex(token, out)) {
    throw ParseError("malformed complex entry '" + std::string(token) + "'", 1,
                     1);
  }
  return out;
}

ComplexMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Complex>> rows;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<Complex> row;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      Complex value;
      if (!try_parse_complex(line.substr(i, j - i), value)) {
        throw ParseError(
            "malformed complex entry '" + std::string(line.substr(i, j - i)) + "'",
            line_no, static_cast<int>(i) + 1);
      }
      if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw ParseError("non-finite entry", line_no, static_cast<int>(i) + 1);
      }
      row.push_back(value);
      i = j;
    }
    if (!row.empty()) {
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw ParseError("row has " + std::to_string(row.size()) +
                             " entries, expected " +
                             std::to_string(rows.front().size()),
                         line_no, 1);
      }
      rows.push_back(std::move(row));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (rows.empty()) throw ParseError("no matrix rows found", line_no, 1);
  ComplexMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

std::string format_matrix(const ComplexMatrix& m) {
  std::string out;
  char buf[96];
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Complex v = m(r, c);
      std::snprintf(buf, sizeof buf, "%.17g%+.17gj", v.real(), v.imag());
      if (c) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open matrix file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

}  // namespace dilatia

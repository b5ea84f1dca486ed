/*
   Copyright 2026 The spotty Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "spotty/matrix_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "spotty/error.hpp"

namespace spotty {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

unsigned parse_uint(const Token& tok, std::string_view value, std::size_t value_offset, std::size_t line) {
  unsigned out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ParseError("expected a non-negative integer in '" + std::string(tok.text) + "'", line,
                     tok.column + value_offset);
  }
  return out;
}

}  // namespace

GeneratorMatrix parse_matrix(std::string_view text) {
  std::optional<unsigned> m, b, t, n;
  std::size_t header_line = 0;
  std::optional<Ring> ring;
  std::vector<std::vector<RingElement>> rows;
  std::size_t row_length = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (eol == text.size()) break;
      continue;
    }

    if (!ring) {
      header_line = line_no;
      for (const auto& tok : tokens) {
        const auto eq = tok.text.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError("header expects key=value pairs, got '" + std::string(tok.text) + "'", line_no,
                           tok.column);
        }
        const std::string_view key = tok.text.substr(0, eq);
        const unsigned value = parse_uint(tok, tok.text.substr(eq + 1), eq + 1, line_no);
        std::optional<unsigned>* slot = key == "m"   ? &m
                                        : key == "b" ? &b
                                        : key == "t" ? &t
                                        : key == "n" ? &n
                                                     : nullptr;
        if (!slot) throw ParseError("unknown header key '" + std::string(key) + "'", line_no, tok.column);
        if (*slot) throw ParseError("repeated header key '" + std::string(key) + "'", line_no, tok.column);
        *slot = value;
      }
      for (const auto& [name, value] : {std::pair{"m", m}, std::pair{"b", b}, std::pair{"t", t}}) {
        if (!value) throw ParseError(std::string("header is missing ") + name + "=<int>", line_no, 1);
      }
      try {
        ring.emplace(*m);
        ByteLayout(*b, *t, 1);
      } catch (const ParameterError& e) {
        throw ParseError(std::string("layout error: ") + e.what(), line_no, 1);
      }
      if (eol == text.size()) break;
      continue;
    }

    std::vector<RingElement> row;
    row.reserve(tokens.size());
    for (const auto& tok : tokens) {
      try {
        row.push_back(ring->parse(tok.text));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no, tok.column);
      }
    }
    if (row.size() % *b != 0) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, not a multiple of b=" +
                           std::to_string(*b),
                       line_no, tokens.back().column);
    }
    if (!rows.empty() && row.size() != row_length) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, previous rows have " +
                           std::to_string(row_length),
                       line_no, tokens.back().column);
    }
    row_length = row.size();
    rows.push_back(std::move(row));
    if (eol == text.size()) break;
  }

  if (!ring) throw ParseError("missing header line 'm=<int> b=<int> t=<int>'", line_no, 1);

  unsigned bytes = n.value_or(1);
  if (!rows.empty()) {
    bytes = static_cast<unsigned>(row_length / *b);
    if (n && *n != bytes) {
      throw ParseError("header says n=" + std::to_string(*n) + " but rows have " + std::to_string(bytes) + " bytes",
                       header_line, 1);
    }
  }
  try {
    return GeneratorMatrix(*ring, ByteLayout(*b, *t, bytes), std::move(rows));
  } catch (const ParameterError& e) {
    throw ParseError(std::string("layout error: ") + e.what(), header_line, 1);
  }
}

GeneratorMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open matrix file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

std::string format_matrix(const GeneratorMatrix& g) {
  std::string out = "m=" + std::to_string(g.ring().m()) + " b=" + std::to_string(g.layout().b()) +
                    " t=" + std::to_string(g.layout().t()) + " n=" + std::to_string(g.layout().n()) + "\n";
  for (const auto& row : g.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += (j % g.layout().b() == 0) ? "   " : " ";
      out += to_string(row[j]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace spotty

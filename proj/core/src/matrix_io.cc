/*
 * Copyright 2026 The codedmv Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "codedmv/matrix_io.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include "codedmv/errors.h"
#include "codedmv/plan_json.h"

namespace codedmv {
namespace {

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool IsBlank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// Splits on any of `seps`, dropping empty pieces.
std::vector<std::string_view> Tokens(std::string_view s,
                                     std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto j = s.find_first_of(seps, i);
    const auto end = j == std::string_view::npos ? s.size() : j;
    if (end > i) out.push_back(s.substr(i, end - i));
    if (j == std::string_view::npos) break;
    i = j + 1;
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double ParseNumber(std::string_view token, std::string_view where) {
  token = Trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() ||
      ptr != token.data() + token.size()) {
    throw ParseError("invalid number '" + std::string(token) + "' in " +
                     std::string(where));
  }
  return v;
}

std::int64_t ParseIndex(std::string_view token, std::string_view where) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() ||
      ptr != token.data() + token.size() || v < 0) {
    throw ParseError("invalid integer '" + std::string(token) + "' in " +
                     std::string(where));
  }
  return v;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(c));
  return out;
}

}  // namespace

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

SparseMatrix ParseMatrixMarket(std::string_view text) {
  const auto lines = Lines(text);
  if (lines.empty()) throw ParseError("empty Matrix Market file");
  const auto header = Tokens(lines[0], " \t");
  if (header.size() != 5 || header[0] != "%%MatrixMarket" ||
      Lower(header[1]) != "matrix" || Lower(header[2]) != "coordinate") {
    throw ParseError("expected '%%MatrixMarket matrix coordinate <field> "
                     "<symmetry>' header");
  }
  const std::string field = Lower(header[3]);
  const std::string symmetry = Lower(header[4]);
  if (field != "real" && field != "integer" && field != "pattern") {
    throw ParseError("unsupported Matrix Market field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    throw ParseError("unsupported Matrix Market symmetry '" + symmetry + "'");
  }
  const bool pattern = field == "pattern";
  const bool symmetric = symmetry == "symmetric";

  std::size_t i = 1;
  while (i < lines.size() && (lines[i].starts_with('%') || IsBlank(lines[i]))) {
    ++i;
  }
  if (i == lines.size()) throw ParseError("Matrix Market size line missing");
  const auto size = Tokens(lines[i++], " \t");
  if (size.size() != 3) {
    throw ParseError("Matrix Market size line needs rows, cols, nnz");
  }
  const auto rows = ParseIndex(size[0], "size line");
  const auto cols = ParseIndex(size[1], "size line");
  const auto nnz = ParseIndex(size[2], "size line");
  if (symmetric && rows != cols) {
    throw ParseError("symmetric Matrix Market matrix must be square");
  }

  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(symmetric ? 2 * nnz : nnz);
  std::int64_t seen = 0;
  for (; i < lines.size(); ++i) {
    if (IsBlank(lines[i]) || lines[i].starts_with('%')) continue;
    const auto t = Tokens(lines[i], " \t");
    const std::string where = "entry line " + std::to_string(i + 1);
    if (t.size() != (pattern ? 2u : 3u)) {
      throw ParseError("malformed " + where);
    }
    const auto r = ParseIndex(t[0], where);
    const auto c = ParseIndex(t[1], where);
    if (r < 1 || r > rows || c < 1 || c > cols) {
      throw ParseError("index out of range on " + where);
    }
    const double v = pattern ? 1.0 : ParseNumber(t[2], where);
    entries.emplace_back(r - 1, c - 1, v);
    if (symmetric && r != c) entries.emplace_back(c - 1, r - 1, v);
    ++seen;
  }
  if (seen != nnz) {
    throw ParseError("Matrix Market header declares " + std::to_string(nnz) +
                     " entries, file has " + std::to_string(seen));
  }
  SparseMatrix m(rows, cols);
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

SparseMatrix ReadMatrixMarket(const std::filesystem::path& path) {
  return ParseMatrixMarket(ReadTextFile(path));
}

std::string FormatMatrixMarket(const SparseMatrix& m) {
  std::ostringstream out;
  out << "%%MatrixMarket matrix coordinate real general\n"
      << m.rows() << ' ' << m.cols() << ' ' << m.nonZeros() << '\n';
  for (Eigen::Index r = 0; r < m.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
      out << it.row() + 1 << ' ' << it.col() + 1 << ' '
          << FormatDouble(it.value()) << '\n';
    }
  }
  return out.str();
}

void WriteMatrixMarket(const std::filesystem::path& path,
                       const SparseMatrix& m) {
  WriteTextFile(path, FormatMatrixMarket(m));
}

DenseMatrix ParseDenseCsv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  const auto lines = Lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (IsBlank(lines[i])) continue;
    const std::string where = "CSV line " + std::to_string(i + 1);
    std::vector<double> row;
    // Keep empty cells so "1,,2" is an error rather than two columns.
    std::size_t start = 0;
    while (true) {
      const auto comma = lines[i].find(',', start);
      row.push_back(ParseNumber(lines[i].substr(start, comma - start), where));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(where + " has " + std::to_string(row.size()) +
                       " columns, expected " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("CSV matrix is empty");
  DenseMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

DenseMatrix ReadDenseCsv(const std::filesystem::path& path) {
  return ParseDenseCsv(ReadTextFile(path));
}

std::string FormatDenseCsv(const DenseMatrix& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ',';
      out += FormatDouble(m(r, c));
    }
    out += '\n';
  }
  return out;
}

void WriteDenseCsv(const std::filesystem::path& path, const DenseMatrix& m) {
  WriteTextFile(path, FormatDenseCsv(m));
}

Eigen::VectorXd ParseVector(std::string_view text) {
  const auto tokens = Tokens(text, ", \t\r\n");
  if (tokens.empty()) throw ParseError("vector file is empty");
  Eigen::VectorXd v(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    v(i) = ParseNumber(tokens[i], "vector entry " + std::to_string(i + 1));
  }
  return v;
}

Eigen::VectorXd ReadVector(const std::filesystem::path& path) {
  return ParseVector(ReadTextFile(path));
}

std::string FormatVector(const Eigen::VectorXd& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out += FormatDouble(v(i));
    out += '\n';
  }
  return out;
}

void WriteVector(const std::filesystem::path& path, const Eigen::VectorXd& v) {
  WriteTextFile(path, FormatVector(v));
}

}  // namespace codedmv

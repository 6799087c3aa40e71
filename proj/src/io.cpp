#include "strongcp/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

#include "strongcp/errors.hpp"

namespace strongcp::io {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool is_blank(std::string_view line) { return split_tokens(line).empty(); }

std::uint64_t parse_count(std::string_view token, const char* what) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(std::string(what) + ": expected a nonnegative integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

double parse_double(std::string_view token) {
  double value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError("expected a finite decimal number, got '" + std::string(token) + "'");
  }
  return value;
}

std::int64_t parse_integer(std::string_view token) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string format_number(std::int64_t value) { return std::to_string(value); }

std::string format_number(__int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value)
                                   : static_cast<unsigned __int128>(value);
  std::string digits;
  while (mag > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

bool PointFile::all_integer() const {
  for (const auto& row : rows) {
    for (const auto& t : row) {
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc() || ptr != t.data() + t.size()) return false;
    }
  }
  return true;
}

PointSetd PointFile::to_double() const {
  PointSetd out(d, static_cast<Eigen::Index>(n()));
  for (std::size_t i = 0; i < n(); ++i) {
    for (int j = 0; j < d; ++j) out(j, static_cast<Eigen::Index>(i)) = parse_double(rows[i][j]);
  }
  return out;
}

PointSeti PointFile::to_integer() const {
  PointSeti out(d, static_cast<Eigen::Index>(n()));
  for (std::size_t i = 0; i < n(); ++i) {
    for (int j = 0; j < d; ++j) out(j, static_cast<Eigen::Index>(i)) = parse_integer(rows[i][j]);
  }
  return out;
}

PointFile parse_point_file(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t at = 0;
  while (at < lines.size() && is_blank(lines[at])) ++at;
  if (at == lines.size()) throw ParseError("point file: missing header");
  const auto header = split_tokens(lines[at++]);
  if (header.size() != 2) throw ParseError("point file: header must be 'd n'");
  const auto d = parse_count(header[0], "point file header d");
  const auto n = parse_count(header[1], "point file header n");
  if (d < 1 || d > 1'000'000) throw ParseError("point file: dimension must be positive");

  PointFile file;
  file.d = static_cast<int>(d);
  for (; at < lines.size(); ++at) {
    const auto tokens = split_tokens(lines[at]);
    if (tokens.empty()) continue;
    if (file.rows.size() == n) throw ParseError("point file: more rows than the header's n");
    if (tokens.size() != d) {
      throw ParseError("point file: line " + std::to_string(at + 1) + " has " +
                       std::to_string(tokens.size()) + " coordinates, expected " +
                       std::to_string(d));
    }
    std::vector<std::string> row;
    for (auto t : tokens) {
      parse_double(t);
      row.emplace_back(t);
    }
    file.rows.push_back(std::move(row));
  }
  if (file.rows.size() != n) {
    throw ParseError("point file: header says " + std::to_string(n) + " points, found " +
                     std::to_string(file.rows.size()));
  }
  return file;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PointFile read_point_file(const std::filesystem::path& path) {
  return parse_point_file(read_text(path));
}

std::string format_point_file(const PointFile& file) {
  std::string out = std::to_string(file.d) + " " + std::to_string(file.n()) + "\n";
  for (const auto& row : file.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ' ';
      out += row[j];
    }
    out += '\n';
  }
  return out;
}

SetSystem parse_set_system(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty() || is_blank(lines.front())) throw ParseError("set system: missing header");
  const auto header = split_tokens(lines.front());
  if (header.size() != 2) throw ParseError("set system: header must be 'n k'");
  const auto n = parse_count(header[0], "set system header n");
  const auto k = parse_count(header[1], "set system header k");
  if (n < 1) throw ParseError("set system: n must be positive");
  if (k < 2) throw ParseError("set system: k must be at least 2");
  if (n > std::numeric_limits<ElementId>::max()) throw ParseError("set system: n too large");

  std::vector<Subset> sets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Subset s;
    for (auto t : split_tokens(lines[i])) {
      const auto id = parse_count(t, "set system id");
      if (id >= n) {
        throw ParseError("set system: line " + std::to_string(i + 1) + " holds id " +
                         std::string(t) + " >= n");
      }
      if (!s.empty() && s.back() >= id) {
        throw ParseError("set system: line " + std::to_string(i + 1) +
                         " is not strictly ascending");
      }
      s.push_back(static_cast<ElementId>(id));
    }
    sets.push_back(std::move(s));
  }
  try {
    return SetSystem(n, k, std::move(sets));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string format_set_system(const SetSystem& sys) {
  std::string out = std::to_string(sys.n()) + " " + std::to_string(sys.k()) + "\n";
  for (const auto& s : sys.sets()) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(s[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace strongcp::io

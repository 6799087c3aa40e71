#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "strongcp/abstract_system.hpp"
#include "strongcp/geometry.hpp"

namespace strongcp::io {

/// Point file: header "d n", then n lines of d decimal coordinates.
/// Coordinate text is kept verbatim so reports can echo it.
struct PointFile {
  int d = 0;
  std::vector<std::vector<std::string>> rows;

  std::size_t n() const { return rows.size(); }
  bool all_integer() const;
  PointSetd to_double() const;
  // Throws ParseError if some coordinate is not an integer literal.
  PointSeti to_integer() const;
};

PointFile parse_point_file(std::string_view text);
PointFile read_point_file(const std::filesystem::path& path);
std::string format_point_file(const PointFile& file);

std::string read_text(const std::filesystem::path& path);

/// Shortest text that parses back to the same value.
std::string format_number(double value);
std::string format_number(std::int64_t value);
std::string format_number(__int128 value);

double parse_double(std::string_view token);
std::int64_t parse_integer(std::string_view token);

template <CoordinateScalar Scalar>
std::string format_points(const PointSet<Scalar>& points) {
  std::string out = std::to_string(points.rows()) + " " + std::to_string(points.cols()) + "\n";
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    for (Eigen::Index j = 0; j < points.rows(); ++j) {
      if (j > 0) out += ' ';
      out += format_number(points(j, i));
    }
    out += '\n';
  }
  return out;
}

/// Set-system file: header "n k", then one set per line as ascending
/// space-separated ids. An empty line is an empty set.
SetSystem parse_set_system(std::string_view text);
std::string format_set_system(const SetSystem& sys);

}  // namespace strongcp::io

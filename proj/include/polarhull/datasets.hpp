#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "polarhull/errors.hpp"
#include "polarhull/geometry.hpp"

namespace polarhull {

enum class DatasetFamily {
  DiskUniform,
  CircleRing,
  Blobs,
  Clusters,
  Sinusoid,
  SquareGrid,
  ConvexPosition,
};

inline constexpr std::array<std::string_view, 7> kDatasetFamilyNames = {
    "disk_uniform", "circle_ring", "blobs",           "clusters",
    "sinusoid",     "square_grid", "convex_position",
};

inline std::string_view family_name(DatasetFamily family) {
  return kDatasetFamilyNames[static_cast<std::size_t>(family)];
}

inline DatasetFamily family_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kDatasetFamilyNames.size(); ++i) {
    if (kDatasetFamilyNames[i] == name) return static_cast<DatasetFamily>(i);
  }
  throw ConfigError("unknown dataset family: " + std::string(name));
}

namespace detail {

// Uniform draw in [0, 1) with 53 significant bits; identical across
// platforms for a given engine state.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double gaussian(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  while (u1 == 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

}  // namespace detail

inline std::vector<Point> generate_dataset(DatasetFamily family, std::size_t count,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> points;
  points.reserve(count);
  auto push = [&](double x, double y) { points.push_back(Point{x, y, points.size()}); };

  switch (family) {
    case DatasetFamily::DiskUniform:
      for (std::size_t i = 0; i < count; ++i) {
        const double r = std::sqrt(detail::uniform01(rng));
        const double t = kTwoPi * detail::uniform01(rng);
        push(r * std::cos(t), r * std::sin(t));
      }
      break;
    case DatasetFamily::CircleRing:
      for (std::size_t i = 0; i < count; ++i) {
        const double t = kTwoPi * detail::uniform01(rng);
        const double r = 1.0 + 0.01 * (2.0 * detail::uniform01(rng) - 1.0);
        push(r * std::cos(t), r * std::sin(t));
      }
      break;
    case DatasetFamily::Blobs:
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t blob =
            std::min<std::size_t>(2, static_cast<std::size_t>(detail::uniform01(rng) * 3.0));
        const double at = kTwoPi * static_cast<double>(blob) / 3.0;
        push(2.0 * std::cos(at) + 0.1 * detail::gaussian(rng),
             2.0 * std::sin(at) + 0.1 * detail::gaussian(rng));
      }
      break;
    case DatasetFamily::Clusters: {
      std::array<double, 10> centers;  // 5 cluster centers in [-1, 1]^2
      for (double& c : centers) c = 2.0 * detail::uniform01(rng) - 1.0;
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t k =
            std::min<std::size_t>(4, static_cast<std::size_t>(detail::uniform01(rng) * 5.0));
        push(centers[2 * k] + 0.05 * (2.0 * detail::uniform01(rng) - 1.0),
             centers[2 * k + 1] + 0.05 * (2.0 * detail::uniform01(rng) - 1.0));
      }
      break;
    }
    case DatasetFamily::Sinusoid:
      for (std::size_t i = 0; i < count; ++i) {
        const double x = kTwoPi * detail::uniform01(rng);
        push(x, std::sin(3.0 * x));
      }
      break;
    case DatasetFamily::SquareGrid: {
      // Exact dyadic coordinates; heavy coordinate ties by construction.
      std::size_t side = 1;
      while (side * side < count) ++side;
      for (std::size_t i = 0; i < count; ++i) {
        push(static_cast<double>(i % side) * 0.25, static_cast<double>(i / side) * 0.25);
      }
      break;
    }
    case DatasetFamily::ConvexPosition: {
      std::vector<double> angles(count);
      for (double& a : angles) a = kTwoPi * detail::uniform01(rng);
      std::sort(angles.begin(), angles.end());
      for (double a : angles) push(std::cos(a), std::sin(a));
      break;
    }
  }
  return points;
}

enum class FileFormat { XyWhitespace, Csv };

inline FileFormat format_from_name(std::string_view name) {
  if (name == "xy") return FileFormat::XyWhitespace;
  if (name == "csv") return FileFormat::Csv;
  throw ConfigError("unknown file format: " + std::string(name));
}

inline FileFormat format_from_path(std::string_view path) {
  const std::size_t dot = path.rfind('.');
  if (dot != std::string_view::npos && path.substr(dot) == ".csv") return FileFormat::Csv;
  return FileFormat::XyWhitespace;
}

namespace detail {

// Shortest round-trip decimal form.
inline std::string format_double(double value) {
  char buf[64];
  const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view token, std::size_t line_number) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const std::from_chars_result res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) {
    throw ParseError(line_number, "invalid number: '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line_number, "non-finite coordinate: '" + std::string(token) + "'");
  }
  return value;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace detail

// Two columns per point. XyWhitespace: "x y" separated by blanks, '#' starts
// a comment, blank lines ignored. Csv: "x,y" with an "x,y" header row.
inline void save_points(const std::string& path, const std::vector<Point>& points,
                        FileFormat format) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  if (format == FileFormat::Csv) {
    out << "x,y\n";
    for (const Point& p : points) {
      out << detail::format_double(p.x) << ',' << detail::format_double(p.y) << '\n';
    }
  } else {
    out << "# x y\n";
    for (const Point& p : points) {
      out << detail::format_double(p.x) << ' ' << detail::format_double(p.y) << '\n';
    }
  }
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

inline std::vector<Point> load_points(const std::string& path, FileFormat format) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::vector<Point> points;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view view = detail::trim(line);
    if (view.empty()) continue;
    double x = 0.0;
    double y = 0.0;
    if (format == FileFormat::Csv) {
      if (line_number == 1 && view == "x,y") continue;  // header row
      const std::size_t comma = view.find(',');
      if (comma == std::string_view::npos) {
        throw ParseError(line_number, "expected 'x,y'");
      }
      x = detail::parse_double(detail::trim(view.substr(0, comma)), line_number);
      y = detail::parse_double(detail::trim(view.substr(comma + 1)), line_number);
    } else {
      if (view.front() == '#') continue;
      const std::size_t split = view.find_first_of(" \t");
      if (split == std::string_view::npos) {
        throw ParseError(line_number, "expected 'x y'");
      }
      x = detail::parse_double(detail::trim(view.substr(0, split)), line_number);
      y = detail::parse_double(detail::trim(view.substr(split)), line_number);
    }
    points.push_back(Point{x, y, points.size()});
  }
  if (in.bad()) throw IoError("read failed: " + path);
  if (points.empty()) throw EmptyInput();
  return points;
}

}  // namespace polarhull

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polarhull {

// Base type for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
  EmptyInput() : Error("empty input dataset") {}
};

struct DegenerateDataset : Error {
  explicit DegenerateDataset(const std::string& what = "degenerate dataset") : Error(what) {}
};

// A horizon-angle leg has zero length (query point or polar origin coincides
// with the anchor).
struct ZeroLengthLeg : Error {
  explicit ZeroLengthLeg(const std::string& what = "zero-length angle leg") : Error(what) {}
};

struct EmptyHull : Error {
  EmptyHull() : Error("hull has no vertices") {}
};

struct EmptyFence : Error {
  EmptyFence() : Error("fence point list is empty") {}
};

// Raised when interval halving would drop below the supported floor, or when
// the contour loop exhausts its halving budget without converging.
struct IntervalUnderflow : Error {
  explicit IntervalUnderflow(const std::string& what = "bin interval underflow") : Error(what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  ParseError(std::size_t line_number, const std::string& what)
      : Error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
  std::size_t line;
};

}  // namespace polarhull

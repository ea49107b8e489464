#pragma once

#include <cstddef>

namespace polarhull {

// Per-stage counters of dataset points consumed by the reduction stages.
//
// A "visit" is one dataset point pulled into a stage: binning counts each
// point assigned to a bin, boundary each point scanned for the extremes,
// fencing each point merged into a fence list, horizon each candidate
// accepted into a wedge.  Downstream per-entry work within a stage (stack
// sweeps, re-filtering) is linear in these counts.
struct WorkTally {
  std::size_t binning = 0;
  std::size_t boundary = 0;
  std::size_t fencing = 0;
  std::size_t horizon = 0;

  std::size_t total() const { return binning + boundary + fencing + horizon; }
};

}  // namespace polarhull

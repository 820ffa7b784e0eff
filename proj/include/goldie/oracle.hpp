#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "goldie/arrangement.hpp"

namespace goldie {

/// Result of the brute-force component count. Only stabilized results are meaningful.
struct OracleResult {
  /// The radius pair whose counts agreed (or the last pair tried).
  long radius_low = 0;
  long radius_high = 0;
  /// Rank of the detected unbounded directions in Q^n.
  std::size_t span_dimension = 0;
  std::size_t component_count = 0;
  bool stabilized = false;
  /// Unbounded directions as vectors of Z^n.
  std::vector<std::vector<std::int64_t>> directions;
};

/// Counts components of the closure of the support of alpha without the partition LPs:
/// enumerates alpha + sum c_k d_k over a Z-basis d of ker(G) cap Z^n with |c_k| <= R,
/// detects directions (coefficient norm <= 3) along which progressions starting in the
/// support never leave it, and counts support points modulo their span. The count
/// stabilizes when two consecutive radii of the schedule agree.
OracleResult oracle_component_count(const ArrangementSpec& spec, const Point& alpha, const std::vector<long>& radii);

/// Radii growing by half from a start suited to the kernel rank of G, capped by box size.
std::vector<long> default_radius_schedule(const ArrangementSpec& spec);

}  // namespace goldie

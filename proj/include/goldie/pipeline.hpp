#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "goldie/ehrhart.hpp"

namespace goldie {

/// Everything `analyze` reports about one point alpha.
struct AnalysisReport {
  ArrangementSpec spec;
  Point alpha;
  ConstraintSystem constraints;
  PartitionCertificate certificate;
  SignConfiguration signs;
  bool assumption3 = false;
  std::string assumption3_defect;
  /// Set only when the direct-sum condition holds.
  std::optional<std::size_t> components;
  std::optional<ComponentFibers> fibers;
  std::optional<std::vector<Point>> dset;
  std::optional<Box> box;
};

/// Runs the full pipeline. Never throws on a direct-sum violation: the verdict and
/// defect are recorded and the counting fields stay empty.
AnalysisReport analyze(const ArrangementSpec& spec, const Point& alpha);

/// Number of connected components of the closure of the support of alpha (the Goldie
/// rank of the primitive quotient). AssumptionViolation when the direct-sum condition fails.
std::size_t goldie_rank(const ArrangementSpec& spec, const Point& alpha);

struct FamilyRow {
  long x = 0;
  bool admissible = false;
  std::optional<Rational> ehrhart_value;
  std::optional<std::size_t> direct_count;
};

struct FamilyTable {
  GoldieFamily family;
  std::vector<FamilyRow> rows;
};

/// Family data plus one row per x in 1..x_max. With `verify`, every admissible row also
/// carries the Goldie rank of the dilated instance (x chi, x alpha) rebuilt from scratch.
/// Without a closed form the direct counts are always tabulated.
FamilyTable goldie_family(const ArrangementSpec& spec, const Point& alpha, long x_max, bool verify);

}  // namespace goldie

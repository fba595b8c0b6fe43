#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlslab/classify.hpp"

namespace nlslab {

/// Rectangular (p, q) grid; node values are p_min + i dp, rounded to 1e-10.
struct SurfaceGrid {
  double p_min;
  double p_max;
  double dp;
  double q_min;
  double q_max;
  double dq;

  std::vector<double> p_values() const;
  std::vector<double> q_values() const;
};

enum class CellStatus { critical, stable_all, unstable_all, cap_exceeded, skipped, error };

const char* to_string(CellStatus s);

struct SurfaceCell {
  double p;
  double q;
  CellStatus status;
  std::optional<double> omega_c;  // set only for critical cells
  std::string message;            // error text for status == error
};

/// Critical frequency omega_c(p, q) on every grid node, ordered by (p, q).
/// Nodes with q <= p are reported as skipped. Cells run on `jobs` worker threads;
/// the result does not depend on the thread count.
std::vector<SurfaceCell> surface_sweep(double a_p, double a_q, const SurfaceGrid& grid,
                                       const CriticalSearchOptions& opts = {}, int jobs = 1);

/// Result for a single cell (what surface_sweep computes per node).
SurfaceCell surface_cell(double a_p, double a_q, double p, double q,
                         const CriticalSearchOptions& opts = {});

struct ArgmaxPoint {
  double q;
  double p_max;
  double omega_max;
  /// The slice maximum sits at its largest-p critical cell or the slice contains
  /// cap_exceeded cells: omega_c appears to grow without bound as p -> q.
  bool unbounded;
};

/// Per q-slice, the p with largest finite omega_c. Slices without critical cells are omitted.
std::vector<ArgmaxPoint> argmax_curve(const std::vector<SurfaceCell>& sweep);

}  // namespace nlslab

#include "nlslab/surface.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "nlslab/errors.hpp"

namespace nlslab {
namespace {

std::vector<double> axis(double lo, double hi, double step, const char* name) {
  if (!(step > 0.0) || !(hi >= lo)) {
    throw DomainError(std::string("invalid grid axis for ") + name);
  }
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    v.push_back(std::round((lo + static_cast<double>(i) * step) * 1e10) / 1e10);
  }
  return v;
}

}  // namespace

std::vector<double> SurfaceGrid::p_values() const { return axis(p_min, p_max, dp, "p"); }
std::vector<double> SurfaceGrid::q_values() const { return axis(q_min, q_max, dq, "q"); }

const char* to_string(CellStatus s) {
  switch (s) {
    case CellStatus::critical: return "critical";
    case CellStatus::stable_all: return "stable_all";
    case CellStatus::unstable_all: return "unstable_all";
    case CellStatus::cap_exceeded: return "cap_exceeded";
    case CellStatus::skipped: return "skipped";
    case CellStatus::error: return "error";
  }
  return "?";
}

SurfaceCell surface_cell(double a_p, double a_q, double p, double q,
                         const CriticalSearchOptions& opts) {
  SurfaceCell cell{p, q, CellStatus::skipped, std::nullopt, {}};
  if (!(q > p)) return cell;
  try {
    const ModelParams model(a_p, a_q, p, q);
    switch (classify(model)) {
      case StabilityType::S: cell.status = CellStatus::stable_all; return cell;
      case StabilityType::U: cell.status = CellStatus::unstable_all; return cell;
      default: break;
    }
    const CriticalSearch r = find_omega_crit(model, opts);
    switch (r.status) {
      case CriticalStatus::critical:
        cell.status = CellStatus::critical;
        cell.omega_c = r.point->omega_c;
        break;
      case CriticalStatus::cap_exceeded: cell.status = CellStatus::cap_exceeded; break;
      case CriticalStatus::no_sign_change:
        cell.status = r.constant_sign > 0 ? CellStatus::stable_all : CellStatus::unstable_all;
        break;
    }
  } catch (const std::exception& e) {
    cell.status = CellStatus::error;
    cell.message = e.what();
  }
  return cell;
}

std::vector<SurfaceCell> surface_sweep(double a_p, double a_q, const SurfaceGrid& grid,
                                       const CriticalSearchOptions& opts, int jobs) {
  const std::vector<double> ps = grid.p_values();
  const std::vector<double> qs = grid.q_values();
  if (ps.front() <= 1.0 || ps.back() >= 5.0 || qs.front() <= 1.0 || qs.back() > 5.0) {
    throw DomainError("surface grid must lie within (1,5) x (1,5]");
  }
  ModelParams(a_p, a_q, 1.5, 2.0).require_standing_waves();

  const std::size_t n = ps.size() * qs.size();
  std::vector<SurfaceCell> cells(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      const double p = ps[k / qs.size()];
      const double q = qs[k % qs.size()];
      cells[k] = surface_cell(a_p, a_q, p, q, opts);
    }
  };

  const int threads = std::max(1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return cells;
}

std::vector<ArgmaxPoint> argmax_curve(const std::vector<SurfaceCell>& sweep) {
  std::map<double, std::vector<const SurfaceCell*>> slices;
  for (const SurfaceCell& c : sweep) slices[c.q].push_back(&c);

  std::vector<ArgmaxPoint> out;
  for (auto& [q, cells] : slices) {
    std::sort(cells.begin(), cells.end(),
              [](const SurfaceCell* a, const SurfaceCell* b) { return a->p < b->p; });
    const SurfaceCell* best = nullptr;
    const SurfaceCell* last_critical = nullptr;
    bool has_cap = false;
    for (const SurfaceCell* c : cells) {
      if (c->status == CellStatus::cap_exceeded) has_cap = true;
      if (c->status != CellStatus::critical) continue;
      last_critical = c;
      if (!best || *c->omega_c > *best->omega_c) best = c;
    }
    if (!best) continue;
    const bool at_edge = best == last_critical;
    out.push_back({q, best->p, *best->omega_c, has_cap || at_edge});
  }
  return out;
}

}  // namespace nlslab

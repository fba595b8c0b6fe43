#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "nlslab/evolve.hpp"
#include "nlslab/profile.hpp"
#include "nlslab/slope.hpp"
#include "nlslab/surface.hpp"

namespace nlslab {

/// 12 significant digits, '.' separator regardless of locale.
std::string format_double(double v);

void write_slope_csv(std::ostream& os, const std::vector<SlopeEvaluation>& rows);
void write_surface_csv(std::ostream& os, const std::vector<SurfaceCell>& cells);
void write_profile_csv(std::ostream& os, const Profile& profile);

void write_evolution_header(std::ostream& os);
void write_evolution_row(std::ostream& os, const Diagnostics& d);
void write_snapshot_header(std::ostream& os);
void write_snapshot(std::ostream& os, double t, const std::vector<double>& x, const Field& u);

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string tool_version;
  double wall_time_seconds = 0.0;
};

std::string to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const std::string& text);

inline constexpr const char* tool_version = "1.0.0";

}  // namespace nlslab

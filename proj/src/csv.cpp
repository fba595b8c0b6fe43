#include "nlslab/csv.hpp"

#include <cstdio>
#include <cstring>

#include "json.hpp"

namespace nlslab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  // snprintf follows LC_NUMERIC; normalise in case a comma locale is active
  for (char* c = buf; *c; ++c) {
    if (*c == ',') *c = '.';
  }
  return buf;
}

void write_slope_csv(std::ostream& os, const std::vector<SlopeEvaluation>& rows) {
  os << "omega,phi0,C,F,J\n";
  for (const auto& r : rows) {
    os << format_double(r.omega) << ',' << format_double(r.phi0) << ',' << format_double(r.c_factor)
       << ',' << format_double(r.f_value) << ',' << format_double(r.j_value) << '\n';
  }
}

void write_surface_csv(std::ostream& os, const std::vector<SurfaceCell>& cells) {
  os << "p,q,status,omega_c\n";
  for (const auto& c : cells) {
    os << format_double(c.p) << ',' << format_double(c.q) << ',' << to_string(c.status) << ',';
    if (c.omega_c) os << format_double(*c.omega_c);
    os << '\n';
  }
}

void write_profile_csv(std::ostream& os, const Profile& profile) {
  os << "x,phi\n";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    os << format_double(profile.x[i]) << ',' << format_double(profile.values[i]) << '\n';
  }
}

void write_evolution_header(std::ostream& os) { os << "t,mass,energy,sup_norm,mod_distance\n"; }

void write_evolution_row(std::ostream& os, const Diagnostics& d) {
  os << format_double(d.time) << ',' << format_double(d.discrete_mass) << ','
     << format_double(d.discrete_energy) << ',' << format_double(d.sup_norm) << ',';
  if (d.modulation_distance) os << format_double(*d.modulation_distance);
  os << '\n';
}

void write_snapshot_header(std::ostream& os) { os << "t,x,re_u,im_u\n"; }

void write_snapshot(std::ostream& os, double t, const std::vector<double>& x, const Field& u) {
  const std::string ts = format_double(t);
  for (std::size_t j = 0; j < u.size(); ++j) {
    os << ts << ',' << format_double(x[j]) << ',' << format_double(u[j].real()) << ','
       << format_double(u[j].imag()) << '\n';
  }
}

std::string to_json(const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["command"] = manifest.command;
  j["parameters"] = manifest.parameters;
  j["tool_version"] = manifest.tool_version;
  j["wall_time_seconds"] = manifest.wall_time_seconds;
  return j.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  m.tool_version = j.at("tool_version").get<std::string>();
  m.wall_time_seconds = j.at("wall_time_seconds").get<double>();
  return m;
}

}  // namespace nlslab

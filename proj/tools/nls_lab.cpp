#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlslab/classify.hpp"
#include "nlslab/csv.hpp"
#include "nlslab/errors.hpp"
#include "nlslab/evolve.hpp"
#include "nlslab/profile.hpp"
#include "nlslab/slope.hpp"
#include "nlslab/surface.hpp"

using namespace nlslab;

namespace {

constexpr int exit_usage = 2;
constexpr int exit_numeric = 3;

struct ModelFlags {
  double ap = 0.0, aq = 0.0, p = 0.0, q = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--ap", ap, "coefficient a_p")->required();
    cmd->add_option("--aq", aq, "coefficient a_q")->required();
    cmd->add_option("--p", p, "lower power p")->required();
    cmd->add_option("--q", q, "upper power q")->required();
  }
  ModelParams model() const { return ModelParams(ap, aq, p, q); }
};

// Output goes to --out when given (plus <out>.manifest.json), otherwise to stdout.
class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (!path_.empty()) {
      file_.open(path_, std::ios::binary);
      if (!file_) throw DomainError("cannot open output file '" + path_ + "'");
    }
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream file_;
};

RunManifest manifest_for(const CLI::App& cmd) {
  RunManifest m;
  m.command = cmd.get_name();
  m.tool_version = tool_version;
  for (const CLI::Option* opt : cmd.get_options()) {
    if (opt->get_name() == "--help" || opt->get_name() == "-h") continue;
    std::string key = opt->get_single_name();
    std::string value;
    if (opt->count() > 0) {
      for (const auto& r : opt->results()) value += (value.empty() ? "" : ",") + r;
    } else {
      value = opt->get_default_str();
    }
    m.parameters[key] = value;
  }
  return m;
}

void write_manifest(const CLI::App& cmd, const Output& out,
                    std::chrono::steady_clock::time_point start) {
  if (out.path().empty()) return;
  RunManifest m = manifest_for(cmd);
  m.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ofstream f(out.path() + ".manifest.json", std::ios::binary);
  f << to_json(m);
}

int default_jobs() {
  if (const char* env = std::getenv("NLS_LAB_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    throw DomainError(std::string("NLS_LAB_JOBS must be a positive integer, got '") + env + "'");
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

SurfaceGrid parse_grid(const std::string& text) {
  double v[6];
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf,%lf:%lf:%lf%c", &v[0], &v[1], &v[2], &v[3], &v[4],
                  &v[5], &tail) != 6) {
    throw DomainError("--grid must look like p_min:p_max:dp,q_min:q_max:dq");
  }
  if (!(v[2] > 0.0) || !(v[5] > 0.0) || v[1] < v[0] || v[4] < v[3]) {
    throw DomainError("--grid needs positive steps and min <= max");
  }
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slope-criterion stability analysis and simulation of double-power NLS standing waves"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version);

  // slope
  ModelFlags slope_model;
  double omega_min = 0.0, omega_max = 0.0;
  int points = 0;
  bool log_spacing = false;
  std::string slope_out;
  CLI::App* slope_cmd = app.add_subcommand("slope", "tabulate omega, phi0, C, F, J");
  slope_model.attach(slope_cmd);
  slope_cmd->add_option("--omega-min", omega_min, "smallest frequency")->required();
  slope_cmd->add_option("--omega-max", omega_max, "largest frequency")->required();
  slope_cmd->add_option("--points", points, "number of frequencies")->required();
  slope_cmd->add_flag("--log", log_spacing, "geometric spacing");
  slope_cmd->add_option("--out", slope_out, "CSV file (default stdout)");

  // classify
  ModelFlags classify_model;
  double classify_tol = 1e-8;
  CLI::App* classify_cmd = app.add_subcommand("classify", "stability type and critical frequency");
  classify_model.attach(classify_cmd);
  classify_cmd->add_option("--tol", classify_tol, "relative bracket width on omega_c")
      ->capture_default_str();

  // surface
  double surf_ap = 0.0, surf_aq = 0.0, surf_tol = 1e-8;
  std::string grid_text = "1.01:4.99:0.01,1.01:4.99:0.01";
  std::string surf_out;
  int jobs = 0;
  CLI::App* surface_cmd = app.add_subcommand("surface", "critical frequency over a (p, q) grid");
  surface_cmd->add_option("--ap", surf_ap, "coefficient a_p")->required();
  surface_cmd->add_option("--aq", surf_aq, "coefficient a_q")->required();
  surface_cmd->add_option("--grid", grid_text, "p_min:p_max:dp,q_min:q_max:dq")
      ->capture_default_str();
  surface_cmd->add_option("--tol", surf_tol, "relative bracket width on omega_c")
      ->capture_default_str();
  surface_cmd->add_option("--jobs", jobs, "worker threads (default NLS_LAB_JOBS or all cores)");
  surface_cmd->add_option("--out", surf_out, "CSV file (default stdout)");

  // profile
  ModelFlags profile_model;
  double profile_omega = 0.0, profile_L = 50.0, profile_dx = 0.05;
  std::string profile_out;
  CLI::App* profile_cmd = app.add_subcommand("profile", "standing-wave profile phi(x)");
  profile_model.attach(profile_cmd);
  profile_cmd->add_option("--omega", profile_omega, "frequency")->required();
  profile_cmd->add_option("--L", profile_L, "half width of the domain")->capture_default_str();
  profile_cmd->add_option("--dx", profile_dx, "grid spacing")->capture_default_str();
  profile_cmd->add_option("--out", profile_out, "CSV file (default stdout)");

  // simulate
  ModelFlags sim_model;
  double sim_omega = 0.0;
  std::string perturb_text = "scale:0";
  SimulationConfig sim_cfg;
  sim_cfg.t_final = 50.0;
  std::string sim_out, snapshot_out;
  int snapshot_every = 1000;
  CLI::App* simulate_cmd = app.add_subcommand("simulate", "evolve a perturbed standing wave");
  sim_model.attach(simulate_cmd);
  simulate_cmd->add_option("--omega", sim_omega, "frequency")->required();
  simulate_cmd->add_option("--perturb", perturb_text, "kind:epsilon, kind in scale, "
                           "cosine_modulation, tanh_tilt, translate_bump")->capture_default_str();
  simulate_cmd->add_option("--L", sim_cfg.half_width, "half width of the domain")
      ->capture_default_str();
  simulate_cmd->add_option("--dx", sim_cfg.dx, "grid spacing")->capture_default_str();
  simulate_cmd->add_option("--dt", sim_cfg.dt, "time step")->capture_default_str();
  simulate_cmd->add_option("--T", sim_cfg.t_final, "final time")->capture_default_str();
  simulate_cmd->add_option("--observe-every", sim_cfg.observe_every, "steps between CSV rows")
      ->capture_default_str();
  simulate_cmd->add_option("--out", sim_out, "time-series CSV (default stdout)");
  simulate_cmd->add_option("--snapshots", snapshot_out, "field snapshot CSV");
  simulate_cmd->add_option("--snapshot-every", snapshot_every, "steps between snapshots")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  const auto start = std::chrono::steady_clock::now();
  double current_omega = std::nan("");
  try {
    if (*slope_cmd) {
      const ModelParams model = slope_model.model();
      model.require_standing_waves();
      const FrequencyWindow win = frequency_window(model);
      if (points < 1) throw DomainError("--points must be at least 1");
      if (!(omega_min > 0.0) || omega_max < omega_min) {
        throw DomainError("need 0 < omega-min <= omega-max");
      }
      if (!win.omega_star.exceeds(omega_max)) {
        throw DomainError("omega-max must be below omega* = " +
                          format_double(win.omega_star.value()));
      }
      std::vector<SlopeEvaluation> rows;
      for (int i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        current_omega = log_spacing ? omega_min * std::pow(omega_max / omega_min, t)
                                    : omega_min + (omega_max - omega_min) * t;
        rows.push_back(slope(model, current_omega));
      }
      Output out(slope_out);
      write_slope_csv(out.stream(), rows);
      write_manifest(*slope_cmd, out, start);
    } else if (*classify_cmd) {
      const ModelParams model = classify_model.model();
      model.require_standing_waves();
      const StabilityType type = classify(model);
      nlohmann::ordered_json j;
      j["type"] = to_string(type);
      if (type == StabilityType::SU || type == StabilityType::US) {
        CriticalSearchOptions opts;
        opts.rel_tol = classify_tol;
        const CriticalSearch search = find_omega_crit(model, opts);
        if (search.status != CriticalStatus::critical) {
          throw NumericError("no sign change of J found up to omega = " +
                             format_double(search.omega_reached));
        }
        j["omega_c"] = search.point->omega_c;
      }
      j["j0_label"] = to_string(j_zero_limit(model).label);
      j["jstar_label"] = to_string(j_star_limit_sign(model));
      std::cout << j.dump() << '\n';
    } else if (*surface_cmd) {
      const SurfaceGrid grid = parse_grid(grid_text);
      if (surface_cmd->count("--jobs") == 0) jobs = default_jobs();
      if (jobs < 1) throw DomainError("--jobs must be positive");
      CriticalSearchOptions opts;
      opts.rel_tol = surf_tol;
      const auto cells = surface_sweep(surf_ap, surf_aq, grid, opts, jobs);
      Output out(surf_out);
      write_surface_csv(out.stream(), cells);
      write_manifest(*surface_cmd, out, start);
    } else if (*profile_cmd) {
      const ModelParams model = profile_model.model();
      current_omega = profile_omega;
      const Profile prof = build_profile(model, profile_omega, profile_dx, profile_L);
      Output out(profile_out);
      write_profile_csv(out.stream(), prof);
      write_manifest(*profile_cmd, out, start);
    } else if (*simulate_cmd) {
      const ModelParams model = sim_model.model();
      const PerturbationSpec spec = parse_perturbation(perturb_text);
      if (snapshot_every < 1) throw DomainError("--snapshot-every must be positive");
      current_omega = sim_omega;
      const Profile prof = build_profile(model, sim_omega, sim_cfg.dx, sim_cfg.half_width);
      const std::vector<double> x = simulation_grid(sim_cfg);
      Output out(sim_out);
      std::ofstream snaps;
      if (!snapshot_out.empty()) {
        snaps.open(snapshot_out, std::ios::binary);
        if (!snaps) throw DomainError("cannot open snapshot file '" + snapshot_out + "'");
        write_snapshot_header(snaps);
      }
      write_evolution_header(out.stream());
      const int every = sim_cfg.observe_every;
      sim_cfg.observe_every = std::gcd(every, snapshot_out.empty() ? every : snapshot_every);
      const long last = std::max(1L, std::lround(sim_cfg.t_final / sim_cfg.dt));
      evolve(model, sim_cfg, perturbed_initial_data(prof, spec),
             [&](const SimulationState& s, const Diagnostics& d) {
               if (s.step % every == 0 || s.step == last) write_evolution_row(out.stream(), d);
               if (snaps.is_open() && (s.step % snapshot_every == 0 || s.step == last)) {
                 write_snapshot(snaps, s.time, x, s.field);
               }
             },
             &prof);
      write_manifest(*simulate_cmd, out, start);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure";
    if (!std::isnan(current_omega)) std::cerr << " at omega=" << format_double(current_omega);
    std::cerr << ": " << e.what() << '\n';
    return exit_numeric;
  }
  return 0;
}

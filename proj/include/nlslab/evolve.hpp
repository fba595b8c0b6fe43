#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nlslab/model.hpp"
#include "nlslab/profile.hpp"

namespace nlslab {

using Field = std::vector<std::complex<double>>;

struct SimulationConfig {
  double dt = 1e-3;
  double dx = 0.05;
  double half_width = 50.0;
  double t_final = 1.0;
  int observe_every = 100;  // steps between observer calls
};

/// Node coordinates x_j = -L + j dx, j = 0..2L/dx, for a configuration.
std::vector<double> simulation_grid(const SimulationConfig& cfg);

/// Fields hold every grid node; the two end nodes are the Dirichlet boundary and stay 0.
struct SimulationState {
  long step = 0;
  double time = 0.0;
  Field field;
  std::vector<double> relax;  // nonlinear weight at the last half step
};

struct Diagnostics {
  double time;
  double discrete_mass;
  double discrete_energy;
  double sup_norm;
  std::optional<double> modulation_distance;  // needs a reference profile
};

/// Crank-Nicolson relaxation scheme for i u_t + u_xx + (a_p|u|^{p-1} + a_q|u|^{q-1}) u = 0
/// with the three-point Laplacian and homogeneous Dirichlet conditions:
///   (w^{n+1/2} + w^{n-1/2}) / 2 = a_p|u^n|^{p-1} + a_q|u^n|^{q-1},
///   i (u^{n+1} - u^n)/dt + D2 (u^{n+1} + u^n)/2 = -w^{n+1/2} (u^{n+1} + u^n)/2,
/// with w^{-1/2} evaluated on u^0.
class Evolver {
 public:
  Evolver(const ModelParams& model, const SimulationConfig& cfg, Field u0);

  /// Advances one time step. Throws NumericError on a non-finite field.
  void step();

  const SimulationState& state() const { return state_; }
  const SimulationConfig& config() const { return cfg_; }

 private:
  double nonlinear_weight(double modulus) const;

  ModelParams model_;
  SimulationConfig cfg_;
  SimulationState state_;
  std::vector<std::complex<double>> lower_, diag_, upper_, rhs_;
};

double discrete_mass(const Field& u, double dx);
double discrete_energy(const ModelParams& model, const Field& u, double dx);
double sup_norm(const Field& u);

/// inf over (theta, y) of the discrete H^1 distance between u and e^{i theta} phi(. - y).
/// theta is optimised in closed form, y by golden-section search on +/-5 around the peak of |u|.
double modulation_distance(const Field& u, const std::vector<double>& x, const Profile& reference);

Diagnostics diagnose(const ModelParams& model, const SimulationState& state,
                     const std::vector<double>& x, double dx, const Profile* reference);

using Observer = std::function<void(const SimulationState&, const Diagnostics&)>;

/// Runs to t_final, calling `observer` at step 0, every observe_every steps and at the last step.
void evolve(const ModelParams& model, const SimulationConfig& cfg, Field u0,
            const Observer& observer, const Profile* reference = nullptr);

enum class PerturbationKind { scale, cosine_modulation, tanh_tilt, translate_bump };

/// u0 = phi + epsilon psi with psi one of phi, phi cos, phi tanh, phi(. - 3).
struct PerturbationSpec {
  PerturbationKind kind;
  double epsilon;
};

const char* to_string(PerturbationKind kind);

/// Parses "kind:epsilon", e.g. "scale:0.01". Throws DomainError.
PerturbationSpec parse_perturbation(const std::string& text);

Field perturbed_initial_data(const Profile& profile, const PerturbationSpec& spec);

struct ExperimentRecord {
  Profile profile;
  std::vector<Diagnostics> series;
};

ExperimentRecord perturbation_experiment(const ModelParams& model, double omega,
                                         const PerturbationSpec& spec, const SimulationConfig& cfg);

}  // namespace nlslab

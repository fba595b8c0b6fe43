#include "nlslab/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "nlslab/errors.hpp"
#include "nlslab/tridiagonal.hpp"

namespace nlslab {

using cplx = std::complex<double>;

std::vector<double> simulation_grid(const SimulationConfig& cfg) {
  const auto half = static_cast<long>(std::llround(cfg.half_width / cfg.dx));
  std::vector<double> x(static_cast<std::size_t>(2 * half + 1));
  for (long j = -half; j <= half; ++j) x[static_cast<std::size_t>(j + half)] = static_cast<double>(j) * cfg.dx;
  return x;
}

Evolver::Evolver(const ModelParams& model, const SimulationConfig& cfg, Field u0)
    : model_(model), cfg_(cfg) {
  if (!(cfg.dt > 0.0) || !(cfg.dx > 0.0) || !(cfg.t_final > 0.0) || !(cfg.half_width > 0.0)) {
    throw DomainError("dt, dx, half_width and t_final must be positive");
  }
  const std::size_t n = simulation_grid(cfg).size();
  if (n < 18) throw DomainError("simulation grid needs at least 16 interior nodes");
  if (u0.size() != n) {
    throw DomainError("initial data has " + std::to_string(u0.size()) + " nodes, grid has " +
                      std::to_string(n));
  }
  u0.front() = 0.0;
  u0.back() = 0.0;

  state_.field = std::move(u0);
  state_.relax.resize(n);
  for (std::size_t j = 0; j < n; ++j) state_.relax[j] = nonlinear_weight(std::abs(state_.field[j]));

  const std::size_t m = n - 2;
  lower_.resize(m);
  diag_.resize(m);
  upper_.resize(m);
  rhs_.resize(m);
}

double Evolver::nonlinear_weight(double modulus) const {
  return model_.a_p() * std::pow(modulus, model_.p() - 1.0) +
         model_.a_q() * std::pow(modulus, model_.q() - 1.0);
}

void Evolver::step() {
  Field& u = state_.field;
  std::vector<double>& w = state_.relax;
  const std::size_t n = u.size();
  const double inv_dx2 = 1.0 / (cfg_.dx * cfg_.dx);
  const cplx half_idt(0.0, 0.5 * cfg_.dt);

  // Relaxation update w^{n+1/2} = 2 V(u^n) - w^{n-1/2}, then
  // (I - i dt/2 L) u^{n+1} = (I + i dt/2 L) u^n with L = D2 + diag(w^{n+1/2}).
  const cplx off = -half_idt * inv_dx2;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    w[j] = 2.0 * nonlinear_weight(std::abs(u[j])) - w[j];
    const cplx lu = (u[j + 1] - 2.0 * u[j] + u[j - 1]) * inv_dx2 + w[j] * u[j];
    const std::size_t k = j - 1;
    lower_[k] = off;
    upper_[k] = off;
    diag_[k] = 1.0 - half_idt * (-2.0 * inv_dx2 + w[j]);
    rhs_[k] = u[j] + half_idt * lu;
  }

  solve_tridiagonal<cplx>(lower_, diag_, upper_, rhs_);

  double check = 0.0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    u[j] = rhs_[j - 1];
    check += std::norm(u[j]);
  }
  ++state_.step;
  state_.time = static_cast<double>(state_.step) * cfg_.dt;
  if (!std::isfinite(check)) {
    throw NumericError("non-finite field at step " + std::to_string(state_.step));
  }
}

double discrete_mass(const Field& u, double dx) {
  double sum = 0.0;
  for (const cplx& v : u) sum += std::norm(v);
  return 0.5 * dx * sum;
}

double discrete_energy(const ModelParams& model, const Field& u, double dx) {
  double kinetic = 0.0;
  double potential = 0.0;
  const double cp = model.a_p() / (model.p() + 1.0), cq = model.a_q() / (model.q() + 1.0);
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (j + 1 < u.size()) kinetic += std::norm(u[j + 1] - u[j]);
    const double r = std::abs(u[j]);
    potential += cp * std::pow(r, model.p() + 1.0) + cq * std::pow(r, model.q() + 1.0);
  }
  return 0.5 * kinetic / dx - dx * potential;
}

double sup_norm(const Field& u) {
  double m = 0.0;
  for (const cplx& v : u) m = std::max(m, std::abs(v));
  return m;
}

namespace {

// ||u||^2 + ||psi||^2 - 2 |<u, psi>| in the discrete H^1 inner product.
double squared_distance_at_shift(const Field& u, const std::vector<double>& x,
                                 const Profile& ref, double shift, double u_norm2, double dx) {
  double psi_norm2 = 0.0;
  cplx inner = 0.0;
  double prev_psi = ref(x.front() - shift);
  psi_norm2 += prev_psi * prev_psi * dx;
  inner += u.front() * prev_psi * dx;
  for (std::size_t j = 1; j < u.size(); ++j) {
    const double psi = ref(x[j] - shift);
    const double dpsi = (psi - prev_psi) / dx;
    const cplx du = (u[j] - u[j - 1]) / dx;
    psi_norm2 += (psi * psi + dpsi * dpsi) * dx;
    inner += (u[j] * psi + du * dpsi) * dx;
    prev_psi = psi;
  }
  return std::max(0.0, u_norm2 + psi_norm2 - 2.0 * std::abs(inner));
}

}  // namespace

double modulation_distance(const Field& u, const std::vector<double>& x, const Profile& reference) {
  if (u.size() != x.size() || u.size() < 2) throw DomainError("field and grid sizes differ");
  const double dx = x[1] - x[0];
  double u_norm2 = std::norm(u.front()) * dx;
  for (std::size_t j = 1; j < u.size(); ++j) {
    u_norm2 += (std::norm(u[j]) + std::norm((u[j] - u[j - 1]) / dx)) * dx;
  }

  std::size_t peak = 0;
  for (std::size_t j = 1; j < u.size(); ++j) {
    if (std::abs(u[j]) > std::abs(u[peak])) peak = j;
  }
  double a = x[peak] - 5.0, b = x[peak] + 5.0;
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  auto f = [&](double y) { return squared_distance_at_shift(u, x, reference, y, u_norm2, dx); };
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-6) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    }
  }
  return std::sqrt(std::min(fc, fd));
}

Diagnostics diagnose(const ModelParams& model, const SimulationState& state,
                     const std::vector<double>& x, double dx, const Profile* reference) {
  Diagnostics d{state.time, discrete_mass(state.field, dx), discrete_energy(model, state.field, dx),
                sup_norm(state.field), std::nullopt};
  if (reference) d.modulation_distance = modulation_distance(state.field, x, *reference);
  return d;
}

void evolve(const ModelParams& model, const SimulationConfig& cfg, Field u0,
            const Observer& observer, const Profile* reference) {
  Evolver ev(model, cfg, std::move(u0));
  const std::vector<double> x = simulation_grid(cfg);
  const long steps = std::max(1L, std::lround(cfg.t_final / cfg.dt));
  const long every = std::max(1, cfg.observe_every);

  auto observe = [&] {
    if (observer) observer(ev.state(), diagnose(model, ev.state(), x, cfg.dx, reference));
  };
  observe();
  for (long n = 1; n <= steps; ++n) {
    ev.step();
    if (n % every == 0 || n == steps) observe();
  }
}

const char* to_string(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::scale: return "scale";
    case PerturbationKind::cosine_modulation: return "cosine_modulation";
    case PerturbationKind::tanh_tilt: return "tanh_tilt";
    case PerturbationKind::translate_bump: return "translate_bump";
  }
  return "?";
}

PerturbationSpec parse_perturbation(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("perturbation must look like kind:epsilon");
  const std::string name = text.substr(0, colon);
  PerturbationKind kind;
  if (name == "scale") kind = PerturbationKind::scale;
  else if (name == "cosine_modulation" || name == "cos") kind = PerturbationKind::cosine_modulation;
  else if (name == "tanh_tilt" || name == "tanh") kind = PerturbationKind::tanh_tilt;
  else if (name == "translate_bump" || name == "shift") kind = PerturbationKind::translate_bump;
  else throw DomainError("unknown perturbation kind '" + name + "'");

  double eps = 0.0;
  try {
    std::size_t used = 0;
    eps = std::stod(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw DomainError("bad epsilon");
  } catch (const std::logic_error&) {
    throw DomainError("perturbation epsilon is not a number: '" + text.substr(colon + 1) + "'");
  }
  if (!(std::abs(eps) < 1.0)) throw DomainError("perturbation epsilon must satisfy |epsilon| < 1");
  return {kind, eps};
}

Field perturbed_initial_data(const Profile& profile, const PerturbationSpec& spec) {
  Field u(profile.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double x = profile.x[j], phi = profile.values[j];
    double psi = 0.0;
    switch (spec.kind) {
      case PerturbationKind::scale: psi = phi; break;
      case PerturbationKind::cosine_modulation: psi = phi * std::cos(x); break;
      case PerturbationKind::tanh_tilt: psi = phi * std::tanh(x); break;
      case PerturbationKind::translate_bump: psi = profile(x - 3.0); break;
    }
    u[j] = phi + spec.epsilon * psi;
  }
  return u;
}

ExperimentRecord perturbation_experiment(const ModelParams& model, double omega,
                                         const PerturbationSpec& spec, const SimulationConfig& cfg) {
  ExperimentRecord rec{build_profile(model, omega, cfg.dx, cfg.half_width), {}};
  evolve(model, cfg, perturbed_initial_data(rec.profile, spec),
         [&rec](const SimulationState&, const Diagnostics& d) { rec.series.push_back(d); },
         &rec.profile);
  return rec;
}

}  // namespace nlslab

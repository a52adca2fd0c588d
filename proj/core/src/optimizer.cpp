#include "risnoma/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "risnoma/channel.hpp"
#include "risnoma/jammer.hpp"

namespace risnoma {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double min_step = 1e-12;        // line-search abandon threshold
constexpr unsigned plateau_span = 5;      // consecutive flat steps before stop
constexpr double stationary_tol = 1e-6;   // on ||pg|| / (1 + |f|)

struct RestartOutcome {
  RisState ris;
  double objective = inf;
  unsigned iterations = 0;
  std::vector<double> trace;
};

// Predicted first-order decrease for the move ris -> cand at step s: the
// phases move by exactly s * d_theta before wrapping (wrapping leaves the
// objective unchanged), the amplitudes by their clamped displacement.
double predicted_decrease(const RisState& ris, const RisState& cand,
                          const RisGradient& g, double s, bool absorptive) {
  double m = 0.0;
  for (std::size_t n = 0; n < ris.size(); ++n)
    m += s * g.d_theta[n] * g.d_theta[n];
  if (absorptive)
    for (std::size_t n = 0; n < ris.size(); ++n)
      m += g.d_beta[n] * (ris.beta[n] - cand.beta[n]);
  return m;
}

RestartOutcome run_descent(const ChannelSet& cs, const SystemParams& params,
                           const OptimizerConfig& cfg, RisState start) {
  const bool absorptive = params.mode == RisMode::Absorptive;

  RestartOutcome out;
  out.ris = std::move(start);
  out.objective = reduced_objective(cs, out.ris, params);
  out.trace.push_back(out.objective);
  if (!std::isfinite(out.objective) || out.ris.size() == 0) return out;

  double step_try = cfg.init_step;
  unsigned plateau = 0;
  for (unsigned iter = 1; iter <= cfg.max_iters; ++iter) {
    const RisGradient g = reduced_gradient(cs, out.ris, params);
    const double pg = projected_gradient_norm(out.ris, g, params.mode);
    if (pg <= stationary_tol * (1.0 + std::abs(out.objective))) break;

    double s = step_try;
    bool accepted = false;
    RisState cand;
    double f_cand = inf;
    while (s >= min_step) {
      cand = step(out.ris, g, s, params.mode);
      f_cand = reduced_objective(cs, cand, params);
      const double m = predicted_decrease(out.ris, cand, g, s, absorptive);
      if (f_cand <= out.objective - cfg.armijo_c * m) {
        accepted = true;
        break;
      }
      s *= cfg.backtrack_factor;
    }
    if (!accepted) break;  // cannot resolve any further decrease

    const double improvement =
        (out.objective - f_cand) / std::max(std::abs(out.objective), 1e-300);
    out.ris = std::move(cand);
    out.objective = f_cand;
    out.trace.push_back(f_cand);
    out.iterations = iter;
    step_try = s / cfg.backtrack_factor;  // probe one notch larger next time
    plateau = improvement < cfg.rel_tol ? plateau + 1 : 0;
    if (plateau >= plateau_span) break;
  }
  return out;
}

RisState random_phases(std::size_t n, Xoshiro256PlusPlus& rng) {
  RisState ris = RisState::all_on(n);
  for (double& t : ris.theta) t = 2.0 * std::numbers::pi * rng.uniform01();
  return ris;
}

OptimizationResult infeasible_result(std::size_t n) {
  OptimizationResult out;
  out.ris = RisState::all_on(n);
  out.objective = inf;
  out.allocation.p1 = inf;
  out.allocation.p2 = inf;
  out.allocation.total_normalized = inf;
  out.objective_trace = {inf};
  out.feasible = false;
  return out;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1)
    throw std::invalid_argument("OptimizerConfig: restarts must be >= 1");
  if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0))
    throw std::invalid_argument("OptimizerConfig: backtrack_factor in (0, 1)");
  if (!(rel_tol > 0.0))
    throw std::invalid_argument("OptimizerConfig: rel_tol must be positive");
  if (!(init_step > 0.0))
    throw std::invalid_argument("OptimizerConfig: init_step must be positive");
  if (!(armijo_c > 0.0 && armijo_c < 1.0))
    throw std::invalid_argument("OptimizerConfig: armijo_c in (0, 1)");
}

RisState step(const RisState& ris, const RisGradient& gradient,
              double step_size, RisMode mode) {
  if (step_size <= 0.0)
    throw std::invalid_argument("step: step size must be positive");
  if (gradient.d_theta.size() != ris.size() ||
      gradient.d_beta.size() != ris.size())
    throw std::invalid_argument("step: gradient length mismatch");

  RisState out = ris;
  for (std::size_t n = 0; n < ris.size(); ++n)
    out.theta[n] = wrap_angle(ris.theta[n] - step_size * gradient.d_theta[n]);
  if (mode == RisMode::Absorptive)
    for (std::size_t n = 0; n < ris.size(); ++n)
      out.beta[n] =
          std::clamp(ris.beta[n] - step_size * gradient.d_beta[n], 0.0, 1.0);
  return out;
}

double projected_gradient_norm(const RisState& ris, const RisGradient& g,
                               RisMode mode) {
  double s = 0.0;
  for (double d : g.d_theta) s += d * d;
  if (mode == RisMode::Absorptive)
    for (std::size_t n = 0; n < ris.size(); ++n) {
      const double move =
          ris.beta[n] - std::clamp(ris.beta[n] - g.d_beta[n], 0.0, 1.0);
      s += move * move;
    }
  return std::sqrt(s);
}

OptimizationResult optimize(const ChannelSet& cs, const SystemParams& params,
                            const OptimizerConfig& cfg) {
  return optimize(cs, params, cfg, std::nullopt);
}

OptimizationResult optimize(const ChannelSet& cs, const SystemParams& params,
                            const OptimizerConfig& cfg,
                            const std::optional<RisState>& warm_start) {
  cfg.validate();
  if (params.mode == RisMode::NoRis)
    throw std::invalid_argument("optimize: use no_ris_baseline for the no-RIS mode");
  cs.validate();
  const std::size_t N = cs.elements();
  const bool absorptive = params.mode == RisMode::Absorptive;

  // Phase-only solution for the absorptive warm start, computed here when
  // the caller did not supply one.
  std::optional<RisState> warm = warm_start;
  if (absorptive && cfg.warm_start_from_phase_only && !warm) {
    SystemParams po_params = params;
    po_params.mode = RisMode::PhaseOnly;
    OptimizationResult po = optimize(cs, po_params, cfg, std::nullopt);
    if (po.feasible) warm = po.ris;
  }

  std::vector<RisState> starts;
  starts.push_back(RisState::all_on(N));
  const std::uint64_t restart_root = seed_chain(
      seed_chain(cfg.seed.master_seed, seed_domain::optimizer),
      cfg.seed.trial_index);
  for (unsigned r = 1; r < cfg.restarts; ++r) {
    Xoshiro256PlusPlus rng(seed_chain(restart_root, r));
    starts.push_back(random_phases(N, rng));
  }
  if (absorptive) {
    starts.push_back(RisState::all_off(N));  // can always mimic "no RIS"
    if (warm) {
      RisState w = *warm;
      w.beta.assign(N, 1.0);  // phase-only iterates carry beta = 1 already
      w.theta.resize(N);
      starts.push_back(std::move(w));
    }
  }

  OptimizationResult best;
  best.objective = inf;
  bool have_best = false;
  for (std::size_t r = 0; r < starts.size(); ++r) {
    RestartOutcome outcome =
        run_descent(cs, params, cfg, std::move(starts[r]));
    if (!have_best || outcome.objective < best.objective) {
      have_best = true;
      best.ris = std::move(outcome.ris);
      best.objective = outcome.objective;
      best.iterations_used = outcome.iterations;
      best.restart_index_of_best = static_cast<unsigned>(r);
      best.objective_trace = std::move(outcome.trace);
    }
  }

  if (!std::isfinite(best.objective)) return infeasible_result(N);
  best.allocation = min_power_allocation(cs, best.ris, params);
  best.feasible = true;
  return best;
}

OptimizationResult no_ris_baseline(const ChannelSet& cs,
                                   const SystemParams& params) {
  const ChannelSet direct = truncate_channels(cs, 0, cs.jammer_antennas());
  const RisState empty;

  OptimizationResult out;
  out.ris = empty;
  out.allocation = min_power_allocation(direct, empty, params);
  out.objective = out.allocation.p1 + out.allocation.p2;
  out.objective_trace = {out.objective};
  out.feasible = true;
  return out;
}

}  // namespace risnoma

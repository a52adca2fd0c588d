#pragma once

#include <optional>

#include "risnoma/alloc.hpp"
#include "risnoma/rng.hpp"

namespace risnoma {

struct OptimizerConfig {
  unsigned restarts = 20;        // random-restart count (index 0 is theta = 0)
  unsigned max_iters = 500;      // cap per restart
  double init_step = 0.1;        // first line-search trial step
  double backtrack_factor = 0.5;
  double armijo_c = 1e-4;        // sufficient-decrease constant
  double rel_tol = 1e-8;         // plateau threshold on relative improvement
  bool warm_start_from_phase_only = true;  // absorptive mode only
  RngSeed seed;

  void validate() const;
};

struct OptimizationResult {
  RisState ris;
  Allocation allocation;       // min_power_allocation at `ris`
  double objective = 0.0;      // p1 + p2 at `ris`
  unsigned iterations_used = 0;
  unsigned restart_index_of_best = 0;
  std::vector<double> objective_trace;  // accepted objectives, best restart
  bool feasible = false;       // false when every restart was degenerate
};

// Projected gradient descent with Armijo backtracking over the RIS state,
// restarted from multiple initial points; the best local minimum wins
// (ties by lower restart index). Deterministic given cfg.seed.
//
// Restart layout: index 0 starts at theta = 0, beta = 1; indices
// 1..restarts-1 use uniformly random phases with beta = 1. Absorptive mode
// appends two deterministic extras: index `restarts` starts fully absorbed
// (beta = 0, emulating operation without the RIS) and, when warm starting
// is enabled, index `restarts`+1 starts from the phase-only solution.
OptimizationResult optimize(const ChannelSet& cs, const SystemParams& params,
                            const OptimizerConfig& cfg);

// Same, but with a caller-provided phase-only solution for the warm start,
// saving the internal phase-only run when the caller already has one.
OptimizationResult optimize(const ChannelSet& cs, const SystemParams& params,
                            const OptimizerConfig& cfg,
                            const std::optional<RisState>& warm_start);

// Closed form for operation without an RIS: sigma_j^2 = Pj ||hj||^2 and the
// minimum-power allocation on the direct channels. No iteration. Throws
// DegenerateChannel when a direct user channel is numerically zero.
OptimizationResult no_ris_baseline(const ChannelSet& cs,
                                   const SystemParams& params);

// One projected update: theta' = wrap(theta - step * d_theta); in
// absorptive mode beta' = clamp(beta - step * d_beta, 0, 1), in phase-only
// mode beta is left untouched.
RisState step(const RisState& ris, const RisGradient& gradient,
              double step_size, RisMode mode);

// Norm of the unit-step projected gradient; zero at stationary points of
// the constrained problem. Phase-only mode ignores the beta components.
double projected_gradient_norm(const RisState& ris, const RisGradient& g,
                               RisMode mode);

}  // namespace risnoma

#pragma once

#include <stdexcept>

#include "risnoma/model.hpp"

namespace risnoma {

// An effective user channel is numerically zero: meeting any positive SINR
// target would take unbounded power. Callers on the optimization path map
// this to an infinite objective.
struct DegenerateChannel : std::runtime_error {
  explicit DegenerateChannel(int user)
      : std::runtime_error(user == 1 ? "degenerate channel for UE1"
                                     : "degenerate channel for UE2"),
        user(user) {}
  int user;
};

// |u_i|^2 below this is treated as zero.
constexpr double degenerate_gain_threshold = 1e-30;

struct Allocation {
  double p1 = 0.0;
  double p2 = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double sigma_j2 = 0.0;
  double total_normalized = 0.0;  // (p1 + p2) / sigma^2
  bool sic_order_ok = false;      // p1 |u1|^2 > p2 |u2|^2
};

// Achieved SINRs for given user powers, with the jammer playing its
// worst-case response to the current RIS state.
std::pair<double, double> sinr(const ChannelSet& cs, const RisState& ris,
                               double p1, double p2, double Pj, double sigma2);

// Minimum-power allocation with both SINR constraints active:
//   p2 = T2 S / |u2|^2,  p1 = T1 (T2 + 1) S / |u1|^2,  S = sigma_j^2 + sigma^2.
// Throws DegenerateChannel when an effective user gain is numerically zero.
Allocation min_power_allocation(const ChannelSet& cs, const RisState& ris,
                                const SystemParams& params);

// Total transmit power p1 + p2 as a function of the RIS state alone:
//   P = (sigma^2 + Pj ||w||^2) (T2 / |u2|^2 + T1 (T2 + 1) / |u1|^2).
// Returns +infinity on degenerate channels instead of throwing.
double reduced_objective(const ChannelSet& cs, const RisState& ris,
                         const SystemParams& params);

struct RisGradient {
  std::vector<double> d_theta;
  std::vector<double> d_beta;
};

// Analytic gradient of reduced_objective with respect to every phase and
// amplitude. Throws DegenerateChannel where the objective is infinite.
RisGradient reduced_gradient(const ChannelSet& cs, const RisState& ris,
                             const SystemParams& params);

}  // namespace risnoma

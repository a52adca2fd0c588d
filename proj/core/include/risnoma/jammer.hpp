#pragma once

#include "risnoma/model.hpp"

namespace risnoma {

// Worst-case jammer solution for a given RIS configuration. The jammer
// matched-filters against its effective channel; rho = 0 (no path to the
// BS) yields the all-zero vector.
struct JammerResult {
  CVec xj;               // optimal transmit vector; ||xj||^2 = Pj when rho > 0
  double sigma_j2 = 0.0; // interference power at the BS: Pj * rho^2
  double rho = 0.0;      // norm of the effective jammer channel
};

JammerResult solve_jammer(const ChannelSet& cs, const RisState& ris,
                          double Pj);

// Interference power only; equals solve_jammer(...).sigma_j2.
double interference_power(const ChannelSet& cs, const RisState& ris,
                          double Pj);

}  // namespace risnoma

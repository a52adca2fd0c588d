#pragma once

#include "risnoma/model.hpp"
#include "risnoma/rng.hpp"

namespace risnoma {

// Per-entry RMS amplitude gains for Rayleigh fading: every channel entry is
// drawn as gain * z with z a unit circularly-symmetric complex Gaussian, so
// E{|entry|^2} = gain^2.
struct GainProfile {
  double h1 = 5.0;
  double h2 = 2.0;
  double f = 1.0;
  double g1 = 1.0;
  double g2 = 0.2;
  double hj = 1.0;
  double Gj = 0.2;

  void validate() const;  // all gains finite and >= 0
};

// One unit circularly-symmetric complex Gaussian sample (E{|z|^2} = 1),
// drawn in polar form; consumes exactly two generator outputs.
Complex unit_complex_gaussian(Xoshiro256PlusPlus& rng);

// Draws one full channel realization. Deterministic given `seed`; trials
// with different trial_index own disjoint child streams. Draw order is
// h1, h2, f, g1, g2, hj, Gj (row-major), each entry consuming two
// generator outputs, so a given (seed, N, M) always yields the same set.
ChannelSet draw_channels(const GainProfile& profile, std::size_t N,
                         std::size_t M, RngSeed seed);

// First-N-elements / first-M-antennas restriction of a larger realization.
// Used to keep sweeps over N (or M) paired on the same underlying draw.
ChannelSet truncate_channels(const ChannelSet& cs, std::size_t N,
                             std::size_t M);

}  // namespace risnoma

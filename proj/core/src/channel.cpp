#include "risnoma/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risnoma {

void GainProfile::validate() const {
  for (double g : {h1, h2, f, g1, g2, hj, Gj})
    if (!(std::isfinite(g) && g >= 0.0))
      throw std::invalid_argument("GainProfile: gains must be finite and >= 0");
}

Complex unit_complex_gaussian(Xoshiro256PlusPlus& rng) {
  // |z|^2 ~ Exp(1), phase uniform: equivalent to two independent real
  // normals of variance 1/2 each.
  const double radius = std::sqrt(-std::log(rng.uniform01_positive()));
  const double phase = 2.0 * std::numbers::pi * rng.uniform01();
  return {radius * std::cos(phase), radius * std::sin(phase)};
}

ChannelSet draw_channels(const GainProfile& profile, std::size_t N,
                         std::size_t M, RngSeed seed) {
  profile.validate();
  if (M < 1)
    throw std::invalid_argument("draw_channels: at least one jammer antenna");

  Xoshiro256PlusPlus rng(seed_chain(
      seed_chain(seed.master_seed, seed_domain::channels), seed.trial_index));

  ChannelSet cs;
  cs.h1 = profile.h1 * unit_complex_gaussian(rng);
  cs.h2 = profile.h2 * unit_complex_gaussian(rng);
  cs.f.resize(N);
  cs.g1.resize(N);
  cs.g2.resize(N);
  for (auto& z : cs.f) z = profile.f * unit_complex_gaussian(rng);
  for (auto& z : cs.g1) z = profile.g1 * unit_complex_gaussian(rng);
  for (auto& z : cs.g2) z = profile.g2 * unit_complex_gaussian(rng);
  cs.hj.resize(M);
  for (auto& z : cs.hj) z = profile.hj * unit_complex_gaussian(rng);
  cs.Gj = CMat(N, M);
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t m = 0; m < M; ++m)
      cs.Gj(n, m) = profile.Gj * unit_complex_gaussian(rng);
  return cs;
}

ChannelSet truncate_channels(const ChannelSet& cs, std::size_t N,
                             std::size_t M) {
  if (N > cs.elements() || M > cs.jammer_antennas() || M < 1)
    throw std::invalid_argument("truncate_channels: requested shape exceeds source");

  ChannelSet out;
  out.h1 = cs.h1;
  out.h2 = cs.h2;
  out.f.assign(cs.f.begin(), cs.f.begin() + N);
  out.g1.assign(cs.g1.begin(), cs.g1.begin() + N);
  out.g2.assign(cs.g2.begin(), cs.g2.begin() + N);
  out.hj.assign(cs.hj.begin(), cs.hj.begin() + M);
  out.Gj = CMat(N, M);
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t m = 0; m < M; ++m) out.Gj(n, m) = cs.Gj(n, m);
  return out;
}

}  // namespace risnoma

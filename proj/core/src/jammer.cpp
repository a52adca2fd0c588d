#include "risnoma/jammer.hpp"

#include <cmath>
#include <stdexcept>

namespace risnoma {

JammerResult solve_jammer(const ChannelSet& cs, const RisState& ris,
                          double Pj) {
  if (Pj < 0.0)
    throw std::invalid_argument("solve_jammer: negative power budget");

  const CVec w = effective_jammer_channel(cs, ris);
  double norm2 = 0.0;
  for (Complex z : w) norm2 += std::norm(z);

  JammerResult out;
  out.rho = std::sqrt(norm2);
  out.sigma_j2 = Pj * norm2;
  out.xj.assign(w.size(), Complex{0.0, 0.0});
  if (out.rho > 0.0 && Pj > 0.0) {
    const double scale = std::sqrt(Pj) / out.rho;
    for (std::size_t m = 0; m < w.size(); ++m)
      out.xj[m] = scale * std::conj(w[m]);
  }
  return out;
}

double interference_power(const ChannelSet& cs, const RisState& ris,
                          double Pj) {
  return solve_jammer(cs, ris, Pj).sigma_j2;
}

}  // namespace risnoma

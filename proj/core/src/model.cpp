#include "risnoma/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risnoma {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void check_ris_match(const ChannelSet& cs, const RisState& ris) {
  require(ris.beta.size() == ris.theta.size(),
          "RisState: beta and theta lengths differ");
  require(ris.size() == cs.elements(),
          "RIS state length does not match channel element count");
}

}  // namespace

std::string_view to_string(RisMode mode) {
  switch (mode) {
    case RisMode::NoRis: return "no-ris";
    case RisMode::PhaseOnly: return "phase-only";
    case RisMode::Absorptive: return "absorptive";
  }
  return "?";
}

std::optional<RisMode> parse_mode(std::string_view name) {
  if (name == "no-ris" || name == "noris") return RisMode::NoRis;
  if (name == "phase-only" || name == "phaseonly") return RisMode::PhaseOnly;
  if (name == "absorptive") return RisMode::Absorptive;
  return std::nullopt;
}

void ChannelSet::validate() const {
  const std::size_t n = f.size();
  const std::size_t m = hj.size();
  require(m >= 1, "ChannelSet: at least one jammer antenna required");
  require(g1.size() == n && g2.size() == n,
          "ChannelSet: f, g1, g2 lengths differ");
  require(Gj.rows() == n && Gj.cols() == m, "ChannelSet: Gj shape mismatch");
  require(finite(h1) && finite(h2), "ChannelSet: non-finite direct channel");
  for (std::size_t i = 0; i < n; ++i)
    require(finite(f[i]) && finite(g1[i]) && finite(g2[i]),
            "ChannelSet: non-finite RIS-side entry");
  for (std::size_t i = 0; i < m; ++i)
    require(finite(hj[i]), "ChannelSet: non-finite jammer entry");
  for (Complex z : Gj.flat())
    require(finite(z), "ChannelSet: non-finite Gj entry");
}

RisState RisState::all_on(std::size_t n) {
  return {std::vector<double>(n, 1.0), std::vector<double>(n, 0.0)};
}

RisState RisState::all_off(std::size_t n) {
  return {std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
}

void RisState::canonicalize() {
  for (double& t : theta) t = wrap_angle(t);
}

void RisState::validate(bool phase_only) const {
  require(beta.size() == theta.size(),
          "RisState: beta and theta lengths differ");
  for (std::size_t n = 0; n < beta.size(); ++n) {
    require(std::isfinite(beta[n]) && std::isfinite(theta[n]),
            "RisState: non-finite entry");
    require(beta[n] >= 0.0 && beta[n] <= 1.0,
            "RisState: amplitude outside [0, 1]");
    require(theta[n] >= 0.0 && theta[n] < two_pi,
            "RisState: phase not canonical");
    if (phase_only)
      require(beta[n] == 1.0, "RisState: phase-only mode requires beta == 1");
  }
}

void SystemParams::validate() const {
  require(sigma2 > 0.0, "SystemParams: sigma2 must be positive");
  require(T1 > 0.0 && T2 > 0.0, "SystemParams: SINR targets must be positive");
  require(Pj >= 0.0, "SystemParams: jammer power must be non-negative");
  require(M >= 1, "SystemParams: at least one jammer antenna");
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  if (t >= two_pi) t = 0.0;  // fmod rounding can land exactly on 2*pi
  return t;
}

Complex effective_channel(const ChannelSet& cs, const RisState& ris,
                          int which) {
  require(which == 1 || which == 2, "effective_channel: user index must be 1 or 2");
  check_ris_match(cs, ris);
  const CVec& g = (which == 1) ? cs.g1 : cs.g2;
  Complex u = (which == 1) ? cs.h1 : cs.h2;
  for (std::size_t n = 0; n < ris.size(); ++n)
    u += ris.coefficient(n) * cs.f[n] * g[n];
  return u;
}

CVec effective_jammer_channel(const ChannelSet& cs, const RisState& ris) {
  check_ris_match(cs, ris);
  CVec w(cs.hj);
  for (std::size_t n = 0; n < ris.size(); ++n) {
    const Complex c = ris.coefficient(n) * cs.f[n];
    const auto row = cs.Gj.row(n);
    for (std::size_t m = 0; m < w.size(); ++m) w[m] += c * row[m];
  }
  return w;
}

Complex received_signal(const ChannelSet& cs, const RisState& ris, Complex x1,
                        Complex x2, std::span<const Complex> xj,
                        Complex noise) {
  require(xj.size() == cs.jammer_antennas(),
          "received_signal: jammer vector length mismatch");
  Complex r = effective_channel(cs, ris, 1) * x1 +
              effective_channel(cs, ris, 2) * x2 + noise;
  const CVec w = effective_jammer_channel(cs, ris);
  for (std::size_t m = 0; m < w.size(); ++m) r += w[m] * xj[m];
  return r;
}

}  // namespace risnoma

#include "risnoma/alloc.hpp"

#include <cmath>
#include <limits>

namespace risnoma {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

struct Effective {
  Complex u1, u2;
  CVec w;           // effective jammer channel
  double w_norm2;   // ||w||^2
  double a1, a2;    // |u1|^2, |u2|^2
};

Effective compute_effective(const ChannelSet& cs, const RisState& ris) {
  Effective e;
  e.u1 = effective_channel(cs, ris, 1);
  e.u2 = effective_channel(cs, ris, 2);
  e.w = effective_jammer_channel(cs, ris);
  e.w_norm2 = 0.0;
  for (Complex z : e.w) e.w_norm2 += std::norm(z);
  e.a1 = std::norm(e.u1);
  e.a2 = std::norm(e.u2);
  return e;
}

}  // namespace

std::pair<double, double> sinr(const ChannelSet& cs, const RisState& ris,
                               double p1, double p2, double Pj,
                               double sigma2) {
  const Effective e = compute_effective(cs, ris);
  const double sj2 = Pj * e.w_norm2;
  const double gamma2 = p2 * e.a2 / (sj2 + sigma2);
  const double gamma1 = p1 * e.a1 / (p2 * e.a2 + sj2 + sigma2);
  return {gamma1, gamma2};
}

Allocation min_power_allocation(const ChannelSet& cs, const RisState& ris,
                                const SystemParams& params) {
  const Effective e = compute_effective(cs, ris);
  if (e.a1 < degenerate_gain_threshold) throw DegenerateChannel(1);
  if (e.a2 < degenerate_gain_threshold) throw DegenerateChannel(2);

  const double sj2 = params.Pj * e.w_norm2;
  const double S = sj2 + params.sigma2;

  Allocation out;
  out.p2 = params.T2 * S / e.a2;
  out.p1 = params.T1 * (params.T2 + 1.0) * S / e.a1;
  out.gamma2 = out.p2 * e.a2 / S;
  out.gamma1 = out.p1 * e.a1 / (out.p2 * e.a2 + S);
  out.sigma_j2 = sj2;
  out.total_normalized = (out.p1 + out.p2) / params.sigma2;
  out.sic_order_ok = out.p1 * e.a1 > out.p2 * e.a2;
  return out;
}

double reduced_objective(const ChannelSet& cs, const RisState& ris,
                         const SystemParams& params) {
  const Effective e = compute_effective(cs, ris);
  if (e.a1 < degenerate_gain_threshold || e.a2 < degenerate_gain_threshold)
    return inf;
  const double S = params.Pj * e.w_norm2 + params.sigma2;
  return S * (params.T2 / e.a2 +
              params.T1 * (params.T2 + 1.0) / e.a1);
}

RisGradient reduced_gradient(const ChannelSet& cs, const RisState& ris,
                             const SystemParams& params) {
  const Effective e = compute_effective(cs, ris);
  if (e.a1 < degenerate_gain_threshold) throw DegenerateChannel(1);
  if (e.a2 < degenerate_gain_threshold) throw DegenerateChannel(2);

  const std::size_t N = ris.size();
  const std::size_t M = e.w.size();
  const double c1 = params.T1 * (params.T2 + 1.0);
  const double S = params.Pj * e.w_norm2 + params.sigma2;
  const double K = params.T2 / e.a2 + c1 / e.a1;
  const Complex u1c = std::conj(e.u1);
  const Complex u2c = std::conj(e.u2);

  RisGradient g;
  g.d_theta.resize(N);
  g.d_beta.resize(N);
  for (std::size_t n = 0; n < N; ++n) {
    const Complex x = ris.coefficient(n);
    const Complex phase = std::polar(1.0, ris.theta[n]);
    const Complex a1n = cs.f[n] * cs.g1[n];
    const Complex a2n = cs.f[n] * cs.g2[n];
    Complex q{0.0, 0.0};  // sum_m f[n] Gj(n,m) conj(w[m])
    const auto row = cs.Gj.row(n);
    for (std::size_t m = 0; m < M; ++m) q += cs.f[n] * row[m] * std::conj(e.w[m]);

    // d|u_i|^2 and d||w||^2 with respect to theta_n and beta_n.
    const double du1_dth = -2.0 * std::imag(u1c * x * a1n);
    const double du2_dth = -2.0 * std::imag(u2c * x * a2n);
    const double dW_dth = -2.0 * std::imag(x * q);
    const double du1_db = 2.0 * std::real(u1c * phase * a1n);
    const double du2_db = 2.0 * std::real(u2c * phase * a2n);
    const double dW_db = 2.0 * std::real(phase * q);

    const double dK_dth = -params.T2 / (e.a2 * e.a2) * du2_dth -
                          c1 / (e.a1 * e.a1) * du1_dth;
    const double dK_db = -params.T2 / (e.a2 * e.a2) * du2_db -
                         c1 / (e.a1 * e.a1) * du1_db;

    g.d_theta[n] = params.Pj * dW_dth * K + S * dK_dth;
    g.d_beta[n] = params.Pj * dW_db * K + S * dK_db;
  }
  return g;
}

}  // namespace risnoma

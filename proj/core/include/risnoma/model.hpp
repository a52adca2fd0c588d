#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace risnoma {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

// Dense complex matrix, row-major. In this system rows index RIS elements
// and columns index jammer antennas.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Complex> flat() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

enum class RisMode { NoRis, PhaseOnly, Absorptive };

std::string_view to_string(RisMode mode);
std::optional<RisMode> parse_mode(std::string_view name);

// One realization of every channel in the system. N = 0 encodes operation
// without an RIS: f, g1, g2 are empty and Gj has zero rows.
struct ChannelSet {
  Complex h1;  // UE1 -> BS direct channel
  Complex h2;  // UE2 -> BS direct channel
  CVec f;      // RIS -> BS, length N
  CVec g1;     // UE1 -> RIS, length N
  CVec g2;     // UE2 -> RIS, length N
  CVec hj;     // jammer -> BS, length M
  CMat Gj;     // jammer -> RIS, N x M

  std::size_t elements() const { return f.size(); }         // N
  std::size_t jammer_antennas() const { return hj.size(); } // M

  // Throws std::invalid_argument on shape inconsistency or non-finite
  // entries. M >= 1 is required; N may be zero.
  void validate() const;
};

// Per-element reflection state: reflection coefficient of element n is
// beta[n] * e^{j theta[n]}. Amplitudes lie in [0, 1]; phases are stored
// canonically in [0, 2*pi) and every consumer treats them as periodic.
struct RisState {
  std::vector<double> beta;
  std::vector<double> theta;

  std::size_t size() const { return beta.size(); }
  Complex coefficient(std::size_t n) const {
    return std::polar(beta[n], theta[n]);
  }

  static RisState all_on(std::size_t n);   // beta = 1, theta = 0
  static RisState all_off(std::size_t n);  // beta = 0, theta = 0

  void canonicalize();  // wrap all phases into [0, 2*pi)
  // phase_only additionally requires beta[n] == 1 exactly.
  void validate(bool phase_only = false) const;
};

struct SystemParams {
  double sigma2 = 1.0;  // AWGN power at the BS receiver
  double Pj = 40.0;     // jammer power budget
  double T1 = 5.0;      // UE1 SINR target
  double T2 = 5.0;      // UE2 SINR target
  std::size_t N = 0;    // RIS elements
  std::size_t M = 1;    // jammer antennas
  RisMode mode = RisMode::NoRis;

  void validate() const;
};

// Wraps an angle into [0, 2*pi).
double wrap_angle(double theta);

// Effective user channel u_i = h_i + sum_n beta_n e^{j theta_n} f[n] g_i[n].
// `which` selects the user (1 or 2). With N = 0 this is exactly h_i.
Complex effective_channel(const ChannelSet& cs, const RisState& ris,
                          int which);

// Effective jammer channel: entry m is
// hj[m] + sum_n beta_n e^{j theta_n} f[n] Gj(n, m).
CVec effective_jammer_channel(const ChannelSet& cs, const RisState& ris);

// Received-signal synthesis r = u1 x1 + u2 x2 + w . xj + noise. Diagnostic
// path used by simulation-based tests, not by the optimizer.
Complex received_signal(const ChannelSet& cs, const RisState& ris, Complex x1,
                        Complex x2, std::span<const Complex> xj,
                        Complex noise);

}  // namespace risnoma

#pragma once

#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "checkers/amplitude.hpp"

namespace checkers {

/// Absorbing vertical line x = x0, or a free walk when absent.
struct AbsorptionConfig {
  std::optional<int> line;

  static AbsorptionConfig free_walk() { return {}; }
  static AbsorptionConfig bypass(int x0) { return {x0}; }

  friend bool operator==(const AbsorptionConfig&, const AbsorptionConfig&) = default;
};

struct AbsorptionEvent {
  int t;
  HalfPowerAmplitude arrival;
};

/// Spinor field at a fixed time t, split by last move: u(x) collects paths
/// ending with an up-left move (purely real), v(x) paths ending with an
/// up-right move (purely imaginary).
///
/// Columns are a dense array over the light cone 2-t <= x <= t with
/// x == t (mod 2); every entry is stored as a raw Gaussian integer at the
/// shared scale 2^(-(t-1)/2).
class WalkState {
 public:
  static WalkState initial(const AbsorptionConfig& cfg = {});

  int t() const { return t_; }
  int x_min() const { return 2 - t_; }
  int x_max() const { return t_; }
  bool in_cone(int x) const {
    return x >= x_min() && x <= x_max() && ((x - t_) & 1) == 0;
  }

  /// Raw spinor components at scale 2^(-(t-1)/2); zero outside the cone.
  const GaussianInt& raw_u(int x) const;
  const GaussianInt& raw_v(int x) const;

  HalfPowerAmplitude u(int x) const { return {raw_u(x), t_ - 1}; }
  HalfPowerAmplitude v(int x) const { return {raw_v(x), t_ - 1}; }
  /// u + v: the amplitude a(x, t) of the surviving walk (zeroed on the
  /// absorbing line; the arrival there lives in absorbed()).
  HalfPowerAmplitude amplitude(int x) const { return {raw_u(x) + raw_v(x), t_ - 1}; }

  const std::vector<AbsorptionEvent>& absorbed() const { return absorbed_; }

  /// sum_x |u|^2 + |v|^2, exact.
  DyadicRational survival_mass() const;
  /// sum over the absorption log of |arrival|^2, exact.
  DyadicRational absorbed_mass() const;

  friend WalkState step(const WalkState& state, const AbsorptionConfig& cfg);

 private:
  WalkState(int t, std::vector<GaussianInt> u, std::vector<GaussianInt> v,
            std::vector<AbsorptionEvent> absorbed)
      : t_(t), u_(std::move(u)), v_(std::move(v)), absorbed_(std::move(absorbed)) {}

  int index(int x) const { return (x - x_min()) / 2; }

  int t_;
  std::vector<GaussianInt> u_, v_;  // index i <-> x = 2 - t + 2i
  std::vector<AbsorptionEvent> absorbed_;
};

/// One time step of the recurrence
///   v(x,t+1) = [v(x-1,t) + (-i) u(x-1,t)] / sqrt(2)
///   u(x,t+1) = [u(x+1,t) + (-i) v(x+1,t)] / sqrt(2)
/// With an absorbing line: propagate, record the arrival u+v at x0, then
/// zero the spinor there so no later path passes through the line.
WalkState step(const WalkState& state, const AbsorptionConfig& cfg);

WalkState run(int t_max, const AbsorptionConfig& cfg = {});

/// a(x, t) resp. a(x, t bypass x0); on the absorbing line this is the
/// recorded arrival at time t (0 if none).
HalfPowerAmplitude amplitude(int x, int t, const AbsorptionConfig& cfg = {});
DyadicRational probability(int x, int t, const AbsorptionConfig& cfg = {});

/// Evolves once up to t_max and caches every amplitude; the cheap way to
/// query many (x, t) pairs for one configuration.
class AmplitudeHistory {
 public:
  AmplitudeHistory(int t_max, const AbsorptionConfig& cfg);

  int t_max() const { return t_max_; }
  const AbsorptionConfig& config() const { return cfg_; }

  HalfPowerAmplitude at(int x, int t) const;
  DyadicRational probability(int x, int t) const { return at(x, t).norm_sq(); }
  const std::vector<AbsorptionEvent>& absorbed() const { return absorbed_; }

 private:
  AbsorptionConfig cfg_;
  int t_max_;
  std::vector<std::vector<HalfPowerAmplitude>> rows_;  // rows_[t-1][i], x = 2-t+2i
  std::vector<AbsorptionEvent> absorbed_;
  std::map<int, HalfPowerAmplitude> arrival_by_t_;
};

/// Same recurrence in double precision; spinor arrays, no big integers.
struct FloatWalkState {
  int t = 1;
  std::vector<std::complex<double>> u, v;  // index i <-> x = 2 - t + 2i
  std::vector<std::pair<int, std::complex<double>>> absorbed;

  bool in_cone(int x) const { return x >= 2 - t && x <= t && ((x - t) & 1) == 0; }
  std::complex<double> amplitude(int x) const;
  double survival_mass() const;
};

FloatWalkState run_float(int t_max, const AbsorptionConfig& cfg = {});

}  // namespace checkers

#include "checkers/engine.hpp"

#include <cmath>

namespace checkers {

namespace {
const GaussianInt kZeroGauss{};
}

WalkState WalkState::initial(const AbsorptionConfig& cfg) {
  // t = 1, single column x = 1 with v = i at scale 2^0: a(1,1) = i.
  std::vector<GaussianInt> u(1), v(1);
  v[0] = gaussian_i();
  std::vector<AbsorptionEvent> absorbed;
  if (cfg.line && *cfg.line == 1) {
    // the paper never evaluates x0 = 1; (1,1) is treated as an interior
    // point of the line, so the forced first step is absorbed immediately
    absorbed.push_back({1, HalfPowerAmplitude(v[0], 0)});
    v[0] = GaussianInt{};
  }
  return WalkState(1, std::move(u), std::move(v), std::move(absorbed));
}

const GaussianInt& WalkState::raw_u(int x) const {
  return in_cone(x) ? u_[index(x)] : kZeroGauss;
}

const GaussianInt& WalkState::raw_v(int x) const {
  return in_cone(x) ? v_[index(x)] : kZeroGauss;
}

DyadicRational WalkState::survival_mass() const {
  BigInt total = 0;
  for (std::size_t i = 0; i < u_.size(); ++i) {
    total += u_[i].norm() + v_[i].norm();
  }
  return {std::move(total), t_ - 1};
}

DyadicRational WalkState::absorbed_mass() const {
  DyadicRational total;
  for (const auto& event : absorbed_) {
    total = total + event.arrival.norm_sq();
  }
  return total;
}

WalkState step(const WalkState& state, const AbsorptionConfig& cfg) {
  const int t = state.t_;
  const int nt = t + 1;
  // scale bookkeeping: dropping the 1/sqrt(2) factor moves the row from
  // 2^(-(t-1)/2) to 2^(-t/2), i.e. k advances with t automatically
  std::vector<GaussianInt> u(nt), v(nt);
  for (int i = 0; i < nt; ++i) {
    const int x = 2 - nt + 2 * i;
    if (state.in_cone(x - 1)) {
      const int p = state.index(x - 1);
      v[i] = state.v_[p] + state.u_[p].times_minus_i();
    }
    if (state.in_cone(x + 1)) {
      const int p = state.index(x + 1);
      u[i] = state.u_[p] + state.v_[p].times_minus_i();
    }
  }
  WalkState next(nt, std::move(u), std::move(v), state.absorbed_);
  if (cfg.line && next.in_cone(*cfg.line)) {
    const int i = next.index(*cfg.line);
    GaussianInt arrival = next.u_[i] + next.v_[i];
    if (!arrival.is_zero()) {
      next.absorbed_.push_back({nt, HalfPowerAmplitude(std::move(arrival), nt - 1)});
    }
    next.u_[i] = GaussianInt{};
    next.v_[i] = GaussianInt{};
  }
  return next;
}

WalkState run(int t_max, const AbsorptionConfig& cfg) {
  if (t_max < 1) {
    throw DomainError("run: t_max must be >= 1");
  }
  WalkState state = WalkState::initial(cfg);
  for (int t = 1; t < t_max; ++t) {
    state = step(state, cfg);
  }
  return state;
}

HalfPowerAmplitude amplitude(int x, int t, const AbsorptionConfig& cfg) {
  if (t < 1) {
    throw DomainError("amplitude: t must be >= 1");
  }
  const WalkState state = run(t, cfg);
  if (cfg.line && x == *cfg.line) {
    for (const auto& event : state.absorbed()) {
      if (event.t == t) {
        return event.arrival;
      }
    }
    return {};
  }
  return state.amplitude(x);
}

DyadicRational probability(int x, int t, const AbsorptionConfig& cfg) {
  return amplitude(x, t, cfg).norm_sq();
}

AmplitudeHistory::AmplitudeHistory(int t_max, const AbsorptionConfig& cfg)
    : cfg_(cfg), t_max_(t_max) {
  if (t_max < 1) {
    throw DomainError("AmplitudeHistory: t_max must be >= 1");
  }
  rows_.reserve(t_max);
  WalkState state = WalkState::initial(cfg);
  for (int t = 1; t <= t_max; ++t) {
    if (t > 1) {
      state = step(state, cfg);
    }
    std::vector<HalfPowerAmplitude> row(t);
    for (int i = 0; i < t; ++i) {
      row[i] = state.amplitude(2 - t + 2 * i);
    }
    rows_.push_back(std::move(row));
  }
  absorbed_ = state.absorbed();
  for (const auto& event : absorbed_) {
    arrival_by_t_.emplace(event.t, event.arrival);
  }
}

HalfPowerAmplitude AmplitudeHistory::at(int x, int t) const {
  if (t < 1 || t > t_max_) {
    throw DomainError("AmplitudeHistory::at: t out of range");
  }
  if (cfg_.line && x == *cfg_.line) {
    auto it = arrival_by_t_.find(t);
    return it == arrival_by_t_.end() ? HalfPowerAmplitude{} : it->second;
  }
  if (x < 2 - t || x > t || ((x - t) & 1) != 0) {
    return {};
  }
  return rows_[t - 1][(x - (2 - t)) / 2];
}

std::complex<double> FloatWalkState::amplitude(int x) const {
  if (!in_cone(x)) {
    return {0.0, 0.0};
  }
  const int i = (x - (2 - t)) / 2;
  return u[i] + v[i];
}

double FloatWalkState::survival_mass() const {
  double total = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    total += std::norm(u[i]) + std::norm(v[i]);
  }
  return total;
}

FloatWalkState run_float(int t_max, const AbsorptionConfig& cfg) {
  if (t_max < 1) {
    throw DomainError("run_float: t_max must be >= 1");
  }
  FloatWalkState s;
  s.u.assign(1, {0.0, 0.0});
  s.v.assign(1, {0.0, 1.0});
  if (cfg.line && *cfg.line == 1) {
    s.absorbed.emplace_back(1, s.v[0]);
    s.v[0] = {0.0, 0.0};
  }
  const std::complex<double> minus_i{0.0, -1.0};
  for (int t = 1; t < t_max; ++t) {
    const int nt = t + 1;
    std::vector<std::complex<double>> u(nt), v(nt);
    for (int i = 0; i < nt; ++i) {
      const int x = 2 - nt + 2 * i;
      if (s.in_cone(x - 1)) {
        const int p = (x - 1 - (2 - t)) / 2;
        v[i] = M_SQRT1_2 * (s.v[p] + minus_i * s.u[p]);
      }
      if (s.in_cone(x + 1)) {
        const int p = (x + 1 - (2 - t)) / 2;
        u[i] = M_SQRT1_2 * (s.u[p] + minus_i * s.v[p]);
      }
    }
    s.t = nt;
    s.u = std::move(u);
    s.v = std::move(v);
    if (cfg.line && s.in_cone(*cfg.line)) {
      const int i = (*cfg.line - (2 - nt)) / 2;
      const std::complex<double> arrival = s.u[i] + s.v[i];
      if (arrival != std::complex<double>{0.0, 0.0}) {
        s.absorbed.emplace_back(nt, arrival);
      }
      s.u[i] = {0.0, 0.0};
      s.v[i] = {0.0, 0.0};
    }
  }
  return s;
}

}  // namespace checkers

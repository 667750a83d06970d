#pragma once

#include <functional>
#include <optional>

#include "checkers/engine.hpp"

namespace checkers {

enum class EngineMode { Exact, Float };

enum class Verdict { Certified, Inconclusive, NoTarget };

/// Absorption-series summary: partial sum, tail bound and target constant
/// (when a closed form is known for the line), and the certification
/// verdict |partial_sum - target| <= tail_bound.
struct SeriesReport {
  int line = 0;
  long long terms_used = 0;
  double partial_sum = 0.0;
  std::optional<DyadicRational> exact_sum;  // engine-sourced exact mode only
  std::optional<double> target;
  std::optional<double> tail_bound;
  Verdict verdict = Verdict::NoTarget;
};

/// Limit constant of the absorption series on the given line:
/// 2/pi (lines 0 and 2), 8/pi - 2 (line 3), 4/pi - 1 (line -1).
/// Throws UnsupportedLine otherwise.
double target_constant(int line);

/// Closed-form probability of absorption at (line, t). Supported lines:
/// -1, 0, 2, 3; throws UnsupportedLine otherwise.
double term(int line, long long t);

/// Same term as an exact dyadic rational (big binomials; keep t modest).
DyadicRational term_exact(int line, long long t);

/// Rigorous upper bound on the series tail beyond closed-form index k_max.
/// Built from C(2k,k) < 4^k / sqrt(pi k): the line-0 family term is below
/// 1/(8 pi k (k+1)^2), so the tail beyond K is below 1/(16 pi K^2); other
/// lines scale by their term-family multiplicity.
double tail_bound(int line, long long k_max);

/// Sum of closed-form terms through family index k_max, generated by the
/// stable ratio recurrence q_{k+1}/q_k = [2(2k+1)/(k+2)]^2 / 16 (no big
/// binomials). `checkpoint`, when set, is called as (k, partial_sum).
SeriesReport partial_sum_closed(
    int line, long long k_max,
    const std::function<void(long long, double)>& checkpoint = nullptr);

/// Direct summation of |arrival|^2 over the engine's absorption log; works
/// for any line. Exact mode also returns the exact dyadic partial sum.
SeriesReport partial_sum_engine(int line, int t_max, EngineMode mode);

}  // namespace checkers

#include "checkers/series.hpp"

#include <cmath>

#include "checkers/closed_form.hpp"

namespace checkers {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

bool supported_line(int line) {
  return line == -1 || line == 0 || line == 2 || line == 3;
}

void require_supported(int line) {
  if (!supported_line(line)) {
    throw UnsupportedLine("no closed-form series for line x0 = " +
                          std::to_string(line));
  }
}

// q_{k+1}/q_k for the line-0 term family q_k = C_k^2 / 2^(4k+3)
long double family_ratio(long long k) {
  const long double r = 2.0L * (2 * k + 1) / static_cast<long double>(k + 2);
  return r * r / 16.0L;
}

// q_k by the ratio recurrence; exact mode is reserved for small t
long double family_term(long long k) {
  long double q = 0.125L;  // q_0 = 1/8
  for (long long i = 0; i < k; ++i) {
    q *= family_ratio(i);
  }
  return q;
}

// compensated accumulator: the certification margin at k_max = 1e5 is a few
// 1e-17, well below what naive double summation guarantees
struct KahanSum {
  long double sum = 0.0L;
  long double carry = 0.0L;

  void add(long double x) {
    const long double y = x - carry;
    const long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// tail of sum_{k > K} q_k: q_k < 1/(8 pi k (k+1)^2) from
// C(2k,k) < 4^k / sqrt(pi k), and sum_{k > K} k^-3 < 1/(2 K^2)
long double family_tail(long long K) {
  if (K < 1) {
    throw DomainError("tail bound needs k_max >= 1");
  }
  return 1.0L / (16.0L * kPi * K * K);
}

long double target_constant_ld(int line) {
  require_supported(line);
  switch (line) {
    case 0:
    case 2:
      return 2.0L / kPi;
    case 3:
      return 8.0L / kPi - 2.0L;
    default:  // -1
      return 4.0L / kPi - 1.0L;
  }
}

long double tail_bound_ld(int line, long long k_max) {
  require_supported(line);
  if (k_max < 2) {
    throw DomainError("tail_bound: k_max must be >= 2");
  }
  switch (line) {
    case 0:
    case 2:
      return family_tail(k_max);
    case -1:
      return 2.0L * family_tail(k_max);
    default:  // line 3: two shifted families, each doubled
      return 2.0L * family_tail(k_max - 1) + 2.0L * family_tail(k_max);
  }
}

}  // namespace

double target_constant(int line) {
  return static_cast<double>(target_constant_ld(line));
}

double tail_bound(int line, long long k_max) {
  return static_cast<double>(tail_bound_ld(line, k_max));
}

double term(int line, long long t) {
  require_supported(line);
  if (t < 1) {
    throw DomainError("term: t must be >= 1");
  }
  switch (line) {
    case 0:
    case 2:
      // P(0,2) = 1/2; P(0, 4k+4) = C_k^2 / 2^(4k+3); line 2 matches
      // term-by-term (lemma 2, with P(2,2) = 1/2 directly)
      if (t == 2) {
        return 0.5;
      }
      if (t % 4 == 0 && t >= 4) {
        return static_cast<double>(family_term((t - 4) / 4));
      }
      return 0.0;
    case -1:
      // lemma 1: P(-1, t) = 2 P(0, t+1) for t >= 3
      return t >= 3 ? 2.0 * term(0, t + 1) : 0.0;
    default:  // line 3, via proposition 1
      if (t == 3) {
        return 0.25;
      }
      if (t > 3 && (t & 1)) {
        return 2.0 * (term(0, t + 1) + term(0, t - 1));
      }
      return 0.0;
  }
}

DyadicRational term_exact(int line, long long t) {
  require_supported(line);
  if (t < 1) {
    throw DomainError("term_exact: t must be >= 1");
  }
  const int ti = static_cast<int>(t);
  switch (line) {
    case 0:
    case 2:
      return theorem1_amplitude(ti).norm_sq();
    case -1:
      if (t < 3) {
        return {};
      }
      return DyadicRational(BigInt(2), 0) * theorem1_amplitude(ti + 1).norm_sq();
    default:  // line 3
      if (t == 3) {
        return {BigInt(1), 2};
      }
      if (t > 3 && (t & 1)) {
        return DyadicRational(BigInt(2), 0) *
               (theorem1_amplitude(ti + 1).norm_sq() +
                theorem1_amplitude(ti - 1).norm_sq());
      }
      return {};
  }
}

SeriesReport partial_sum_closed(
    int line, long long k_max,
    const std::function<void(long long, double)>& checkpoint) {
  require_supported(line);
  if (k_max < 1) {
    throw DomainError("partial_sum_closed: k_max must be >= 1");
  }
  SeriesReport report;
  report.line = line;
  KahanSum sum;
  long long terms = 0;
  if (line == 0 || line == 2) {
    sum.add(0.5L);
    ++terms;
  } else if (line == 3) {
    sum.add(0.25L);
    ++terms;
  }
  long double q = 0.125L;      // q_k, starting at k = 0
  long double q_prev = 0.0L;   // q_{k-1}
  for (long long k = 0; k <= k_max; ++k) {
    switch (line) {
      case 0:
      case 2:
        sum.add(q);
        ++terms;
        break;
      case -1:
        sum.add(2.0L * q);
        ++terms;
        break;
      default:  // line 3: t = 4k+1 carries 2 q_{k-1}, t = 4k+3 carries 2 q_k
        if (k >= 1) {
          sum.add(2.0L * q_prev);
          sum.add(2.0L * q);
          terms += 2;
        }
        break;
    }
    if (checkpoint) {
      checkpoint(k, static_cast<double>(sum.sum));
    }
    q_prev = q;
    q *= family_ratio(k);
  }
  report.terms_used = terms;
  report.partial_sum = static_cast<double>(sum.sum);
  report.target = target_constant(line);
  const long double bound = tail_bound_ld(line, std::max<long long>(k_max, 2));
  report.tail_bound = static_cast<double>(bound);
  const long double residual = std::fabs(target_constant_ld(line) - sum.sum);
  report.verdict = residual <= bound ? Verdict::Certified : Verdict::Inconclusive;
  return report;
}

SeriesReport partial_sum_engine(int line, int t_max, EngineMode mode) {
  if (t_max < 1) {
    throw DomainError("partial_sum_engine: t_max must be >= 1");
  }
  SeriesReport report;
  report.line = line;
  const AbsorptionConfig cfg = AbsorptionConfig::bypass(line);
  long double sum = 0.0L;
  if (mode == EngineMode::Exact) {
    const WalkState state = run(t_max, cfg);
    report.terms_used = static_cast<long long>(state.absorbed().size());
    report.exact_sum = state.absorbed_mass();
    report.partial_sum = report.exact_sum->to_double();
    sum = report.partial_sum;
  } else {
    const FloatWalkState state = run_float(t_max, cfg);
    report.terms_used = static_cast<long long>(state.absorbed.size());
    KahanSum acc;
    for (const auto& [t, arrival] : state.absorbed) {
      acc.add(std::norm(arrival));
    }
    sum = acc.sum;
    report.partial_sum = static_cast<double>(sum);
  }
  if (supported_line(line)) {
    report.target = target_constant(line);
    // map the evolved depth onto the deepest complete family index
    long long k_complete = -1;
    switch (line) {
      case 0:
      case 2:
        k_complete = (t_max - 4) / 4;
        break;
      case -1:
        k_complete = (t_max - 3) / 4;
        break;
      default:  // line 3: the later of its two families
        k_complete = (t_max - 3) / 4;
        break;
    }
    if (k_complete >= 2) {
      const long double bound = tail_bound_ld(line, k_complete);
      report.tail_bound = static_cast<double>(bound);
      report.verdict = std::fabs(target_constant_ld(line) - sum) <= bound
                           ? Verdict::Certified
                           : Verdict::Inconclusive;
    } else {
      report.verdict = Verdict::Inconclusive;
    }
  } else {
    report.verdict = Verdict::NoTarget;
  }
  return report;
}

}  // namespace checkers

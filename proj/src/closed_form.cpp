#include "checkers/closed_form.hpp"

namespace checkers {

namespace {

IdentityReport make_report(std::string name, int t, HalfPowerAmplitude lhs,
                           HalfPowerAmplitude rhs) {
  IdentityReport report;
  report.identity = std::move(name);
  report.t = t;
  report.holds = lhs == rhs;
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  return report;
}

void require_range(bool ok, const char* what) {
  if (!ok) {
    throw DomainError(what);
  }
}

/// RHS of the convolution recurrence from closed-form values only.
HalfPowerAmplitude convolution_rhs(int n) {
  HalfPowerAmplitude sum;
  for (int j = 2; j <= n - 2; ++j) {
    sum = sum + theorem1_amplitude(2 * (n - j)) * theorem1_amplitude(2 * j);
  }
  return (-sum).scaled_sqrt2(-1);
}

}  // namespace

BigInt catalan(int k) {
  if (k < 0) {
    throw DomainError("catalan: k must be >= 0");
  }
  // C(2k, k) by incremental binomial, then exact division by k+1
  BigInt binom = 1;
  for (int i = 1; i <= k; ++i) {
    binom = binom * (k + i) / i;
  }
  return binom / (k + 1);
}

HalfPowerAmplitude theorem1_amplitude(int t) {
  if (t < 1) {
    throw DomainError("theorem1_amplitude: t must be >= 1");
  }
  if (t == 2) {
    return HalfPowerAmplitude::real(1, 1);
  }
  if (t % 4 == 0 && t >= 4) {
    const int k = (t - 4) / 4;
    BigInt g = catalan(k);
    if (k & 1) {
      g = -g;
    }
    return {GaussianInt(std::move(g), 0), 4LL * k + 3};
  }
  return {};
}

IdentityReport verify_lemma1(int t) {
  require_range(t > 2, "verify_lemma1: requires t > 2");
  return make_report("lemma1", t, amplitude(-1, t, AbsorptionConfig::bypass(-1)),
                     amplitude(0, t + 1, AbsorptionConfig::bypass(0)).scaled_sqrt2(1));
}

IdentityReport verify_lemma2(int t) {
  require_range(t > 2, "verify_lemma2: requires t > 2");
  return make_report(
      "lemma2", t, amplitude(2, t, AbsorptionConfig::bypass(2)),
      amplitude(0, t, AbsorptionConfig::bypass(0)).times_unit(Unit::MinusI));
}

IdentityReport verify_lemma3(int t) {
  require_range(t > 3, "verify_lemma3: requires t > 3");
  const auto rhs =
      amplitude(2, t - 1, AbsorptionConfig::bypass(2)).scaled_sqrt2(1) +
      amplitude(-1, t, AbsorptionConfig::bypass(-1)).times_unit(Unit::MinusI);
  return make_report("lemma3", t, amplitude(3, t, AbsorptionConfig::bypass(3)), rhs);
}

IdentityReport verify_proposition1(int t) {
  require_range(t > 3, "verify_proposition1: requires t > 3");
  const auto rhs = (amplitude(0, t + 1, AbsorptionConfig::bypass(0)) +
                    amplitude(0, t - 1, AbsorptionConfig::bypass(0)))
                       .scaled_sqrt2(1)
                       .times_unit(Unit::MinusI);
  return make_report("proposition1", t, amplitude(3, t, AbsorptionConfig::bypass(3)),
                     rhs);
}

IdentityReport verify_lemma4(int n) {
  require_range(n > 2, "verify_lemma4: requires n > 2");
  const AbsorptionConfig line0 = AbsorptionConfig::bypass(0);
  AmplitudeHistory history(2 * n, line0);
  HalfPowerAmplitude sum;
  for (int j = 2; j <= n - 2; ++j) {
    sum = sum + history.at(0, 2 * (n - j)) * history.at(0, 2 * j);
  }
  return make_report("lemma4", n, history.at(0, 2 * n), (-sum).scaled_sqrt2(-1));
}

bool theorem1_induction_check(int n_max) {
  if (n_max < 3) {
    throw DomainError("theorem1_induction_check: n_max must be >= 3");
  }
  for (int n = 3; n <= n_max; ++n) {
    if (!(theorem1_amplitude(2 * n) == convolution_rhs(n))) {
      return false;
    }
  }
  return true;
}

IdentityVerifier::IdentityVerifier(int t_max)
    : t_max_(t_max),
      line0_(t_max + 1, AbsorptionConfig::bypass(0)),
      line2_(t_max, AbsorptionConfig::bypass(2)),
      line3_(t_max, AbsorptionConfig::bypass(3)),
      line_m1_(t_max, AbsorptionConfig::bypass(-1)) {
  if (t_max < 4) {
    throw DomainError("IdentityVerifier: t_max must be >= 4");
  }
}

IdentityReport IdentityVerifier::lemma1(int t) const {
  require_range(t > 2 && t <= t_max_, "lemma1: t out of range");
  return make_report("lemma1", t, line_m1_.at(-1, t),
                     line0_.at(0, t + 1).scaled_sqrt2(1));
}

IdentityReport IdentityVerifier::lemma2(int t) const {
  require_range(t > 2 && t <= t_max_, "lemma2: t out of range");
  return make_report("lemma2", t, line2_.at(2, t),
                     line0_.at(0, t).times_unit(Unit::MinusI));
}

IdentityReport IdentityVerifier::lemma3(int t) const {
  require_range(t > 3 && t <= t_max_, "lemma3: t out of range");
  const auto rhs = line2_.at(2, t - 1).scaled_sqrt2(1) +
                   line_m1_.at(-1, t).times_unit(Unit::MinusI);
  return make_report("lemma3", t, line3_.at(3, t), rhs);
}

IdentityReport IdentityVerifier::proposition1(int t) const {
  require_range(t > 3 && t <= t_max_, "proposition1: t out of range");
  const auto rhs = (line0_.at(0, t + 1) + line0_.at(0, t - 1))
                       .scaled_sqrt2(1)
                       .times_unit(Unit::MinusI);
  return make_report("proposition1", t, line3_.at(3, t), rhs);
}

IdentityReport IdentityVerifier::lemma4(int n) const {
  require_range(n > 2 && 2 * n <= t_max_, "lemma4: n out of range");
  HalfPowerAmplitude sum;
  for (int j = 2; j <= n - 2; ++j) {
    sum = sum + line0_.at(0, 2 * (n - j)) * line0_.at(0, 2 * j);
  }
  return make_report("lemma4", n, line0_.at(0, 2 * n), (-sum).scaled_sqrt2(-1));
}

IdentityReport IdentityVerifier::theorem1(int t) const {
  require_range(t >= 1 && t <= t_max_, "theorem1: t out of range");
  return make_report("theorem1", t, theorem1_amplitude(t), line0_.at(0, t));
}

}  // namespace checkers

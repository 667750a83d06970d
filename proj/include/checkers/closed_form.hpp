#pragma once

#include <string>

#include "checkers/engine.hpp"

namespace checkers {

/// C_k = C(2k, k) / (k + 1), exact.
BigInt catalan(int k);

/// Closed-form a(0, t bypass 0):
///   1/sqrt(2) at t = 2;
///   (-1)^k C(2k,k) / ((k+1) 2^(2k+3/2)) at t = 4k+4, k >= 0;
///   0 otherwise.
HalfPowerAmplitude theorem1_amplitude(int t);

struct IdentityReport {
  std::string identity;
  int t = 0;  // t, or n for the convolution identity
  HalfPowerAmplitude lhs;
  HalfPowerAmplitude rhs;
  bool holds = false;
};

// Both sides are recomputed from the engine (no cached grids); these
// verifiers double as the test oracle for the absorption logic.

/// a(-1, t bypass -1) = sqrt(2) a(0, t+1 bypass 0), t > 2.
IdentityReport verify_lemma1(int t);
/// a(2, t bypass 2) = -i a(0, t bypass 0), t > 2.
IdentityReport verify_lemma2(int t);
/// a(3, t bypass 3) = sqrt(2) a(2, t-1 bypass 2) - i a(-1, t bypass -1), t > 3.
IdentityReport verify_lemma3(int t);
/// a(3, t bypass 3) = -i sqrt(2) [a(0, t+1 bypass 0) + a(0, t-1 bypass 0)], t > 3.
IdentityReport verify_proposition1(int t);
/// a(0, 2n bypass 0) = (-1/sqrt(2)) sum_{j=2}^{n-2} a(0, 2(n-j)) a(0, 2j), n > 2.
IdentityReport verify_lemma4(int n);

/// The closed form is self-consistent: theorem1_amplitude satisfies the
/// convolution recurrence for all 3 <= n <= n_max, without the engine.
bool theorem1_induction_check(int n_max);

/// Shares engine histories across many t; use this for suite runs instead
/// of the one-shot verify_* functions.
class IdentityVerifier {
 public:
  explicit IdentityVerifier(int t_max);

  int t_max() const { return t_max_; }

  IdentityReport lemma1(int t) const;         // t > 2
  IdentityReport lemma2(int t) const;         // t > 2
  IdentityReport lemma3(int t) const;         // t > 3
  IdentityReport proposition1(int t) const;   // t > 3
  IdentityReport lemma4(int n) const;         // n > 2, needs 2n <= t_max
  /// theorem1_amplitude(t) vs engine amplitude(0, t, bypass 0).
  IdentityReport theorem1(int t) const;

 private:
  int t_max_;
  AmplitudeHistory line0_;   // depth t_max + 1 (lemma 1 looks one row ahead)
  AmplitudeHistory line2_;
  AmplitudeHistory line3_;
  AmplitudeHistory line_m1_;
};

}  // namespace checkers

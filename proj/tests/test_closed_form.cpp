#include <doctest.h>

#include "checkers/closed_form.hpp"
#include "checkers/oracle.hpp"

using namespace checkers;

namespace {

HalfPowerAmplitude amp(long long re, long long im, long long k) {
  return {GaussianInt(BigInt(re), BigInt(im)), k};
}

}  // namespace

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(2) == 2);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  // cross-check the convolution recurrence C_{k+1} = sum C_i C_{k-i}
  for (int k = 0; k < 15; ++k) {
    BigInt conv = 0;
    for (int i = 0; i <= k; ++i) {
      conv += catalan(i) * catalan(k - i);
    }
    CHECK(conv == catalan(k + 1));
  }
  CHECK_THROWS_AS(catalan(-1), DomainError);
}

TEST_CASE("theorem 1 closed form at small t") {
  CHECK(theorem1_amplitude(2) == amp(1, 0, 1));
  CHECK(theorem1_amplitude(4) == amp(1, 0, 3));
  CHECK(theorem1_amplitude(6).is_zero());
  CHECK(theorem1_amplitude(8) == amp(-1, 0, 7));   // -C_1 / 2^(7/2)
  CHECK(theorem1_amplitude(12) == amp(1, 0, 9));   // +C_2 / 2^(11/2)
  CHECK(theorem1_amplitude(1).is_zero());
  CHECK(theorem1_amplitude(3).is_zero());
}

TEST_CASE("theorem 1 zero pattern and sign alternation") {
  for (int t = 1; t <= 120; ++t) {
    const auto a = theorem1_amplitude(t);
    if (t == 2) {
      continue;
    }
    if (t % 2 == 1 || t % 4 == 2) {
      CHECK(a.is_zero());
    } else {
      const int k = (t - 4) / 4;
      CHECK(!a.is_zero());
      CHECK(a.gauss().im == 0);
      CHECK((a.gauss().re > 0) == (k % 2 == 0));
    }
  }
}

TEST_CASE("closed form equals the engine up to t = 120") {
  const AmplitudeHistory history(120, AbsorptionConfig::bypass(0));
  for (int t = 1; t <= 120; ++t) {
    CHECK(theorem1_amplitude(t) == history.at(0, t));
  }
}

TEST_CASE("one-shot identity verifiers") {
  // lemma 1 at t=3: a(-1,3 bypass -1) = sqrt(2) a(0,4 bypass 0) = 1/2
  const auto l1 = verify_lemma1(3);
  CHECK(l1.holds);
  CHECK(l1.lhs == amp(1, 0, 2));
  // lemma 2 at t=4
  const auto l2 = verify_lemma2(4);
  CHECK(l2.holds);
  CHECK(l2.rhs == amp(0, -1, 3));
  // proposition 1 at t=5: both sides -i/2, so P(3,5 bypass 3) = 1/4
  const auto p1 = verify_proposition1(5);
  CHECK(p1.holds);
  CHECK(p1.lhs == amp(0, -1, 2));
  CHECK(p1.lhs.norm_sq() == DyadicRational(BigInt(1), 2));
  CHECK(p1.lhs == oracle_amplitude(3, 5, AbsorptionConfig::bypass(3)));
  CHECK(verify_lemma3(5).holds);
}

TEST_CASE("verifiers reject arguments below the validity threshold") {
  CHECK_THROWS_AS(verify_lemma1(2), DomainError);
  CHECK_THROWS_AS(verify_lemma2(2), DomainError);
  CHECK_THROWS_AS(verify_lemma3(3), DomainError);
  CHECK_THROWS_AS(verify_proposition1(3), DomainError);
  CHECK_THROWS_AS(verify_lemma4(2), DomainError);
}

TEST_CASE("lemma 4 convolution identity") {
  // n=3: empty sum, both sides zero
  CHECK(verify_lemma4(3).holds);
  // n=4: single term, LHS a(0,8) = -2^(-7/2)
  const auto n4 = verify_lemma4(4);
  CHECK(n4.holds);
  CHECK(n4.lhs == amp(-1, 0, 7));
  // n=5: t=10 is congruent to 2 mod 4, both sides vanish
  const auto n5 = verify_lemma4(5);
  CHECK(n5.holds);
  CHECK(n5.lhs.is_zero());
  for (int n = 6; n <= 20; ++n) {
    CHECK(verify_lemma4(n).holds);
  }
}

TEST_CASE("closed form satisfies its own recurrence (induction step)") {
  CHECK(theorem1_induction_check(20));
}

TEST_CASE("shared-history verifier covers every identity up to t = 60") {
  const IdentityVerifier verifier(60);
  for (int t = 3; t <= 60; ++t) {
    CHECK(verifier.lemma1(t).holds);
    CHECK(verifier.lemma2(t).holds);
  }
  for (int t = 4; t <= 60; ++t) {
    CHECK(verifier.lemma3(t).holds);
    CHECK(verifier.proposition1(t).holds);
  }
  for (int n = 3; n <= 30; ++n) {
    CHECK(verifier.lemma4(n).holds);
  }
  for (int t = 1; t <= 60; ++t) {
    CHECK(verifier.theorem1(t).holds);
  }
}

#include <doctest.h>

#include <cmath>

#include "checkers/series.hpp"

using namespace checkers;

TEST_CASE("closed-form terms at small t") {
  CHECK(term(0, 2) == 0.5);
  CHECK(term(0, 4) == 0.125);
  CHECK(term(0, 8) == doctest::Approx(1.0 / 128.0).epsilon(1e-15));
  CHECK(term(0, 3) == 0.0);
  CHECK(term(0, 6) == 0.0);
  CHECK(term(3, 3) == 0.25);
  CHECK(term(3, 4) == 0.0);
  CHECK(term(3, 5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(term(-1, 3) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(term(-1, 1) == 0.0);
  CHECK(term(2, 2) == 0.5);
  CHECK_THROWS_AS(term(7, 4), UnsupportedLine);
}

TEST_CASE("term families relate as the proofs state") {
  for (long long k = 1; k <= 12; ++k) {
    CHECK(term(3, 4 * k + 1) == doctest::Approx(2.0 * term(0, 4 * k)).epsilon(1e-14));
    CHECK(term(3, 4 * k + 3) ==
          doctest::Approx(2.0 * term(0, 4 * k + 4)).epsilon(1e-14));
  }
  for (long long t = 3; t <= 40; ++t) {
    CHECK(term(-1, t) == doctest::Approx(2.0 * term(0, t + 1)).epsilon(1e-14));
    CHECK(term(2, t) == term(0, t));
  }
}

TEST_CASE("exact terms match the floating terms") {
  for (const int line : {-1, 0, 2, 3}) {
    for (long long t = 1; t <= 60; ++t) {
      CHECK(term_exact(line, t).to_double() ==
            doctest::Approx(term(line, t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("exactness bridge: engine log equals closed-form terms, t <= 200") {
  for (const int line : {-1, 0, 2, 3}) {
    const auto report = partial_sum_engine(line, 200, EngineMode::Exact);
    REQUIRE(report.exact_sum.has_value());
    DyadicRational expected;
    for (long long t = 1; t <= 200; ++t) {
      expected = expected + term_exact(line, t);
    }
    CHECK(*report.exact_sum == expected);
  }
}

TEST_CASE("partial sums are monotone, bounded, and below their target") {
  for (const int line : {-1, 0, 2, 3}) {
    const double target = target_constant(line);
    double previous = 0.0;
    for (long long k : {2LL, 5LL, 20LL, 100LL, 1000LL}) {
      const auto report = partial_sum_closed(line, k);
      CHECK(report.partial_sum >= previous);
      CHECK(report.partial_sum <= 1.0);
      CHECK(report.partial_sum <= target + 1e-15);
      previous = report.partial_sum;
    }
  }
}

TEST_CASE("tail bound: monotone, and it dominates the true tail") {
  CHECK(tail_bound(0, 400) < tail_bound(0, 200));
  CHECK(tail_bound(0, 200) <= 1e-6);
  // deep reference sum as the empirical truth
  const double reference = partial_sum_closed(0, 1000000).partial_sum;
  for (long long k : {10LL, 50LL, 200LL, 2000LL}) {
    const auto report = partial_sum_closed(0, k);
    CHECK(reference - report.partial_sum <= tail_bound(0, k));
  }
  // line 3 carries two doubled families
  CHECK(tail_bound(3, 1000) ==
        doctest::Approx(4.0 * tail_bound(0, 1000)).epsilon(0.01));
  CHECK_THROWS_AS(tail_bound(0, 1), DomainError);
}

TEST_CASE("certification at k_max = 1e4") {
  for (const int line : {-1, 0, 2, 3}) {
    const auto report = partial_sum_closed(line, 10000);
    REQUIRE(report.target.has_value());
    REQUIRE(report.tail_bound.has_value());
    CHECK(report.verdict == Verdict::Certified);
    CHECK(std::fabs(report.partial_sum - *report.target) <= *report.tail_bound);
  }
}

TEST_CASE("targets") {
  CHECK(target_constant(0) == doctest::Approx(2.0 / M_PI).epsilon(1e-15));
  CHECK(target_constant(3) == doctest::Approx(8.0 / M_PI - 2.0).epsilon(1e-15));
  CHECK(target_constant(-1) == doctest::Approx(4.0 / M_PI - 1.0).epsilon(1e-15));
  CHECK_THROWS_AS(target_constant(5), UnsupportedLine);
}

TEST_CASE("engine summation: exact vs float, and exploratory lines") {
  const auto exact = partial_sum_engine(0, 40, EngineMode::Exact);
  const auto approx = partial_sum_engine(0, 40, EngineMode::Float);
  CHECK(exact.partial_sum == doctest::Approx(approx.partial_sum).epsilon(1e-12));
  // float cancellation leaves ~1e-17 ghosts where exact arrivals vanish,
  // so the float log can only be longer
  CHECK(approx.terms_used >= exact.terms_used);
  // t_max = 2 captures exactly the first arrival: P(0,2) = 1/2
  const auto first = partial_sum_engine(0, 2, EngineMode::Exact);
  CHECK(*first.exact_sum == DyadicRational(BigInt(1), 1));
  // far line: finite probability in (0,1), no target constant asserted
  const auto exploratory = partial_sum_engine(7, 400, EngineMode::Float);
  CHECK(exploratory.verdict == Verdict::NoTarget);
  CHECK(exploratory.partial_sum > 0.0);
  CHECK(exploratory.partial_sum < 1.0);
}

TEST_CASE("deep engine run certifies against the closed-form constant") {
  const auto report = partial_sum_engine(0, 400, EngineMode::Float);
  REQUIRE(report.tail_bound.has_value());
  CHECK(report.verdict == Verdict::Certified);
}

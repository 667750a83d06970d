#include <doctest.h>

#include <algorithm>
#include <set>

#include "checkers/engine.hpp"
#include "checkers/oracle.hpp"

using namespace checkers;

namespace {

const AbsorptionConfig kFree = AbsorptionConfig::free_walk();
const AbsorptionConfig kLine0 = AbsorptionConfig::bypass(0);

HalfPowerAmplitude amp(long long re, long long im, long long k) {
  return {GaussianInt(BigInt(re), BigInt(im)), k};
}

std::set<PathRecord> as_set(const std::vector<PathRecord>& paths) {
  return {paths.begin(), paths.end()};
}

// exhaustive sum of weights, the literal defining sum
HalfPowerAmplitude weight_sum(const std::vector<PathRecord>& paths) {
  HalfPowerAmplitude sum;
  for (const auto& p : paths) {
    sum = sum + p.weight();
  }
  return sum;
}

}  // namespace

TEST_CASE("enumeration: the definition's small examples") {
  const auto free3 = enumerate_paths(1, 3, kFree);
  REQUIRE(free3.size() == 2);
  CHECK(as_set(free3) ==
        as_set({PathRecord::from_string("RRL"), PathRecord::from_string("RLR")}));

  const auto bypass3 = enumerate_paths(1, 3, kLine0);
  REQUIRE(bypass3.size() == 1);
  CHECK(bypass3[0] == PathRecord::from_string("RRL"));

  const auto bypass4 = enumerate_paths(0, 4, kLine0);
  REQUIRE(bypass4.size() == 1);
  CHECK(bypass4[0] == PathRecord::from_string("RRLL"));
}

TEST_CASE("path record basics") {
  const auto p = PathRecord::from_string("RRLL");
  CHECK(p.end_x() == 0);
  CHECK(p.x_at(2) == 2);
  CHECK(p.turns() == 1);
  CHECK(p.to_string() == "RRLL");
  CHECK(p.weight() == amp(1, 0, 3));
}

TEST_CASE("oracle amplitudes reproduce the definition's values") {
  CHECK(oracle_amplitude(1, 3, kFree) == amp(1, -1, 2));   // (1/2, -1/2)
  CHECK(oracle_amplitude(0, 2, kLine0) == amp(1, 0, 1));   // 1/sqrt(2)
  CHECK(oracle_amplitude(-2, 2, kLine0).is_zero());        // first move forced right
}

TEST_CASE("cap enforcement") {
  CHECK_THROWS_AS(enumerate_paths(0, 30, kFree), CapExceeded);
  CHECK_THROWS_AS(oracle_amplitude(0, 30, kLine0), CapExceeded);
  CHECK_NOTHROW(oracle_amplitude(0, 25, kLine0, 26));  // cap is configurable
}

TEST_CASE("engine equals oracle for every line and the free walk, t <= 12") {
  const std::vector<AbsorptionConfig> configs = {
      kFree, AbsorptionConfig::bypass(-1), kLine0, AbsorptionConfig::bypass(2),
      AbsorptionConfig::bypass(3)};
  for (const auto& cfg : configs) {
    const AmplitudeHistory history(12, cfg);
    for (int t = 1; t <= 12; ++t) {
      for (int x = -t; x <= t; ++x) {
        CAPTURE(cfg.line.value_or(99));
        CAPTURE(x);
        CAPTURE(t);
        CHECK(history.at(x, t) == oracle_amplitude(x, t, cfg));
      }
    }
  }
}

TEST_CASE("lemma 1 map: shift and drop the first move") {
  const auto s = PathRecord::from_string("RRLL");
  const auto image = map_lemma1(s);
  CHECK(image == PathRecord::from_string("RLL"));
  CHECK(image.contributes_to(-1, 3, AbsorptionConfig::bypass(-1)));
}

TEST_CASE("lemma 1 map: bijectivity and weights, exhaustively") {
  for (int t = 3; t <= 15; t += 2) {
    const auto domain = enumerate_paths(0, t + 1, kLine0);
    const auto codomain = enumerate_paths(-1, t, AbsorptionConfig::bypass(-1));
    std::set<PathRecord> images;
    for (const auto& s : domain) {
      const auto image = map_lemma1(s);
      CHECK(images.insert(image).second);  // injective
      CHECK(s.weight().scaled_sqrt2(1) == image.weight());
    }
    CHECK(images == as_set(codomain));  // surjective
  }
}

TEST_CASE("lemma 2 map: reflection about x = 1 from the second move") {
  const auto s = PathRecord::from_string("RRLL");
  const auto image = map_lemma2(s);
  CHECK(image == PathRecord::from_string("RLRR"));
  CHECK(image.end_x() == 2);
  CHECK(image.contributes_to(2, 4, AbsorptionConfig::bypass(2)));
}

TEST_CASE("lemma 2 map: bijectivity, weights, and the single extra turn") {
  for (int t = 4; t <= 16; t += 4) {
    const auto domain = enumerate_paths(0, t, kLine0);
    const auto codomain = enumerate_paths(2, t, AbsorptionConfig::bypass(2));
    std::set<PathRecord> images;
    for (const auto& s : domain) {
      const auto image = map_lemma2(s);
      CHECK(images.insert(image).second);
      CHECK(s.weight().times_unit(Unit::MinusI) == image.weight());
      CHECK(image.turns() == s.turns() + 1);
    }
    CHECK(images == as_set(codomain));
  }
}

TEST_CASE("lemma 3 split: partition counts and the branch sums") {
  for (int t = 5; t <= 15; t += 2) {
    const auto domain = enumerate_paths(3, t, AbsorptionConfig::bypass(3));
    std::size_t right = 0, left = 0;
    HalfPowerAmplitude right_sum, left_sum;
    for (const auto& s : domain) {
      const auto split = map_lemma3_split(s);
      if (split.branch == Lemma3Branch::RightSet) {
        ++right;
        right_sum = right_sum + s.weight();
        CHECK(split.image.contributes_to(2, t - 1, AbsorptionConfig::bypass(2)));
      } else {
        ++left;
        left_sum = left_sum + s.weight();
        CHECK(split.image.contributes_to(-1, t, AbsorptionConfig::bypass(-1)));
      }
    }
    CHECK(right + left == domain.size());
    // sum over the R-set equals a(2, t-1 bypass 2) / sqrt(2)
    const auto a2 = weight_sum(enumerate_paths(2, t - 1, AbsorptionConfig::bypass(2)));
    CHECK(right_sum == a2.scaled_sqrt2(-1));
    // and both branches together give the lemma's right-hand side
    const auto am1 =
        weight_sum(enumerate_paths(-1, t, AbsorptionConfig::bypass(-1)));
    CHECK(right_sum + left_sum ==
          a2.scaled_sqrt2(1) + am1.times_unit(Unit::MinusI));
  }
}

TEST_CASE("lemma 4 split: round trip, factor membership, weight relation") {
  for (int n = 3; n <= 8; ++n) {
    const auto domain = enumerate_paths(0, 2 * n, kLine0);
    for (const auto& p : domain) {
      const auto split = map_lemma4_split(p);
      CHECK(split.j >= 1);
      CHECK(split.j <= n - 1);
      CHECK(split.l.contributes_to(0, 2 * split.j, kLine0));
      CHECK(split.m.contributes_to(0, 2 * (n - split.j), kLine0));
      CHECK(reconstruct_lemma4(split.j, split.m, split.l) == p);
      const auto product = split.m.weight() * split.l.weight();
      if (split.j < n - 1) {
        CHECK((-p.weight()).scaled_sqrt2(1) == product);
      } else {
        CHECK(p.weight().scaled_sqrt2(1) == product);
      }
    }
  }
}

TEST_CASE("lemma maps validate their domains eagerly") {
  // too short for lemma 1 (t = 2 is excluded)
  CHECK_THROWS_AS(map_lemma1(PathRecord::from_string("RL")), DomainError);
  // wrong endpoint
  CHECK_THROWS_AS(map_lemma2(PathRecord::from_string("RRRL")), DomainError);
  // lemma 3 requires t > 3
  CHECK_THROWS_AS(map_lemma3_split(PathRecord::from_string("RRR")), DomainError);
  // lemma 4 requires an even length > 4
  CHECK_THROWS_AS(map_lemma4_split(PathRecord::from_string("RRLL")), DomainError);
  // path touching the line in the interior never enters the domain
  CHECK_THROWS_AS(map_lemma1(PathRecord::from_string("RLRRLL")), DomainError);
}

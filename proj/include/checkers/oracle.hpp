#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "checkers/engine.hpp"

namespace checkers {

enum class Move : std::uint8_t { L = 0, R = 1 };

/// A checker path from (0,0) as its move sequence; vertices are derived on
/// demand. Admissible paths start with R (they pass through (1,1)).
struct PathRecord {
  std::vector<Move> moves;

  int length() const { return static_cast<int>(moves.size()); }
  /// x coordinate of the vertex after `steps` moves.
  int x_at(int steps) const;
  int end_x() const { return x_at(length()); }
  /// Number of interior vertices where consecutive moves are orthogonal.
  int turns() const;

  /// i * (-i)^turns * 2^(-(t-1)/2).
  HalfPowerAmplitude weight() const;

  /// Does this path appear in the defining sum of a(x, t [bypass x0])?
  /// Start with R, end at (x, t), and with a line: no interior vertex on
  /// x = x0 (the initial and final vertices are exempt).
  bool contributes_to(int x, int t, const AbsorptionConfig& cfg) const;

  std::string to_string() const;  // e.g. "RRL"
  static PathRecord from_string(const std::string& s);

  friend bool operator==(const PathRecord&, const PathRecord&) = default;
  friend bool operator<(const PathRecord& a, const PathRecord& b) {
    return a.moves < b.moves;
  }
};

inline constexpr int kDefaultEnumerationCap = 24;

/// All move sequences of length t starting with R that contribute to
/// a(x, t [bypass x0]). 2^(t-1) candidates; throws CapExceeded above cap.
std::vector<PathRecord> enumerate_paths(int x, int t, const AbsorptionConfig& cfg,
                                        int cap = kDefaultEnumerationCap);

/// Direct evaluation of the defining path sum — ground truth for the
/// lattice engine.
HalfPowerAmplitude oracle_amplitude(int x, int t, const AbsorptionConfig& cfg,
                                    int cap = kDefaultEnumerationCap);

// --- executable proof bijections -----------------------------------------
// Each map validates its precondition eagerly and throws DomainError naming
// the violated constraint.

/// Contributor of a(0, t+1 bypass 0), t > 2  ->  contributor of
/// a(-1, t bypass -1): shift by (-1,-1) and delete the first move.
/// Weight relation: sqrt(2) a(s) = a(s').
PathRecord map_lemma1(const PathRecord& s);

/// Contributor of a(0, t bypass 0), t > 2  ->  contributor of
/// a(2, t bypass 2): reflect about x = 1 from the second move on.
/// Weight relation: -i a(s) = a(s').
PathRecord map_lemma2(const PathRecord& s);

enum class Lemma3Branch { RightSet, LeftSet };

struct Lemma3Image {
  Lemma3Branch branch;
  PathRecord image;
};

/// Contributor of a(3, t bypass 3), t > 3, classified by its second move:
/// RR -> RightSet, image contributes to a(2, t-1 bypass 2);
/// RL -> LeftSet, image contributes to a(-1, t bypass -1).
Lemma3Image map_lemma3_split(const PathRecord& s);

struct Lemma4Split {
  int j;         // smallest j >= 1 with vertex (1, 2j+1) on the path
  PathRecord m;  // contributor of a(0, 2(n-j) bypass 0)
  PathRecord l;  // contributor of a(0, 2j bypass 0)
};

/// Contributor of a(0, 2n bypass 0), n > 2, split at its first return to
/// the line x = 1. Weight relation: -sqrt(2) a(p) = a(m) a(l) for
/// j < n-1, and +sqrt(2) a(p) = a(m) a(l) for j = n-1.
Lemma4Split map_lemma4_split(const PathRecord& p);

/// Inverse of map_lemma4_split: R, then l's moves, then m's moves but the
/// first.
PathRecord reconstruct_lemma4(int j, const PathRecord& m, const PathRecord& l);

}  // namespace checkers

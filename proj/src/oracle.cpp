#include "checkers/oracle.hpp"

#include <bit>

namespace checkers {

namespace {

// unit i * (-i)^n
GaussianInt turn_phase(int n) {
  switch (n & 3) {
    case 0:
      return {0, 1};  // i
    case 1:
      return {1, 0};  // 1
    case 2:
      return {0, -1};  // -i
    default:
      return {-1, 0};  // -1
  }
}

void require(bool ok, const char* what) {
  if (!ok) {
    throw DomainError(what);
  }
}

bool avoids_line_interior(const PathRecord& s, int x0) {
  int x = 0;
  const int t = s.length();
  for (int step = 1; step < t; ++step) {
    x += s.moves[step - 1] == Move::R ? 1 : -1;
    if (x == x0) {
      return false;
    }
  }
  return true;
}

void check_cap(int t, int cap) {
  if (t > cap) {
    throw CapExceeded("path enumeration: t = " + std::to_string(t) +
                      " exceeds cap " + std::to_string(cap));
  }
  if (t < 1 || t > 62) {
    throw DomainError("path enumeration: t out of range");
  }
}

}  // namespace

int PathRecord::x_at(int steps) const {
  int x = 0;
  for (int i = 0; i < steps; ++i) {
    x += moves[i] == Move::R ? 1 : -1;
  }
  return x;
}

int PathRecord::turns() const {
  int n = 0;
  for (std::size_t i = 1; i < moves.size(); ++i) {
    n += moves[i] != moves[i - 1];
  }
  return n;
}

HalfPowerAmplitude PathRecord::weight() const {
  return {turn_phase(turns()), length() - 1};
}

bool PathRecord::contributes_to(int x, int t, const AbsorptionConfig& cfg) const {
  if (length() != t || moves.empty() || moves[0] != Move::R || end_x() != x) {
    return false;
  }
  return !cfg.line || avoids_line_interior(*this, *cfg.line);
}

std::string PathRecord::to_string() const {
  std::string s;
  s.reserve(moves.size());
  for (Move m : moves) {
    s.push_back(m == Move::R ? 'R' : 'L');
  }
  return s;
}

PathRecord PathRecord::from_string(const std::string& s) {
  PathRecord p;
  p.moves.reserve(s.size());
  for (char c : s) {
    if (c != 'R' && c != 'L') {
      throw DomainError("PathRecord::from_string: move must be R or L");
    }
    p.moves.push_back(c == 'R' ? Move::R : Move::L);
  }
  return p;
}

std::vector<PathRecord> enumerate_paths(int x, int t, const AbsorptionConfig& cfg,
                                        int cap) {
  check_cap(t, cap);
  std::vector<PathRecord> out;
  // bit b of mask = move b+1 (the first move is forced R); set bit = R
  const std::uint64_t count = std::uint64_t{1} << (t - 1);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    PathRecord p;
    p.moves.resize(t);
    p.moves[0] = Move::R;
    for (int b = 0; b + 1 < t; ++b) {
      p.moves[b + 1] = (mask >> b) & 1 ? Move::R : Move::L;
    }
    if (p.contributes_to(x, t, cfg)) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

HalfPowerAmplitude oracle_amplitude(int x, int t, const AbsorptionConfig& cfg,
                                    int cap) {
  check_cap(t, cap);
  if (x < 2 - t || x > t || ((x - t) & 1) != 0) {
    return {};
  }
  const int x0 = cfg.line.value_or(0);
  const bool has_line = cfg.line.has_value();
  if (has_line && t > 1 && x0 == 1) {
    return {};  // the forced vertex (1,1) is interior for t > 1
  }
  GaussianInt total;
  const std::uint64_t count = std::uint64_t{1} << (t - 1);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    // walk the move word directly; bit b = move b+1, set = R
    int pos = 1;
    int turns = 0;
    bool prev_right = true;
    bool alive = true;
    for (int b = 0; b + 1 < t; ++b) {
      const bool right = (mask >> b) & 1;
      pos += right ? 1 : -1;
      turns += right != prev_right;
      prev_right = right;
      // vertex after move b+1 is interior unless it is the final one
      if (has_line && b + 2 < t && pos == x0) {
        alive = false;
        break;
      }
    }
    if (alive && pos == x) {
      total = total + turn_phase(turns);
    }
  }
  return {std::move(total), t - 1};
}

PathRecord map_lemma1(const PathRecord& s) {
  const int len = s.length();  // len = t + 1
  require(len > 3, "map_lemma1: requires t > 2");
  require(s.contributes_to(0, len, AbsorptionConfig::bypass(0)),
          "map_lemma1: path must contribute to a(0, t+1 bypass 0)");
  PathRecord image;
  image.moves.assign(s.moves.begin() + 1, s.moves.end());
  require(image.contributes_to(-1, len - 1, AbsorptionConfig::bypass(-1)),
          "map_lemma1: image fails to contribute to a(-1, t bypass -1)");
  return image;
}

PathRecord map_lemma2(const PathRecord& s) {
  const int len = s.length();
  require(len > 2, "map_lemma2: requires t > 2");
  require(s.contributes_to(0, len, AbsorptionConfig::bypass(0)),
          "map_lemma2: path must contribute to a(0, t bypass 0)");
  PathRecord image = s;
  for (int i = 1; i < len; ++i) {
    image.moves[i] = image.moves[i] == Move::R ? Move::L : Move::R;
  }
  require(image.contributes_to(2, len, AbsorptionConfig::bypass(2)),
          "map_lemma2: image fails to contribute to a(2, t bypass 2)");
  return image;
}

Lemma3Image map_lemma3_split(const PathRecord& s) {
  const int len = s.length();
  require(len > 4, "map_lemma3_split: requires t > 3");
  require(s.contributes_to(3, len, AbsorptionConfig::bypass(3)),
          "map_lemma3_split: path must contribute to a(3, t bypass 3)");
  if (s.moves[1] == Move::R) {
    // drop the first move and shift by (-1,-1)
    PathRecord image;
    image.moves.assign(s.moves.begin() + 1, s.moves.end());
    require(image.contributes_to(2, len - 1, AbsorptionConfig::bypass(2)),
            "map_lemma3_split: R-branch image fails a(2, t-1 bypass 2)");
    return {Lemma3Branch::RightSet, std::move(image)};
  }
  // reflect about x = 1 from the second move on (inverse of map_lemma2's
  // picture); lands in the contributors of a(-1, t bypass -1) starting RR
  PathRecord image = s;
  for (int i = 1; i < len; ++i) {
    image.moves[i] = image.moves[i] == Move::R ? Move::L : Move::R;
  }
  require(image.contributes_to(-1, len, AbsorptionConfig::bypass(-1)),
          "map_lemma3_split: L-branch image fails a(-1, t bypass -1)");
  return {Lemma3Branch::LeftSet, std::move(image)};
}

Lemma4Split map_lemma4_split(const PathRecord& p) {
  const int len = p.length();
  require(len > 4 && len % 2 == 0, "map_lemma4_split: requires 2n with n > 2");
  const int n = len / 2;
  require(p.contributes_to(0, len, AbsorptionConfig::bypass(0)),
          "map_lemma4_split: path must contribute to a(0, 2n bypass 0)");
  int j = 0;
  for (int cand = 1; cand <= n - 1; ++cand) {
    if (p.x_at(2 * cand + 1) == 1) {
      j = cand;
      break;
    }
  }
  require(j >= 1, "map_lemma4_split: no return to the line x = 1 found");
  Lemma4Split split;
  split.j = j;
  split.l.moves.assign(p.moves.begin() + 1, p.moves.begin() + (2 * j + 1));
  split.m.moves.push_back(Move::R);
  split.m.moves.insert(split.m.moves.end(), p.moves.begin() + (2 * j + 1),
                       p.moves.end());
  require(split.l.contributes_to(0, 2 * j, AbsorptionConfig::bypass(0)),
          "map_lemma4_split: l fails to contribute to a(0, 2j bypass 0)");
  require(split.m.contributes_to(0, 2 * (n - j), AbsorptionConfig::bypass(0)),
          "map_lemma4_split: m fails to contribute to a(0, 2(n-j) bypass 0)");
  return split;
}

PathRecord reconstruct_lemma4(int j, const PathRecord& m, const PathRecord& l) {
  require(j >= 1 && l.length() == 2 * j, "reconstruct_lemma4: l must have 2j moves");
  require(m.length() >= 2 && m.moves[0] == Move::R,
          "reconstruct_lemma4: m must start with R");
  PathRecord p;
  p.moves.push_back(Move::R);
  p.moves.insert(p.moves.end(), l.moves.begin(), l.moves.end());
  p.moves.insert(p.moves.end(), m.moves.begin() + 1, m.moves.end());
  return p;
}

}  // namespace checkers

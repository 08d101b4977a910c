#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "circuitsplit/matrix.hpp"
#include "circuitsplit/split_system.hpp"
#include "json.hpp"

namespace circuitsplit {

using Chord = std::pair<int, int>;  // first < second

// Chords of the polygon with vertices 1..n in clockwise order; polygon
// sides {i, i+1} and {n, 1} count as chords too.
struct ChordSet {
  int n = 0;
  std::set<Chord> chords;

  bool contains(int a, int b) const { return chords.count({std::min(a, b), std::max(a, b)}) > 0; }
  bool is_side(const Chord& c) const { return c.second - c.first == 1 || (c.first == 1 && c.second == n && n > 2); }
};

ChordSet make_chord_set(int n, const std::vector<Chord>& chords);

// Chords with four distinct endpoints that interleave around the circle.
bool chords_cross(const Chord& x, const Chord& y);

struct PtolemyReport {
  bool closed = true;
  std::optional<std::pair<Chord, Chord>> violation;  // first crossing pair lacking completion
};

PtolemyReport ptolemy_closed(const ChordSet& cs);

// One region of a polygon after cutting along its uncrossed diagonals.
struct TilingRegion {
  std::vector<int> vertices;  // labels in clockwise order
  bool shaded = false;        // no diagonals inside; unshaded regions are cliques
};

struct PartTiling {
  std::vector<int> labels;
  std::vector<Chord> chords;
  std::vector<TilingRegion> regions;
  std::vector<Chord> bridges;
};

struct PlabicTiling {
  bool ok = true;
  std::optional<std::vector<int>> failed_part;
  std::optional<std::pair<Chord, Chord>> violation;
  std::vector<PartTiling> parts;
};

// Chord of a split in the polygon of its part: the arc of positions s..t
// becomes the chord joining the labels at positions s and t+1.
std::vector<Chord> split_chords(const WeightedSplitSystem& part);

PlabicTiling plabic_tiling(const CompactifiedSplitSystem& sys);

enum class Obstruction { Obstructed, NoObstruction };

struct ObstructionReport {
  Obstruction verdict = Obstruction::NoObstruction;
  ChordSet support;
  std::optional<std::pair<Chord, Chord>> violation;
};

// One-sided planarity test on a finite response matrix: the off-diagonal
// support must be Ptolemy closed.
ObstructionReport planarity_obstruction(const ExtMatrix& response);

nlohmann::json ptolemy_report_to_json(const PtolemyReport& r);
nlohmann::json plabic_tiling_to_json(const PlabicTiling& t);
nlohmann::json obstruction_report_to_json(const ObstructionReport& r);

}  // namespace circuitsplit

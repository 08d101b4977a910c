#include "circuitsplit/plabic.hpp"

#include <algorithm>
#include <functional>

#include "circuitsplit/electrical.hpp"
#include "circuitsplit/error.hpp"

namespace circuitsplit {

namespace {

Chord ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

nlohmann::json chord_json(const Chord& c) { return nlohmann::json::array({c.first, c.second}); }

// Splits `region` (local positions, clockwise) along uncrossed diagonals.
void cut_regions(const std::vector<int>& region, const ChordSet& cs, std::vector<std::vector<int>>& out) {
  const std::size_t m = region.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 2; b < m; ++b) {
      if (a == 0 && b == m - 1) continue;  // side of the region
      const Chord c = ordered(region[a], region[b]);
      if (!cs.chords.count(c)) continue;
      const bool crossed = std::any_of(cs.chords.begin(), cs.chords.end(), [&](const Chord& o) { return chords_cross(c, o); });
      if (crossed) continue;
      std::vector<int> left(region.begin() + static_cast<long>(a), region.begin() + static_cast<long>(b) + 1);
      std::vector<int> right(region.begin(), region.begin() + static_cast<long>(a) + 1);
      right.insert(right.end(), region.begin() + static_cast<long>(b), region.end());
      cut_regions(left, cs, out);
      cut_regions(right, cs, out);
      return;
    }
  }
  out.push_back(region);
}

std::vector<Chord> cut_edges(int n, const std::set<Chord>& chords) {
  std::vector<Chord> bridges;
  for (const Chord& c : chords) {
    std::vector<std::vector<int>> adj(n + 1);
    for (const Chord& o : chords) {
      if (o == c) continue;
      adj[o.first].push_back(o.second);
      adj[o.second].push_back(o.first);
    }
    std::vector<bool> seen(n + 1, false);
    std::vector<int> stack{c.first};
    seen[c.first] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    if (!seen[c.second]) bridges.push_back(c);
  }
  return bridges;
}

}  // namespace

ChordSet make_chord_set(int n, const std::vector<Chord>& chords) {
  ChordSet cs;
  cs.n = n;
  for (auto [a, b] : chords) {
    if (a == b || a < 1 || b < 1 || a > n || b > n) {
      throw DomainError("invalid chord", {{"chord", {a, b}}, {"n", n}});
    }
    cs.chords.insert(ordered(a, b));
  }
  return cs;
}

bool chords_cross(const Chord& x, const Chord& y) {
  const auto [a, b] = x;
  const auto [c, d] = y;
  if (c == a || c == b || d == a || d == b) return false;
  const bool c_in = a < c && c < b;
  const bool d_in = a < d && d < b;
  return c_in != d_in;
}

PtolemyReport ptolemy_closed(const ChordSet& cs) {
  for (auto it = cs.chords.begin(); it != cs.chords.end(); ++it) {
    for (auto jt = std::next(it); jt != cs.chords.end(); ++jt) {
      if (!chords_cross(*it, *jt)) continue;
      const int pts[4] = {it->first, it->second, jt->first, jt->second};
      for (int p = 0; p < 4; ++p) {
        for (int q = p + 1; q < 4; ++q) {
          if (!cs.contains(pts[p], pts[q])) return {false, std::make_pair(*it, *jt)};
        }
      }
    }
  }
  return {};
}

std::vector<Chord> split_chords(const WeightedSplitSystem& part) {
  const auto& order = part.order();
  const std::size_t k = order.size();
  std::vector<Chord> out;
  for (const auto& sp : part.splits()) {
    std::vector<bool> in(k, false);
    for (std::size_t p = 0; p < k; ++p) in[p] = std::binary_search(sp.side.begin(), sp.side.end(), order[p]);
    // Start of the arc: a position inside whose predecessor is outside.
    for (std::size_t s = 0; s < k; ++s) {
      if (in[s] && !in[(s + k - 1) % k]) {
        std::size_t t = s;
        while (in[(t + 1) % k]) t = (t + 1) % k;
        out.push_back(ordered(order[s], order[(t + 1) % k]));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PlabicTiling plabic_tiling(const CompactifiedSplitSystem& sys) {
  PlabicTiling tiling;
  for (const auto& part : sys.parts()) {
    const auto& order = part.order();
    const int k = static_cast<int>(order.size());
    // Work on local positions 1..k so crossing is a plain interval test.
    std::vector<Chord> local;
    auto pos = [&](int label) { return static_cast<int>(std::find(order.begin(), order.end(), label) - order.begin()) + 1; };
    auto chords = split_chords(part);
    for (auto [a, b] : chords) local.push_back(ordered(pos(a), pos(b)));
    const ChordSet cs = make_chord_set(k, local);
    auto back = [&](const Chord& c) { return ordered(order[c.first - 1], order[c.second - 1]); };

    const auto report = ptolemy_closed(cs);
    if (!report.closed) {
      tiling.ok = false;
      tiling.failed_part = part.labels();
      tiling.violation = std::make_pair(back(report.violation->first), back(report.violation->second));
      return tiling;
    }

    PartTiling pt;
    pt.labels = part.labels();
    pt.chords = chords;
    if (k >= 2) {
      std::vector<int> all(k);
      for (int i = 0; i < k; ++i) all[i] = i + 1;
      std::vector<std::vector<int>> regions;
      cut_regions(all, cs, regions);
      for (const auto& r : regions) {
        const std::size_t m = r.size();
        std::size_t diagonals = 0;
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t b = a + 2; b < m; ++b) {
            if (!(a == 0 && b == m - 1) && cs.contains(r[a], r[b])) ++diagonals;
          }
        }
        const std::size_t possible = m >= 3 ? m * (m - 3) / 2 : 0;
        if (diagonals != 0 && diagonals != possible) {
          throw DomainError("region is neither empty nor a clique", {{"region", r}});
        }
        TilingRegion tr;
        for (int p : r) tr.vertices.push_back(order[p - 1]);
        tr.shaded = diagonals == 0;
        pt.regions.push_back(std::move(tr));
      }
      for (const Chord& c : cut_edges(k, cs.chords)) pt.bridges.push_back(back(c));
      std::sort(pt.bridges.begin(), pt.bridges.end());
    }
    tiling.parts.push_back(std::move(pt));
  }
  return tiling;
}

ObstructionReport planarity_obstruction(const ExtMatrix& response) {
  validate_response_matrix(response);
  const int n = static_cast<int>(response.size());
  std::vector<Chord> support;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const ExtRat& x = response.label(i, j);
      if (x.is_infinite()) {
        throw DomainError("obstruction test needs a finite response matrix", {{"entry", {i, j}}});
      }
      if (!x.is_zero()) support.emplace_back(i, j);
    }
  }
  ObstructionReport r;
  r.support = make_chord_set(n, support);
  const auto p = ptolemy_closed(r.support);
  if (!p.closed) {
    r.verdict = Obstruction::Obstructed;
    r.violation = p.violation;
  }
  return r;
}

nlohmann::json ptolemy_report_to_json(const PtolemyReport& r) {
  nlohmann::json j{{"ptolemy", r.closed}};
  if (r.violation) j["violation"] = {chord_json(r.violation->first), chord_json(r.violation->second)};
  return j;
}

nlohmann::json plabic_tiling_to_json(const PlabicTiling& t) {
  nlohmann::json j{{"ok", t.ok}};
  if (!t.ok) {
    j["failedPart"] = *t.failed_part;
    j["violation"] = {chord_json(t.violation->first), chord_json(t.violation->second)};
    return j;
  }
  auto parts = nlohmann::json::array();
  for (const auto& p : t.parts) {
    nlohmann::json jp{{"labels", p.labels}};
    auto chords = nlohmann::json::array();
    for (const auto& c : p.chords) chords.push_back(chord_json(c));
    jp["chords"] = std::move(chords);
    auto regions = nlohmann::json::array();
    for (const auto& r : p.regions) regions.push_back({{"vertices", r.vertices}, {"shaded", r.shaded}});
    jp["regions"] = std::move(regions);
    auto bridges = nlohmann::json::array();
    for (const auto& c : p.bridges) bridges.push_back(chord_json(c));
    jp["bridges"] = std::move(bridges);
    parts.push_back(std::move(jp));
  }
  j["parts"] = std::move(parts);
  return j;
}

nlohmann::json obstruction_report_to_json(const ObstructionReport& r) {
  nlohmann::json j;
  j["verdict"] = r.verdict == Obstruction::Obstructed ? "OBSTRUCTED" : "NO_OBSTRUCTION";
  auto support = nlohmann::json::array();
  for (const auto& c : r.support.chords) support.push_back(chord_json(c));
  j["support"] = std::move(support);
  if (r.violation) j["violation"] = {chord_json(r.violation->first), chord_json(r.violation->second)};
  return j;
}

}  // namespace circuitsplit

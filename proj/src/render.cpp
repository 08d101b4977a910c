#include "circuitsplit/render.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace circuitsplit {

namespace {

struct Point {
  double x = 0;
  double y = 0;
};

constexpr double kScale = 200;
constexpr double kCenter = 240;

Point label_point(int label, int n, double radius = 1.0) {
  const double t = std::numbers::pi / 2 - 2 * std::numbers::pi * (label - 1) / n;
  return {radius * std::cos(t), radius * std::sin(t)};
}

Point to_svg(Point p) { return {kCenter + kScale * p.x, kCenter - kScale * p.y}; }

std::vector<Point> layout(const CircularNetwork& net) {
  std::vector<Point> pos(net.vertex_count());
  for (std::size_t v = 0; v < net.boundary().size(); ++v) {
    const auto& ls = net.labels_of(v);
    Point p;
    for (int l : ls) {
      const Point q = label_point(l, net.n());
      p.x += q.x / static_cast<double>(ls.size());
      p.y += q.y / static_cast<double>(ls.size());
    }
    pos[v] = p;
  }
  std::vector<std::vector<std::size_t>> adj(net.vertex_count());
  for (const auto& e : net.edges()) {
    if (e.is_loop()) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (int iter = 0; iter < 300; ++iter) {
    for (std::size_t v = net.boundary().size(); v < net.vertex_count(); ++v) {
      if (adj[v].empty()) continue;
      Point p;
      for (std::size_t u : adj[v]) {
        p.x += pos[u].x / static_cast<double>(adj[v].size());
        p.y += pos[u].y / static_cast<double>(adj[v].size());
      }
      pos[v] = p;
    }
  }
  return pos;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << x;
  return os.str();
}

std::string svg_header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n"
         "<circle cx=\"240\" cy=\"240\" r=\"200\" fill=\"none\" stroke=\"#888\"/>\n";
}

void label_text(std::ostringstream& os, int l, int n) {
  const Point p = to_svg(label_point(l, n, 1.1));
  os << "<text x=\"" << fmt(p.x) << "\" y=\"" << fmt(p.y) << "\" font-size=\"14\" text-anchor=\"middle\">" << l
     << "</text>\n";
}

}  // namespace

std::string network_to_dot(const CircularNetwork& net) {
  const auto pos = layout(net);
  std::ostringstream os;
  os << "graph network {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < net.vertex_count(); ++v) {
    std::string label = net.vertex_id(v);
    if (net.is_boundary(v)) {
      label.clear();
      for (int l : net.labels_of(v)) label += (label.empty() ? "" : ",") + std::to_string(l);
    }
    os << "  v" << v << " [label=\"" << label << "\", pos=\"" << fmt(pos[v].x * 3) << "," << fmt(pos[v].y * 3)
       << "!\"" << (net.is_boundary(v) ? ", style=filled, fillcolor=\"#dddddd\"" : "") << "];\n";
  }
  for (const auto& e : net.edges()) {
    os << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.conductance.to_string() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string strands_to_dot(const CircularNetwork& net, const StrandDiagram& strands) {
  std::ostringstream os;
  os << "graph strands {\n  node [shape=point];\n";
  for (int s = 1; s <= 2 * net.n(); ++s) os << "  s" << s << " [shape=plaintext, label=\"" << s << "\"];\n";
  for (std::size_t e = 0; e < net.edges().size(); ++e) os << "  m" << e << ";\n";
  int k = 0;
  for (const auto& st : strands.strands) {
    std::vector<std::string> chain;
    if (st.from) chain.push_back("s" + std::to_string(st.from));
    for (std::size_t e : st.edges) chain.push_back("m" + std::to_string(e));
    if (st.to) chain.push_back("s" + std::to_string(st.to));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      os << "  " << chain[i] << " -- " << chain[i + 1] << " [color=\"/set19/" << (k % 9) + 1 << "\"];\n";
    }
    ++k;
  }
  os << "}\n";
  return os.str();
}

std::string network_to_svg(const CircularNetwork& net, const StrandDiagram* strands) {
  const auto pos = layout(net);
  std::ostringstream os;
  os << svg_header();
  for (const auto& e : net.edges()) {
    const Point a = to_svg(pos[e.u]);
    const Point b = to_svg(pos[e.v]);
    if (e.is_loop()) {
      os << "<circle cx=\"" << fmt(a.x) << "\" cy=\"" << fmt(a.y + 12) << "\" r=\"12\" fill=\"none\" stroke=\"black\"/>\n";
      continue;
    }
    os << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y)
       << "\" stroke=\"black\"/>\n";
  }
  for (std::size_t v = 0; v < net.vertex_count(); ++v) {
    const Point p = to_svg(pos[v]);
    os << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"5\" fill=\""
       << (net.is_boundary(v) ? "black" : "white") << "\" stroke=\"black\"/>\n";
  }
  for (int l = 1; l <= net.n(); ++l) label_text(os, l, net.n());
  if (strands) {
    // Stubs 2i-1 and 2i sit a quarter step either side of label i.
    auto stub_point = [&](int s) {
      const double offset = (s - 1) / 2 + (s % 2 == 1 ? -0.25 : 0.25);
      const double t = std::numbers::pi / 2 - 2 * std::numbers::pi * offset / net.n();
      return to_svg({std::cos(t), std::sin(t)});
    };
    for (const auto& st : strands->strands) {
      std::vector<Point> pts;
      if (st.from) pts.push_back(stub_point(st.from));
      for (std::size_t e : st.edges) {
        const auto& edge = net.edges()[e];
        pts.push_back(to_svg({(pos[edge.u].x + pos[edge.v].x) / 2, (pos[edge.u].y + pos[edge.v].y) / 2}));
      }
      if (st.to) pts.push_back(stub_point(st.to));
      os << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-dasharray=\"4 2\" points=\"";
      for (const auto& p : pts) os << fmt(p.x) << "," << fmt(p.y) << " ";
      os << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string split_system_to_svg(const CompactifiedSplitSystem& sys) {
  std::ostringstream os;
  os << svg_header();
  for (const auto& part : sys.parts()) {
    const auto& order = part.order();
    os << "<polygon fill=\"none\" stroke=\"#4a6fa5\" points=\"";
    for (int l : order) {
      const Point p = to_svg(label_point(l, sys.n()));
      os << fmt(p.x) << "," << fmt(p.y) << " ";
    }
    os << "\"/>\n";
    const auto chords = split_chords(part);
    for (std::size_t i = 0; i < chords.size(); ++i) {
      const Point a = to_svg(label_point(chords[i].first, sys.n()));
      const Point b = to_svg(label_point(chords[i].second, sys.n()));
      os << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y)
         << "\" stroke=\"black\"><title>" << part.splits()[i].weight.to_string() << "</title></line>\n";
    }
  }
  for (int l = 1; l <= sys.n(); ++l) label_text(os, l, sys.n());
  os << "</svg>\n";
  return os.str();
}

std::string tiling_to_svg(int n, const PlabicTiling& tiling) {
  std::ostringstream os;
  os << svg_header();
  for (const auto& part : tiling.parts) {
    for (const auto& r : part.regions) {
      os << "<polygon fill=\"" << (r.shaded ? "#bbbbbb" : "white") << "\" stroke=\"black\" points=\"";
      for (int l : r.vertices) {
        const Point p = to_svg(label_point(l, n));
        os << fmt(p.x) << "," << fmt(p.y) << " ";
      }
      os << "\"/>\n";
    }
    for (const auto& c : part.chords) {
      const Point a = to_svg(label_point(c.first, n));
      const Point b = to_svg(label_point(c.second, n));
      os << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y)
         << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }
  }
  for (int l = 1; l <= n; ++l) label_text(os, l, n);
  os << "</svg>\n";
  return os.str();
}

}  // namespace circuitsplit

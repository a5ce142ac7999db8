#include "smw/workbench/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace smw {

namespace {

std::string label_of(std::span<const Diagonal> ds) {
  std::string out;
  for (const auto& d : ds) {
    if (!out.empty()) out += ' ';
    out += to_string(d);
  }
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string dot_id(Diagonal d) {
  return "d_" + std::to_string(d.lo) + "_" + std::to_string(d.hi);
}

std::string dot_id(const SimpleMindedSystem& s) {
  std::vector<Diagonal> sorted = s.simples;
  std::sort(sorted.begin(), sorted.end());
  std::string key;
  for (const auto& d : sorted) key += std::to_string(d.lo) + "," + std::to_string(d.hi) + ";";
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("sms_") + buf;
}

DotGraph dot_graph(const ArQuiver& q) {
  DotGraph g;
  g.name = "ar_quiver";
  for (const auto& v : q.vertices) g.nodes.push_back({dot_id(v), to_string(v)});
  for (const auto& [a, b] : q.arrows) g.edges.push_back({dot_id(a), dot_id(b), ""});
  return g;
}

DotGraph dot_graph(const TiltingGraph& tg) {
  DotGraph g;
  g.name = "tilting_graph";
  for (const auto& n : tg.nodes) g.nodes.push_back({dot_id(n), label_of(n.simples)});
  for (const auto& e : tg.edges) {
    g.edges.push_back({dot_id(tg.nodes[e.source]), dot_id(tg.nodes[e.target]),
                       std::string(e.direction == TiltDirection::left ? "L " : "R ") +
                           to_string(e.pivot)});
  }
  return g;
}

std::string export_dot(const DotGraph& g) {
  std::ostringstream out;
  out << "digraph " << g.name << " {\n";
  for (const auto& n : g.nodes) out << "  " << n.id << " [label=\"" << escape(n.label) << "\"];\n";
  for (const auto& e : g.edges) {
    out << "  " << e.from << " -> " << e.to;
    if (!e.label.empty()) out << " [label=\"" << escape(e.label) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

PolygonPicture picture_of(const SimpleMindedSystem& s) {
  return PolygonPicture{s.params, "simple minded system", s.simples, {}};
}

PolygonPicture picture_of(const ClosureResult& closure) {
  PolygonPicture pic{closure.params, "extension closure", closure.seed, {}};
  for (const auto& m : closure.members) {
    if (!std::binary_search(closure.seed.begin(), closure.seed.end(), m)) pic.dashed.push_back(m);
  }
  return pic;
}

PolygonPicture picture_of(const ExtTriangle& t, const CategoryParams& p) {
  return PolygonPicture{p, "extension triangle", {t.through, t.target}, t.middle};
}

std::string export_svg_polygon(const PolygonPicture& pic) {
  const int n = pic.params.polygon_size;
  constexpr double size = 400.0;
  constexpr double centre = size / 2;
  constexpr double radius = 150.0;
  constexpr double label_radius = 172.0;
  auto point = [&](int k, double r) {
    const double angle = (90.0 - k * 360.0 / n) * std::numbers::pi / 180.0;
    return std::pair{centre + r * std::cos(angle), centre - r * std::sin(angle)};
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
         "viewBox=\"0 0 400 400\">\n";
  out << "  <title>" << xml_escape(pic.title) << " (e=" << pic.params.rank
      << ", w=" << pic.params.weight << ")</title>\n";
  out << "  <polygon class=\"boundary\" fill=\"none\" stroke=\"#999\" points=\"";
  for (int k = 0; k < n; ++k) {
    const auto [x, y] = point(k, radius);
    out << (k ? " " : "") << fixed(x) << "," << fixed(y);
  }
  out << "\"/>\n";
  auto chord = [&](Diagonal d, bool dashed) {
    const auto [x1, y1] = point(d.lo, radius);
    const auto [x2, y2] = point(d.hi, radius);
    out << "  <line class=\"" << (dashed ? "dashed" : "solid") << "\" data-diagonal=\"" << d.lo
        << "-" << d.hi << "\" x1=\"" << fixed(x1) << "\" y1=\"" << fixed(y1) << "\" x2=\""
        << fixed(x2) << "\" y2=\"" << fixed(y2) << "\" stroke=\""
        << (dashed ? "#2a7f2a\" stroke-dasharray=\"6,4" : "#c02020") << "\" stroke-width=\"2\"/>\n";
  };
  std::vector<Diagonal> solid = pic.solid;
  std::vector<Diagonal> dashed = pic.dashed;
  std::sort(solid.begin(), solid.end());
  std::sort(dashed.begin(), dashed.end());
  for (const auto& d : solid) chord(d, false);
  for (const auto& d : dashed) chord(d, true);
  for (int k = 0; k < n; ++k) {
    const auto [x, y] = point(k, radius);
    const auto [lx, ly] = point(k, label_radius);
    out << "  <circle class=\"vertex\" cx=\"" << fixed(x) << "\" cy=\"" << fixed(y)
        << "\" r=\"3\"/>\n";
    out << "  <text class=\"label\" x=\"" << fixed(lx) << "\" y=\"" << fixed(ly)
        << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << k << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace smw

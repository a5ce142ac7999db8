#pragma once

#include <string>
#include <vector>

#include "smw/ar_quiver.hpp"
#include "smw/hom_ext.hpp"
#include "smw/sms.hpp"
#include "smw/tilting.hpp"

namespace smw {

/// "d_lo_hi"
std::string dot_id(Diagonal d);
/// "sms_" + 16 hex digits of a 64-bit FNV-1a hash of the sorted simples.
std::string dot_id(const SimpleMindedSystem& s);

struct DotGraph {
  struct Node {
    std::string id;
    std::string label;
  };
  struct Edge {
    std::string from;
    std::string to;
    std::string label;  // omitted when empty
  };
  std::string name = "G";
  std::vector<Node> nodes;
  std::vector<Edge> edges;
};

DotGraph dot_graph(const ArQuiver& q);
DotGraph dot_graph(const TiltingGraph& g);
/// One node line per node, one edge line per edge, in the given order.
std::string export_dot(const DotGraph& g);

/// Chords drawn on the N-gon, vertex k at angle 90 - k * 360 / N degrees.
struct PolygonPicture {
  CategoryParams params;
  std::string title;
  std::vector<Diagonal> solid;
  std::vector<Diagonal> dashed;
};

PolygonPicture picture_of(const SimpleMindedSystem& s);
/// Seed solid, the other closure members dashed.
PolygonPicture picture_of(const ClosureResult& closure);
/// Ends of the triangle solid, middle term dashed.
PolygonPicture picture_of(const ExtTriangle& t, const CategoryParams& p);

std::string export_svg_polygon(const PolygonPicture& picture);

}  // namespace smw

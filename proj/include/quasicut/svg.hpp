#pragma once

#include "quasicut/polyhedra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace quasicut {

/** Optional drawing data beyond the polyhedron: a hyperplane and its slice. */
struct RenderOverlay {
  FieldVec y;
  FieldElement epsilon;
  std::vector<FieldVec> slice;  // points of the hyperplane piece inside the set
};

namespace detail {

inline double render_value(const FieldElement& e) {
  return static_cast<double>(e.approximate(40).midpoint());
}

inline std::string render_num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.13f", v);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos) {
    // canonical zero, drop a negative sign left over from rounding
    if (!s.empty() && s[0] == '-') s.erase(0, 1);
  }
  return s;
}

struct RenderPoint {
  double x = 0, y = 0;
};

// Boundary order for a simple polygon: follow shared facets vertex to vertex.
inline std::vector<std::size_t> polygon_order(const PolyhedronAnalysis& an) {
  std::size_t m = an.vertices.size();
  if (m < 3) return {};
  for (const auto& v : an.vertices)
    if (v.active.size() != 2) return {};
  std::vector<std::size_t> order{0};
  std::size_t cur = 0;
  std::size_t via = an.vertices[0].active[0];
  while (order.size() < m) {
    std::size_t next = m;
    for (std::size_t w = 0; w < m; ++w) {
      if (w == cur) continue;
      const auto& act = an.vertices[w].active;
      if (std::find(act.begin(), act.end(), via) != act.end()) { next = w; break; }
    }
    if (next == m) return {};
    const auto& act = an.vertices[next].active;
    via = act[0] == via ? act[1] : act[0];
    order.push_back(next);
    cur = next;
  }
  // closing edge must exist: the last vertex shares its remaining facet with vertex 0
  const auto& first = an.vertices[0].active;
  if (std::find(first.begin(), first.end(), via) == first.end()) return {};
  return order;
}

}  // namespace detail

/**
 * Draw a 2-dimensional analysis as SVG: the polygon or its edges and rays, the
 * vertices, and optionally a cut hyperplane with the highlighted slice.
 * Coordinates come from 40-bit approximations; the y axis points up.
 */
inline std::string render_svg(const PolyhedronAnalysis& an,
                              const std::optional<RenderOverlay>& overlay = std::nullopt) {
  if (an.polyhedron.n != 2)
    throw GeometryError("rendering needs a 2-dimensional polyhedron");

  std::vector<detail::RenderPoint> pts;
  for (const auto& v : an.vertices)
    pts.push_back({detail::render_value(v.point[0]), detail::render_value(v.point[1])});
  std::vector<detail::RenderPoint> rays;
  for (const auto& r : an.recession)
    rays.push_back({detail::render_value(r[0]), detail::render_value(r[1])});

  double minx = -1, maxx = 1, miny = -1, maxy = 1;
  if (!pts.empty()) {
    minx = maxx = pts[0].x;
    miny = maxy = pts[0].y;
    for (const auto& p : pts) {
      minx = std::min(minx, p.x); maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y); maxy = std::max(maxy, p.y);
    }
  }
  if (overlay)
    for (const auto& s : overlay->slice) {
      double sx = detail::render_value(s[0]), sy = detail::render_value(s[1]);
      minx = std::min(minx, sx); maxx = std::max(maxx, sx);
      miny = std::min(miny, sy); maxy = std::max(maxy, sy);
    }
  double span = std::max(maxx - minx, maxy - miny);
  if (span <= 0) span = 2;
  double ray_len = 0.6 * span;
  for (const auto& v : pts)
    for (const auto& r : rays) {
      minx = std::min(minx, v.x + ray_len * r.x); maxx = std::max(maxx, v.x + ray_len * r.x);
      miny = std::min(miny, v.y + ray_len * r.y); maxy = std::max(maxy, v.y + ray_len * r.y);
    }
  double margin = 0.1 * std::max(maxx - minx, maxy - miny);
  if (margin <= 0) margin = 0.5;
  minx -= margin; maxx += margin; miny -= margin; maxy += margin;

  double w = maxx - minx, h = maxy - miny;
  double sw = 0.008 * std::max(w, h);
  auto X = [&](double x) { return detail::render_num(x); };
  auto Y = [&](double y) { return detail::render_num(-y); };  // flip: y up

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << X(minx) << " "
     << Y(maxy) << " " << detail::render_num(w) << " " << detail::render_num(h)
     << "\" width=\"640\" height=\"" << detail::render_num(640 * h / w) << "\">\n";

  auto order = detail::polygon_order(an);
  if (!order.empty() && an.polytope) {
    os << "  <polygon points=\"";
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i) os << " ";
      os << X(pts[order[i]].x) << "," << Y(pts[order[i]].y);
    }
    os << "\" fill=\"#cfe3ff\" stroke=\"#1f2937\" stroke-width=\""
       << detail::render_num(sw) << "\"/>\n";
  } else {
    // edges facet by facet: two active vertices make a segment, one plus a
    // matching ray makes a stub
    for (std::size_t j = 0; j < an.polyhedron.facets.size(); ++j) {
      std::vector<std::size_t> on;
      for (std::size_t v = 0; v < an.vertices.size(); ++v) {
        const auto& act = an.vertices[v].active;
        if (std::find(act.begin(), act.end(), j) != act.end()) on.push_back(v);
      }
      if (on.size() >= 2) {
        os << "  <line x1=\"" << X(pts[on[0]].x) << "\" y1=\"" << Y(pts[on[0]].y)
           << "\" x2=\"" << X(pts[on[1]].x) << "\" y2=\"" << Y(pts[on[1]].y)
           << "\" stroke=\"#1f2937\" stroke-width=\"" << detail::render_num(sw)
           << "\"/>\n";
      } else if (on.size() == 1) {
        for (std::size_t r = 0; r < an.recession.size(); ++r) {
          if (!dot(an.recession[r], an.polyhedron.facets[j].normal).is_zero()) continue;
          os << "  <line x1=\"" << X(pts[on[0]].x) << "\" y1=\"" << Y(pts[on[0]].y)
             << "\" x2=\"" << X(pts[on[0]].x + ray_len * rays[r].x) << "\" y2=\""
             << Y(pts[on[0]].y + ray_len * rays[r].y)
             << "\" stroke=\"#1f2937\" stroke-width=\"" << detail::render_num(sw)
             << "\"/>\n";
        }
      }
    }
  }

  if (overlay) {
    double yx = detail::render_value(overlay->y[0]);
    double yy = detail::render_value(overlay->y[1]);
    double eps = detail::render_value(overlay->epsilon);
    double nn = yx * yx + yy * yy;
    if (nn > 0) {
      double px = eps * yx / nn, py = eps * yy / nn;  // a point of the hyperplane
      double dx = -yy, dy = yx;                       // its direction
      double dl = std::sqrt(nn);
      double t = (std::max(maxx - minx, maxy - miny)) / dl;
      os << "  <line x1=\"" << X(px - t * dx) << "\" y1=\"" << Y(py - t * dy)
         << "\" x2=\"" << X(px + t * dx) << "\" y2=\"" << Y(py + t * dy)
         << "\" stroke=\"#d97706\" stroke-width=\"" << detail::render_num(0.75 * sw)
         << "\" stroke-dasharray=\"" << detail::render_num(3 * sw) << " "
         << detail::render_num(2 * sw) << "\"/>\n";
    }
    if (overlay->slice.size() >= 2) {
      os << "  <line x1=\"" << X(detail::render_value(overlay->slice[0][0]))
         << "\" y1=\"" << Y(detail::render_value(overlay->slice[0][1])) << "\" x2=\""
         << X(detail::render_value(overlay->slice[1][0])) << "\" y2=\""
         << Y(detail::render_value(overlay->slice[1][1]))
         << "\" stroke=\"#b91c1c\" stroke-width=\"" << detail::render_num(1.5 * sw)
         << "\"/>\n";
    }
  }

  for (const auto& p : pts)
    os << "  <circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\""
       << detail::render_num(1.6 * sw) << "\" fill=\"#111827\"/>\n";

  os << "</svg>\n";
  return os.str();
}

}  // namespace quasicut

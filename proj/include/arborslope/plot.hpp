#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "arborslope/diagram.hpp"
#include "arborslope/edgepath.hpp"
#include "arborslope/slopecalc.hpp"

namespace arborslope {

struct Segment {
  DiagramPoint from;
  DiagramPoint to;
  int system = 0;
  int leaf = 0;
};

/// Straight pieces of every edgepath, in system then leaf order. A constant
/// edgepath is drawn from its vertex to its point.
inline std::vector<Segment> segments(const std::vector<CandidateSystem>& systems) {
  std::vector<Segment> out;
  for (std::size_t s = 0; s < systems.size(); ++s) {
    const auto& sys = systems[s];
    for (std::size_t i = 0; i < sys.assignment.size(); ++i) {
      const Edgepath& e = sys.assignment[i];
      const int si = static_cast<int>(s), li = static_cast<int>(i);
      if (e.is_constant()) {
        out.push_back({vertex_uv(e.start), uv_coords(e.point), si, li});
        continue;
      }
      for (std::size_t k = 1; k < e.vertices.size(); ++k) {
        const DiagramPoint to = k + 1 == e.vertices.size() ? endpoint_point(e) : vertex_uv(e.vertices[k]);
        out.push_back({vertex_uv(e.vertices[k - 1]), to, si, li});
      }
    }
  }
  return out;
}

inline std::string render_tsv(const std::vector<CandidateSystem>& systems) {
  std::ostringstream os;
  os << "# u0\tv0\tu1\tv1\tsystem\tleaf\n";
  for (const auto& s : segments(systems))
    os << s.from.u << '\t' << s.from.v << '\t' << s.to.u << '\t' << s.to.v << '\t' << s.system << '\t' << s.leaf
       << '\n';
  return os.str();
}

namespace detail {

// Pixel positions are rounded exact values; nothing here goes through floating point.
struct Canvas {
  std::int64_t width = 640, margin = 40, unit = 40;
  std::int64_t vmin = -1, vmax = 1;

  std::int64_t x(Fraction u) const { return margin + (u * Fraction(width)).floor(); }
  std::int64_t y(Fraction v) const { return margin + ((Fraction(vmax) - v) * Fraction(unit)).floor(); }
  std::int64_t height() const { return 2 * margin + (vmax - vmin) * unit; }
};

inline constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                           "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace detail

/// The strip 0 <= u <= 1 of the diagram with its vertices up to a
/// denominator bound and the systems' edgepaths as polylines, one colour per
/// leaf.
inline std::string render_svg(const std::vector<CandidateSystem>& systems, const std::string& title) {
  const auto segs = segments(systems);
  std::int64_t den_bound = 2;
  detail::Canvas cv;
  for (const auto& sys : systems)
    for (const auto& e : sys.assignment) den_bound = std::max(den_bound, std::min<std::int64_t>(e.start.den(), 8));
  for (const auto& s : segs) {
    for (const auto& p : {s.from, s.to}) {
      cv.vmin = std::min(cv.vmin, p.v.floor() - 1);
      cv.vmax = std::max(cv.vmax, -((-p.v).floor()) + 1);
    }
  }
  cv.unit = std::clamp<std::int64_t>(720 / (cv.vmax - cv.vmin), 4, 80);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << cv.width + 2 * cv.margin
     << "\" height=\"" << cv.height() << "\">\n"
     << "<title>" << title << "</title>\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<g stroke=\"#cccccc\" stroke-width=\"1\" fill=\"none\">\n";
  for (std::int64_t q = 2; q <= den_bound; ++q) {
    for (std::int64_t p = cv.vmin * q; p <= cv.vmax * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Fraction x(p, q);
      for (Fraction w : farey_parents(x)) {
        if (w < Fraction(cv.vmin) || w > Fraction(cv.vmax)) continue;
        const auto a = vertex_uv(x), b = vertex_uv(w);
        os << "<line x1=\"" << cv.x(a.u) << "\" y1=\"" << cv.y(a.v) << "\" x2=\"" << cv.x(b.u) << "\" y2=\""
           << cv.y(b.v) << "\"/>\n";
      }
    }
  }
  os << "<line x1=\"" << cv.x(0) << "\" y1=\"" << cv.y(Fraction(cv.vmax)) << "\" x2=\"" << cv.x(0) << "\" y2=\""
     << cv.y(Fraction(cv.vmin)) << "\"/>\n"
     << "<line x1=\"" << cv.x(1) << "\" y1=\"" << cv.y(Fraction(cv.vmax)) << "\" x2=\"" << cv.x(1) << "\" y2=\""
     << cv.y(Fraction(cv.vmin)) << "\"/>\n"
     << "</g>\n<g fill=\"#555555\">\n";
  for (std::int64_t q = 1; q <= den_bound; ++q) {
    for (std::int64_t p = cv.vmin * q; p <= cv.vmax * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto a = vertex_uv(Fraction(p, q));
      os << "<circle cx=\"" << cv.x(a.u) << "\" cy=\"" << cv.y(a.v) << "\" r=\"2\"/>\n";
    }
  }
  os << "</g>\n";
  // One polyline per (system, leaf): consecutive segments share endpoints.
  std::size_t i = 0;
  while (i < segs.size()) {
    std::size_t j = i;
    os << "<polyline fill=\"none\" stroke-width=\"2\" stroke=\"" << detail::kPalette[segs[i].leaf % 8]
       << "\" data-system=\"" << segs[i].system << "\" data-leaf=\"" << segs[i].leaf << "\" data-uv=\"";
    std::ostringstream pts;
    pts << cv.x(segs[i].from.u) << ',' << cv.y(segs[i].from.v);
    os << segs[i].from.u << ',' << segs[i].from.v;
    while (j < segs.size() && segs[j].system == segs[i].system && segs[j].leaf == segs[i].leaf) {
      pts << ' ' << cv.x(segs[j].to.u) << ',' << cv.y(segs[j].to.v);
      os << ' ' << segs[j].to.u << ',' << segs[j].to.v;
      ++j;
    }
    os << "\" points=\"" << pts.str() << "\"/>\n";
    i = j;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace arborslope

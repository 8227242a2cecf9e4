#include "alcove/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

namespace alcove {

namespace {

struct Point {
  double x, y;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string fill_for(const Dim& dim, double max_dim) {
  if (!dim) return "#f2f2f2";
  double t = max_dim > 0 ? std::clamp(dim->num() / static_cast<double>(dim->den()) / max_dim, 0.0, 1.0) : 0.0;
  int r = static_cast<int>(std::lround(255 - 180 * t));
  int g = static_cast<int>(std::lround(235 - 120 * t));
  int bl = static_cast<int>(std::lround(160 + 60 * t));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, bl);
  return buf;
}

}  // namespace

std::string render_alcoves_svg(const Workspace& ws, const SigmaClass& b, const SvgOptions& options) {
  const RootDatum& d = ws.datum();
  const auto& a = ws.affine();
  if (d.rank() != 2 || d.semisimple_rank() != 2 || !d.is_connected())
    throw InputError("svg output needs a rank-2 datum with connected Dynkin diagram");

  // Orthonormal coordinates for the W-invariant form Σ_{α>0} <x,α><y,α>.
  double g00 = 0, g01 = 0, g11 = 0;
  for (std::size_t k = 0; k < d.num_positive(); ++k) {
    const IntVec& r = d.root(k);
    g00 += static_cast<double>(r[0] * r[0]);
    g01 += static_cast<double>(r[0] * r[1]);
    g11 += static_cast<double>(r[1] * r[1]);
  }
  const double l00 = std::sqrt(g00), l10 = g01 / l00, l11 = std::sqrt(g11 - l10 * l10);
  auto embed = [&](const RatVec& v) {
    double x0 = static_cast<double>(v[0].num()) / static_cast<double>(v[0].den());
    double x1 = static_cast<double>(v[1].num()) / static_cast<double>(v[1].den());
    return Point{options.scale * (l00 * x0 + l10 * x1), -options.scale * (l11 * x1)};
  };

  const IntVec& theta = d.root_coefficients(d.highest_roots().front());
  std::array<RatVec, 3> base{RatVec(2, Rational(0)), scale(d.fundamental_coweights()[0], Rational(1, theta[0])),
                             scale(d.fundamental_coweights()[1], Rational(1, theta[1]))};

  struct Cell {
    std::array<Point, 3> corners;
    Point center;
    Dim dim;
    bool shrunken;
    std::string key;
  };
  std::vector<Cell> cells;
  double max_dim = 0, minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (std::size_t len = 0; len <= options.max_len; ++len)
    for (const auto& w : *a.elements_of_length(b.invariant.kappa, len)) {
      Cell c;
      for (std::size_t i = 0; i < 3; ++i) {
        RatVec img = to_rational(w.translation) + d.act(w.finite, base[i]);
        c.corners[i] = embed(img);
        minx = std::min(minx, c.corners[i].x);
        maxx = std::max(maxx, c.corners[i].x);
        miny = std::min(miny, c.corners[i].y);
        maxy = std::max(maxy, c.corners[i].y);
      }
      c.center = embed(a.barycenter(w));
      c.dim = ws.adlv().dim_adlv(w, b).dim;
      c.shrunken = a.is_shrunken(w);
      c.key = a.encode(w);
      if (c.dim) max_dim = std::max(max_dim, c.dim->num() / static_cast<double>(c.dim->den()));
      cells.push_back(std::move(c));
    }

  const double pad = options.scale * 0.5;
  const double width = maxx - minx + 2 * pad, height = maxy - miny + 2 * pad + 24;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(minx - pad) + " " + fmt(miny - pad - 24) + " " +
         fmt(width) + " " + fmt(height) + "\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) + "\">\n";
  out +=
      "<defs><pattern id=\"shrunken\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
      "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#555\" "
      "stroke-width=\"0.8\" stroke-opacity=\"0.35\"/></pattern></defs>\n";
  out += "<text x=\"" + fmt(minx - pad + 4) + "\" y=\"" + fmt(miny - pad - 8) +
         "\" font-family=\"sans-serif\" font-size=\"12\">" + d.name() + "  b: kappa=" + format_vec(b.invariant.kappa) +
         " nu=" + format_vec(b.invariant.newton) + "  length <= " + std::to_string(options.max_len) + "</text>\n";
  for (const auto& c : cells) {
    std::string pts;
    for (const auto& p : c.corners) pts += fmt(p.x) + "," + fmt(p.y) + " ";
    pts.pop_back();
    out += "<polygon points=\"" + pts + "\" fill=\"" + fill_for(c.dim, max_dim) +
           "\" stroke=\"#888\" stroke-width=\"0.6\"><title>" + c.key + " dim " + dim_str(c.dim) + "</title></polygon>\n";
    if (c.shrunken) out += "<polygon points=\"" + pts + "\" fill=\"url(#shrunken)\" stroke=\"none\"/>\n";
    if (options.labels && c.dim)
      out += "<text x=\"" + fmt(c.center.x) + "\" y=\"" + fmt(c.center.y + 3) +
             "\" font-family=\"sans-serif\" font-size=\"" + fmt(options.scale / 6) + "\" text-anchor=\"middle\">" +
             c.dim->str() + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace alcove

#include "latlab/geom/affine.hpp"

namespace latlab::geom {

AffineLine AffineLine::of(Rat a, Rat b, Rat c) {
  if (a == 0 && b == 0) throw GeometryError("line needs a nonzero normal");
  Rat lead = (a != 0) ? a : b;
  return AffineLine{a / lead, b / lead, c / lead};
}

HomogeneousPoint HomogeneousPoint::of(Rat u, Rat v, Rat w) {
  if (u == 0 && v == 0 && w == 0)
    throw GeometryError("homogeneous point needs a nonzero vector");
  Rat lead = (w != 0) ? w : (v != 0) ? v : u;
  return HomogeneousPoint{u / lead, v / lead, w / lead};
}

HomogeneousPoint tau(const AffinePoint& p) { return HomogeneousPoint::of(p.x, p.y, 1); }

AffinePoint tau_inv(const HomogeneousPoint& h) {
  if (h.at_infinity())
    throw GeometryError("tau_inv undefined: point lies in the hyperplane at infinity");
  return AffinePoint{h.u / h.w, h.v / h.w};
}

HomogeneousLine HomogeneousLine::of(Rat a, Rat b, Rat c) {
  if (a == 0 && b == 0 && c == 0)
    throw GeometryError("homogeneous line needs a nonzero coefficient vector");
  Rat lead = (a != 0) ? a : (b != 0) ? b : c;
  return HomogeneousLine{a / lead, b / lead, c / lead};
}

HomogeneousLine tau_line(const AffineLine& l) { return HomogeneousLine::of(l.a, l.b, -l.c); }

AffineLine line_through(const AffinePoint& p, const AffinePoint& q) {
  if (p == q) throw GeometryError("line_through needs distinct points");
  Rat dx = q.x - p.x, dy = q.y - p.y;
  // normal (dy, -dx)
  return AffineLine::of(dy, -dx, dy * p.x - dx * p.y);
}

AffinePoint intersect(const AffineLine& l1, const AffineLine& l2) {
  Rat det = l1.a * l2.b - l1.b * l2.a;
  if (det == 0) throw GeometryError("intersect needs non-parallel lines");
  return AffinePoint{(l1.c * l2.b - l1.b * l2.c) / det, (l1.a * l2.c - l1.c * l2.a) / det};
}

AffineLine parallel_through(const AffineLine& l, const AffinePoint& p) {
  return AffineLine::of(l.a, l.b, l.a * p.x + l.b * p.y);
}

bool collinear(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x) == 0;
}

std::string point_str(const AffinePoint& p) { return rat_str(p.x) + "," + rat_str(p.y); }

AffinePoint parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("point needs the form x,y with rational coordinates");
  return AffinePoint{parse_rat(text.substr(0, comma)), parse_rat(text.substr(comma + 1))};
}

}  // namespace latlab::geom

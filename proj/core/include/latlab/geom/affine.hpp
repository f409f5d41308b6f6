#pragma once

#include <string>

#include "latlab/rational.hpp"

namespace latlab::geom {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AffinePoint {
  Rat x, y;
  bool operator==(const AffinePoint&) const = default;
};

// {(x,y) : a*x + b*y = c} with (a,b) != (0,0), normalized so the first
// nonzero coefficient is 1.
struct AffineLine {
  Rat a, b, c;
  bool operator==(const AffineLine&) const = default;

  static AffineLine of(Rat a, Rat b, Rat c);  // normalizes; rejects (0,0)
  bool contains(const AffinePoint& p) const { return a * p.x + b * p.y == c; }
  bool parallel_to(const AffineLine& o) const { return a * o.b - b * o.a == 0; }
};

// 1-dimensional subspace of k^3, canonical: last nonzero coordinate = 1.
struct HomogeneousPoint {
  Rat u, v, w;
  bool operator==(const HomogeneousPoint&) const = default;
  static HomogeneousPoint of(Rat u, Rat v, Rat w);  // normalizes; rejects zero
  bool at_infinity() const { return w == 0; }       // contained in H = k x k x {0}
};

// tau : k^2 -> P, (a,b) -> (a,b,1)k; bijection onto points off H.
HomogeneousPoint tau(const AffinePoint& p);
AffinePoint tau_inv(const HomogeneousPoint& h);  // throws GeometryError on w = 0

// Homogeneous form of a 2-dimensional subspace {a*u + b*v + c*w = 0}; the
// affine line ax + by = c corresponds to coefficients (a, b, -c).
struct HomogeneousLine {
  Rat a, b, c;
  static HomogeneousLine of(Rat a, Rat b, Rat c);
  bool contains(const HomogeneousPoint& p) const { return a * p.u + b * p.v + c * p.w == 0; }
};
HomogeneousLine tau_line(const AffineLine& l);

AffineLine line_through(const AffinePoint& p, const AffinePoint& q);   // p != q
AffinePoint intersect(const AffineLine& l1, const AffineLine& l2);    // not parallel
AffineLine parallel_through(const AffineLine& l, const AffinePoint& p);

bool collinear(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r);

std::string point_str(const AffinePoint& p);
AffinePoint parse_point(const std::string& text);  // "p/q,r/s"

}  // namespace latlab::geom

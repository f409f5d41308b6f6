#include "latlab/geom/constructions.hpp"

namespace latlab::geom {

namespace {

AffineLine base_line(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c) {
  if (a != b) return line_through(a, b);
  if (a != c) return line_through(a, c);
  throw GeometryError("cannot infer the base line: all given points coincide");
}

void note(ConstructionTrace* trace, const std::string& what, const AffinePoint& p) {
  if (trace) trace->steps.push_back(what + " = (" + point_str(p) + ")");
}

}  // namespace

AffinePoint add_construct(const AffinePoint& O, const AffinePoint& A, const AffinePoint& C,
                          const AffinePoint& B, ConstructionTrace* trace) {
  AffineLine ell = base_line(O, A, C);
  if (!ell.contains(A) || !ell.contains(C) || !ell.contains(O))
    throw GeometryError("add_construct: O, A, C must be collinear");
  if (ell.contains(B)) throw GeometryError("add_construct: B must lie off the base line");

  AffineLine ob = line_through(O, B);
  AffineLine l1 = parallel_through(ob, A);
  AffineLine l2 = parallel_through(ell, B);
  AffinePoint D = intersect(l1, l2);
  note(trace, "D (A shifted by the O->B side)", D);
  AffineLine bc = line_through(B, C);
  AffinePoint sum = intersect(parallel_through(bc, D), ell);
  note(trace, "A+C", sum);
  return sum;
}

AffinePoint mul_construct(const AffinePoint& O, const AffinePoint& I, const AffinePoint& A,
                          const AffinePoint& C, const AffinePoint& B,
                          ConstructionTrace* trace) {
  if (I == O) throw GeometryError("mul_construct: unit must differ from origin");
  AffineLine ell = line_through(O, I);
  if (!ell.contains(A) || !ell.contains(C))
    throw GeometryError("mul_construct: A and C must lie on the line through O and I");
  if (ell.contains(B)) throw GeometryError("mul_construct: B must lie off the base line");

  AffineLine ib = line_through(I, B);
  AffineLine ob = line_through(O, B);
  AffinePoint D = intersect(parallel_through(ib, A), ob);
  note(trace, "D (intercept of A on the O->B ray)", D);
  AffineLine bc = line_through(B, C);
  AffinePoint prod = intersect(parallel_through(bc, D), ell);
  note(trace, "A*C", prod);
  return prod;
}

bool segment_between(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r) {
  if (!collinear(p, q, r)) return false;
  return (q.x - p.x) * (q.x - r.x) <= 0 && (q.y - p.y) * (q.y - r.y) <= 0;
}

}  // namespace latlab::geom

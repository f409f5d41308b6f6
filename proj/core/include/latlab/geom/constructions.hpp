#pragma once

#include <string>
#include <vector>

#include "latlab/geom/affine.hpp"

namespace latlab::geom {

// Ruler-only field arithmetic on a line: one point per construction step.
struct ConstructionTrace {
  std::vector<std::string> steps;
};

// A + C on the line through O, A, C (origin O), built from parallels through
// the auxiliary point B off the line:
//   D = parallel(line(O,B)) through A  ∩  parallel(the base line) through B
//   A + C = parallel(line(B,C)) through D  ∩  base line
// Preconditions: O, A, C collinear with at least two of them distinct,
// B off that line. Degenerate intersections surface as GeometryError.
AffinePoint add_construct(const AffinePoint& O, const AffinePoint& A, const AffinePoint& C,
                          const AffinePoint& B, ConstructionTrace* trace = nullptr);

// A * C on the line through O, I, A, C (origin O, unit I), by the double
// intercept construction:
//   D = parallel(line(I,B)) through A  ∩  line(O,B)
//   A * C = parallel(line(B,C)) through D  ∩  base line
// Preconditions: O, I, A, C collinear, I != O, B off the line.
AffinePoint mul_construct(const AffinePoint& O, const AffinePoint& I, const AffinePoint& A,
                          const AffinePoint& C, const AffinePoint& B,
                          ConstructionTrace* trace = nullptr);

// Betweenness on a line: q lies on the closed segment [p, r].
bool segment_between(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r);

}  // namespace latlab::geom

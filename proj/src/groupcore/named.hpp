#pragma once

#include "groupcore/matgroup.hpp"

namespace groupcore {

// Variable names y1..y5 of the quartic model in P^4.
const std::vector<std::string>& burk_vars();
// y1(y1^3+y2^3+y3^3+y4^3+y5^3) + 3 y2 y3 y4 y5.
const exactnum::Poly& burkhardt_quartic_y();

// The 45 singular points of the quartic, in closed form: 27 points
// [-z3*z4*z5 : 1 : z3 : z4 : z5] with zi^3 = 1, and 18 points with y1 = 0,
// two of y2..y5 zero and the remaining pair (1, -z).
std::vector<exactnum::ProjPoint> burk_nodes();

// Projective generator matrices as printed in the source material
// (row-vector action, stored transposed to the column convention).
// Only k = 2 and k = 4 are valid automorphisms; the others are kept as
// reference data for the recovery procedure and tests.
const exactnum::EisenMat& sigma_printed(int k);

// The two clean generators.
inline const exactnum::EisenMat& sigma2() { return sigma_printed(2); }
inline const exactnum::EisenMat& sigma4() { return sigma_printed(4); }

// Parses a row-action matrix (list of rows, entries in Eisen encoding) and
// converts to the column-action convention.
exactnum::EisenMat row_action_matrix(const std::vector<std::vector<std::string>>& rows);

// Projectivity mapping the standard frame to (points; unit).  Throws if the
// points are dependent or the unit is degenerate.
exactnum::EisenMat frame_matrix(const std::vector<exactnum::ProjPoint>& points,
                                const exactnum::ProjPoint& unit);

Group build_s6();

// Automorphism group of the quartic as permutations of its 45 singular
// points.  Generated by the two clean sigma matrices, the monomial
// automorphisms, and automorphisms found by mapping node frames to node
// frames; audited to have order exactly 25920, with every generator checked
// to preserve the quartic by substitution.
MatRep build_psp4f3();

}  // namespace groupcore

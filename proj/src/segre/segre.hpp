#pragma once

#include "exactnum/poly.hpp"
#include "groupcore/group.hpp"

namespace segre {

using exactnum::Poly;
using exactnum::ProjPoint;
using exactnum::ProjSubspace;
using groupcore::Group;
using groupcore::Perm;

// The cubic sum x_i^3 cut by the hyperplane sum x_i = 0 in P^5, with the
// symmetric group permuting coordinates.
const std::vector<std::string>& segre_vars();
const Poly& segre_cubic();   // sum of cubes in 6 variables
const Poly& segre_linear();  // sum of the 6 variables

// The 10 singular points.  A singular point of the intersection must have
// all coordinates squaring to the same value, so the points are exactly the
// balanced sign vectors; each is certified singular via the Jacobian.
std::vector<ProjPoint> segre_nodes();

// The 15 planes contained in the cubic, found by spanning node triples and
// filtering by exact containment; they coincide with the coordinate-pairing
// planes x_a + x_b = x_c + x_d = x_e + x_f = 0.
std::vector<ProjSubspace> segre_planes(const std::vector<ProjPoint>& nodes);

struct SegreGeometry {
    std::vector<ProjPoint> nodes;
    std::vector<ProjSubspace> planes;
    std::vector<std::vector<bool>> node_on_plane;  // [plane][node]
};
SegreGeometry segre_geometry();

// Action of a permutation of the 6 coordinates on nodes / planes, as
// permutations of the canonical index lists.
Perm node_action(const SegreGeometry& geo, const Perm& g);
Perm plane_action(const SegreGeometry& geo, const Perm& g);

// True iff the subspace lies on the cubic (and in the hyperplane).
bool contained_in_cubic(const ProjSubspace& s);

}  // namespace segre

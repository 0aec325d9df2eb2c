#pragma once

#include <unordered_map>

#include "exactnum/poly.hpp"
#include "groupcore/group.hpp"

namespace groupcore {

// Closure of a set of invertible projective matrices over Q(w) under
// multiplication, with the canonical scaling (first nonzero entry 1).
std::vector<exactnum::EisenMat> proj_matrix_closure(const std::vector<exactnum::EisenMat>& gens,
                                                    std::size_t bound);

// Projective order of a matrix: smallest k >= 1 with m^k scalar.
long proj_order(const exactnum::EisenMat& m, long bound = 10000);

// A matrix group presented through its faithful permutation action on a
// stable finite point set.  Element matrices are reconstructed on demand
// from Schreier words over the generators.
class MatRep {
  public:
    // points = orbit closure of the seeds under the generator matrices.
    MatRep(std::vector<exactnum::EisenMat> gen_mats, const std::vector<exactnum::ProjPoint>& seeds,
           std::size_t point_bound = 4096, std::size_t group_bound = 1u << 20);

    const Group& group() const { return group_; }
    const std::vector<exactnum::ProjPoint>& points() const { return points_; }
    int point_index(const exactnum::ProjPoint& p) const;

    // Matrix for a group element, canonical projective scaling.  Cached.
    const exactnum::EisenMat& matrix_of(int elem) const;
    // Element id of a projective matrix; -1 if not in the group.  The
    // candidate found through the point action is certified by comparing
    // matrices, so a -1 answer is exact as long as the action is faithful.
    int element_of(const exactnum::EisenMat& m) const;

    // Permutation of the points induced by a matrix; throws if the matrix
    // does not stabilize the point set.
    Perm induced_perm(const exactnum::EisenMat& m) const;

  private:
    Group group_;
    std::vector<exactnum::ProjPoint> points_;
    std::unordered_map<std::uint64_t, std::vector<int>> point_index_;
    std::vector<exactnum::EisenMat> gen_mats_;  // aligned with group_.generator_ids()
    std::vector<int> parent_, via_;             // Schreier vectors over generator ids
    mutable std::unordered_map<int, exactnum::EisenMat> matrix_cache_;
};

// Substitution of a linear change of coordinates into a polynomial:
// returns f(M y).
exactnum::Poly poly_compose(const exactnum::Poly& f, const exactnum::EisenMat& m);

}  // namespace groupcore

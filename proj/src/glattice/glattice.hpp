#pragma once

#include <functional>
#include <map>
#include <string>

#include "glattice/intmat.hpp"
#include "groupcore/subgroups.hpp"

namespace glattice {

using groupcore::Group;
using groupcore::Perm;

// A free finite-rank Z-module with an action of (a subgroup of) a finite
// group: the action provider must be a homomorphism,
// act(mult(g, h)) = act(g) * act(h).
class GLattice {
  public:
    GLattice() = default;
    GLattice(const Group* ambient, int rank, std::function<IntMat(int)> act,
             std::vector<std::string> labels = {});

    const Group& group() const { return *G_; }
    int rank() const { return rank_; }
    const IntMat& action(int elem) const;  // cached
    const std::vector<std::string>& labels() const { return labels_; }

    // Same module with the transpose-inverse action.
    GLattice dual() const;

    // Checks act is a homomorphism on all generator pairs and act(1) = I.
    void verify_action() const;

  private:
    const Group* G_ = nullptr;
    int rank_ = 0;
    std::function<IntMat(int)> act_;
    std::vector<std::string> labels_;
    mutable std::map<int, IntMat> cache_;
};

// Permutation matrix module: basis permuted by per-element permutations of
// size n.  The provider gives the permutation of basis indices for each
// ambient element; it must compose like the group (apply g, then h).
GLattice permutation_lattice(const Group* ambient, int n, std::function<Perm(int)> basis_perm,
                             std::vector<std::string> labels = {});

struct QuotientInfo {
    int ambient_rank = 0;
    int relation_rank = 0;
    std::vector<Int> torsion;  // nontrivial elementary divisors discarded by saturation
};

// Torsion-free quotient of Z^n by the saturation of the span of `relations`
// (given as rows), with the induced action.  The relation lattice must be
// stable under the action of every group generator (verified).
GLattice quotient_lattice(const Group* ambient, int n, const std::vector<std::vector<Int>>& relations,
                          const std::function<Perm(int)>& basis_perm, QuotientInfo* info = nullptr,
                          std::vector<std::string> labels = {});

// Rank of the sublattice fixed by the subgroup generated by `gens`
// (ambient element ids).
int invariant_rank(const GLattice& L, const std::vector<int>& gens);

// First group cohomology H^1(H, L) for the subgroup generated by `gens`,
// as a list of elementary divisors > 1 (empty means trivial).  Computed from
// cocycle values on the generators, with one linear constraint block per
// independent cycle of the Cayley graph of H.
std::vector<long> h1(const GLattice& L, const std::vector<int>& gens);

}  // namespace glattice

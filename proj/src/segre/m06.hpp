#pragma once

#include "glattice/glattice.hpp"
#include "segre/segre.hpp"

namespace segre {

using glattice::GLattice;
using glattice::QuotientInfo;

// Divisor class lattices of the resolved cubic, presented on the 25
// boundary classes of the six-point moduli space: 15 pair classes d_{ij}
// and 10 triple classes d_S with S identified with its complement.  The
// four-point relations cut the rank to 16; collapsing the 10 triple classes
// (the exceptional divisors over the nodes) leaves the rank-6 class group.
struct SegreModules {
    const groupcore::Group* s6 = nullptr;
    std::vector<std::pair<int, int>> pair_gens;  // generator labels 0..14
    std::vector<std::vector<int>> triple_gens;   // generator labels 15..24 (each contains 0)
    GLattice pic;                                // rank 16
    GLattice cl;                                 // rank 6
    QuotientInfo pic_info;                       // relation rank 9
    QuotientInfo cl_info;

    // Permutation of the 25 generators induced by a group element.
    groupcore::Perm generator_perm(int elem) const;
};

SegreModules segre_modules(const groupcore::Group& s6);

// Named subgroups used in the rank table, as sorted element-id lists.
struct SegreTableGroups {
    std::vector<int> s6_full, a6, s5_std, s5_prime, a5_std, a5_prime, s3wr2, c2s4_std, c2s4_prime;
};
SegreTableGroups segre_table_groups(const groupcore::Group& s6,
                                    const groupcore::SubgroupClasses& sc,
                                    const SegreGeometry& geo);

struct SegreTableRow {
    std::string name;
    int rk_pic = 0;
    int rk_cl = 0;
};
// The nine-column invariant-rank table over (Pic, Cl).
std::vector<SegreTableRow> segre_rank_table(const SegreModules& mods, const SegreTableGroups& tg);

}  // namespace segre

#pragma once

#include <nlohmann/json_fwd.hpp>

#include "glattice/cohomology.hpp"
#include "segre/m06.hpp"

namespace segre {

enum class Verdict { LIN_FIXED_NODE, LIN_IN_S5PRIME, LIN_SPECIAL_C22, NONLINEARIZABLE };
const char* verdict_name(Verdict v);

struct VerdictRow {
    int class_id = 0;
    long order = 0;
    std::string iso_type;
    int rk_pic_inv = 0;
    int rk_cl_inv = 0;
    bool h1_clean = false;
    Verdict verdict = Verdict::NONLINEARIZABLE;
    std::string evidence;
};

struct Classification {
    std::vector<VerdictRow> rows;  // one per nontrivial class
    int nonlinearizable = 0;
    int fixed_node_classes = 0;  // classes whose verdict test (i) holds
    int s5prime_class = -1;      // class id of the transitive S5
    int special_c22_class = -1;  // class id of the exceptional Klein group

    nlohmann::json to_json() const;
};

// Verdicts for all nontrivial subgroup classes: a class is linearizable iff
// it fixes a node, embeds in the nonstandard S5, or is the exceptional
// Klein four-group with three invariant planes and five node orbits of
// length two; everything else is not (stably) linearizable.
Classification classify_segre(const groupcore::SubgroupClasses& sc, const SegreGeometry& geo,
                              const SegreModules& mods, const glattice::CohomologyReport& coh);

struct CrosscheckReport {
    bool linearizable_all_clean = false;
    bool noplane_nonlin_all_obstructed = false;
    bool plane_nonlin_all_tagged = false;
    bool special_c22_clean = false;
    bool s5prime_chain_clean = false;
    std::vector<int> u1_type_classes;  // Klein classes with their own obstruction
    std::vector<int> w1_type_classes;  // clean plane-preserving C2xC4
    std::vector<int> w2_type_classes;  // clean plane-preserving C2^3
    bool ok() const {
        return linearizable_all_clean && noplane_nonlin_all_obstructed && plane_nonlin_all_tagged &&
               special_c22_clean && s5prime_chain_clean;
    }
    nlohmann::json to_json() const;
};

// Cohomology cross-checks of the classification: linearizable classes are
// clean; nonlinearizable classes without an invariant plane carry their own
// obstruction; nonlinearizable classes with an invariant plane contain one
// of the tagged torus-type subgroups (Klein with obstruction, or the clean
// C2xC4 / C2^3 pattern matching the rank-3 torus analysis).
CrosscheckReport segre_h1_crosscheck(const groupcore::SubgroupClasses& sc,
                                     const SegreGeometry& geo, const Classification& cls,
                                     const glattice::CohomologyReport& coh);

// Number of planes left invariant by the subgroup (element-id list).
int invariant_plane_count(const groupcore::Group& s6, const SegreGeometry& geo,
                          const std::vector<int>& sub);
// Sizes of the node orbits of the subgroup, sorted.
std::vector<int> node_orbit_sizes(const groupcore::Group& s6, const SegreGeometry& geo,
                                  const std::vector<int>& sub);

}  // namespace segre

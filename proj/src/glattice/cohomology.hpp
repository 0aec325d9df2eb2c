#pragma once

#include <nlohmann/json_fwd.hpp>

#include "glattice/glattice.hpp"

namespace glattice {

using groupcore::SubgroupClasses;

struct CohomologyRow {
    int class_id = 0;
    long order = 0;
    std::string iso_type;
    int inv_rank = 0;
    std::vector<long> h1;       // computed directly when available
    std::vector<long> h1_dual;
    bool direct_computed = false;
    bool clean = false;  // every subgroup has trivial H^1 for L and its dual
};

struct CohomologyReport {
    std::vector<CohomologyRow> rows;  // one per nontrivial class, in class order
    int clean_count = 0;

    nlohmann::json to_json() const;
};

// Per-class H^1 data for all nontrivial subgroup classes.  With
// reduce_to_p_subgroups set, H^1 is computed directly on classes of
// prime-power order only; a class is clean iff all prime-power classes it
// contains vanish for L and the dual of L (restriction to Sylow subgroups is
// injective, so this is exact).  Direct computations on all classes of order
// <= validate_below cross-check the reduction.
CohomologyReport h1_all_subgroups(const GLattice& L, const SubgroupClasses& sc,
                                  bool reduce_to_p_subgroups, long validate_below = 65);

bool is_prime_power(long n);

}  // namespace glattice

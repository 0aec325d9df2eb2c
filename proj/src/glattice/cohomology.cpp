#include "glattice/cohomology.hpp"

#include <nlohmann/json.hpp>

namespace glattice {

using nlohmann::json;

bool is_prime_power(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; p++) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        return n == 1;
    }
    return true;  // prime
}

json CohomologyReport::to_json() const {
    json rows_json = json::array();
    for (const auto& r : rows) {
        rows_json.push_back({{"class_id", r.class_id},
                             {"order", r.order},
                             {"iso_type", r.iso_type},
                             {"inv_rank", r.inv_rank},
                             {"h1_invariants", r.h1},
                             {"h1_dual_invariants", r.h1_dual},
                             {"direct", r.direct_computed},
                             {"clean", r.clean}});
    }
    return json{{"rows", rows_json}, {"clean_count", clean_count}};
}

CohomologyReport h1_all_subgroups(const GLattice& L, const SubgroupClasses& sc,
                                  bool reduce_to_p_subgroups, long validate_below) {
    CohomologyReport rep;
    GLattice Ld = L.dual();
    int n = sc.num_classes();

    std::vector<std::vector<long>> h1_of(n), h1_dual_of(n);
    std::vector<bool> computed(n, false);

    auto compute = [&](int cid) {
        if (computed[cid]) return;
        const auto& cls = sc.cls(cid);
        h1_of[cid] = h1(L, cls.gens);
        h1_dual_of[cid] = h1(Ld, cls.gens);
        // H^1 is killed by the subgroup order.
        for (long d : h1_of[cid])
            if (cls.order % d != 0) throw std::logic_error("h1_all_subgroups: invariant bound");
        for (long d : h1_dual_of[cid])
            if (cls.order % d != 0) throw std::logic_error("h1_all_subgroups: invariant bound");
        computed[cid] = true;
    };

    for (int cid = 0; cid < n; cid++) {
        const auto& cls = sc.cls(cid);
        if (cls.order == 1) continue;
        if (!reduce_to_p_subgroups || is_prime_power(cls.order) || cls.order <= validate_below)
            compute(cid);
    }

    auto p_clean = [&](int cid) {
        for (int sub : sc.contained_classes(cid)) {
            const auto& scls = sc.cls(sub);
            if (scls.order == 1 || !is_prime_power(scls.order)) continue;
            if (!h1_of[sub].empty() || !h1_dual_of[sub].empty()) return false;
        }
        return true;
    };

    for (int cid = 0; cid < n; cid++) {
        const auto& cls = sc.cls(cid);
        if (cls.order == 1) continue;
        CohomologyRow row;
        row.class_id = cid;
        row.order = cls.order;
        row.iso_type = cls.iso_label;
        row.inv_rank = invariant_rank(L, cls.gens);
        row.clean = p_clean(cid);
        row.direct_computed = computed[cid];
        if (computed[cid]) {
            row.h1 = h1_of[cid];
            row.h1_dual = h1_dual_of[cid];
            // Validation of the Sylow reduction: vanishing on all prime-power
            // subgroup classes forces vanishing of the direct computation.
            if (row.clean && (!row.h1.empty() || !row.h1_dual.empty()))
                throw std::logic_error("h1_all_subgroups: Sylow reduction mismatch");
        }
        if (row.clean) rep.clean_count++;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace glattice

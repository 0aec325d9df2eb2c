#include "segre/classify.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace segre {

using groupcore::Group;
using groupcore::SubgroupClasses;
using nlohmann::json;

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::LIN_FIXED_NODE: return "LIN_FIXED_NODE";
        case Verdict::LIN_IN_S5PRIME: return "LIN_IN_S5PRIME";
        case Verdict::LIN_SPECIAL_C22: return "LIN_SPECIAL_C22";
        case Verdict::NONLINEARIZABLE: return "NONLINEARIZABLE";
    }
    return "?";
}

int invariant_plane_count(const Group& s6, const SegreGeometry& geo, const std::vector<int>& sub) {
    std::vector<groupcore::Perm> actions;
    for (int e : s6.small_generating_set(sub)) actions.push_back(plane_action(geo, s6[e]));
    int count = 0;
    for (std::size_t p = 0; p < geo.planes.size(); p++) {
        bool inv = true;
        for (const auto& a : actions)
            if (a((int)p) != (int)p) { inv = false; break; }
        if (inv) count++;
    }
    return count;
}

std::vector<int> node_orbit_sizes(const Group& s6, const SegreGeometry& geo,
                                  const std::vector<int>& sub) {
    std::vector<groupcore::Perm> actions;
    for (int e : s6.small_generating_set(sub)) actions.push_back(node_action(geo, s6[e]));
    std::vector<bool> seen(geo.nodes.size(), false);
    std::vector<int> sizes;
    for (std::size_t i = 0; i < geo.nodes.size(); i++) {
        if (seen[i]) continue;
        std::vector<int> orb{(int)i};
        seen[i] = true;
        for (std::size_t h = 0; h < orb.size(); h++)
            for (const auto& a : actions) {
                int img = a(orb[h]);
                if (!seen[img]) { seen[img] = true; orb.push_back(img); }
            }
        sizes.push_back((int)orb.size());
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

namespace {

int find_s5prime_class(const SubgroupClasses& sc) {
    const Group& s6 = sc.group();
    for (int i = 0; i < sc.num_classes(); i++) {
        if (sc.cls(i).order != 120) continue;
        std::vector<bool> seen(6, false);
        seen[0] = true;
        std::vector<int> orb{0};
        for (std::size_t h = 0; h < orb.size(); h++)
            for (int e : sc.cls(i).rep) {
                int img = s6[e](orb[h]);
                if (!seen[img]) { seen[img] = true; orb.push_back(img); }
            }
        if (orb.size() == 6) return i;
    }
    return -1;
}

int fixed_node(const Group& s6, const SegreGeometry& geo, const std::vector<int>& gens) {
    for (std::size_t i = 0; i < geo.nodes.size(); i++) {
        bool fixed = true;
        for (int e : gens)
            if (node_action(geo, s6[e])((int)i) != (int)i) { fixed = false; break; }
        if (fixed) return (int)i;
    }
    return -1;
}

}  // namespace

Classification classify_segre(const SubgroupClasses& sc, const SegreGeometry& geo,
                              const SegreModules& mods, const glattice::CohomologyReport& coh) {
    const Group& s6 = sc.group();
    Classification out;
    out.s5prime_class = find_s5prime_class(sc);
    if (out.s5prime_class < 0) throw std::logic_error("classify_segre: transitive S5 not found");

    std::map<int, const glattice::CohomologyRow*> coh_by_class;
    for (const auto& r : coh.rows) coh_by_class[r.class_id] = &r;

    for (int cid = 0; cid < sc.num_classes(); cid++) {
        const auto& cls = sc.cls(cid);
        if (cls.order == 1) continue;
        VerdictRow row;
        row.class_id = cid;
        row.order = cls.order;
        row.iso_type = cls.iso_label;
        row.rk_pic_inv = glattice::invariant_rank(mods.pic, cls.gens);
        row.rk_cl_inv = glattice::invariant_rank(mods.cl, cls.gens);
        row.h1_clean = coh_by_class.at(cid)->clean;

        int node = fixed_node(s6, geo, cls.gens);
        bool in_s5prime = sc.contains_conjugate(out.s5prime_class, cid);
        if (node >= 0) {
            row.verdict = Verdict::LIN_FIXED_NODE;
            row.evidence = "fixes node " + geo.nodes[node].to_string();
            out.fixed_node_classes++;
        } else if (in_s5prime) {
            row.verdict = Verdict::LIN_IN_S5PRIME;
            row.evidence = "conjugate into the transitive S5 (class " +
                           std::to_string(out.s5prime_class) + ")";
        } else {
            int planes = invariant_plane_count(s6, geo, cls.rep);
            std::vector<int> orbits = node_orbit_sizes(s6, geo, cls.rep);
            bool special = cls.order == 4 && cls.iso_label == "C2^2" && planes == 3 &&
                           orbits == std::vector<int>{2, 2, 2, 2, 2};
            if (special) {
                row.verdict = Verdict::LIN_SPECIAL_C22;
                row.evidence = "3 invariant planes; node orbits 2+2+2+2+2";
                out.special_c22_class = cid;
            } else {
                row.verdict = Verdict::NONLINEARIZABLE;
                row.evidence = "invariant planes: " + std::to_string(planes);
                out.nonlinearizable++;
            }
        }
        out.rows.push_back(std::move(row));
    }
    // Classes fixing a node even when another verdict fired first.
    out.fixed_node_classes = 0;
    for (const auto& r : out.rows) {
        const auto& cls = sc.cls(r.class_id);
        if (fixed_node(s6, geo, cls.gens) >= 0) out.fixed_node_classes++;
    }
    return out;
}

json Classification::to_json() const {
    json rows_json = json::array();
    for (const auto& r : rows) {
        rows_json.push_back({{"class_id", r.class_id},
                             {"order", r.order},
                             {"iso_type", r.iso_type},
                             {"rk_pic_inv", r.rk_pic_inv},
                             {"rk_cl_inv", r.rk_cl_inv},
                             {"h1_clean", r.h1_clean},
                             {"verdict", verdict_name(r.verdict)},
                             {"evidence", r.evidence}});
    }
    return json{{"rows", rows_json},
                {"summary",
                 {{"classes", rows.size()},
                  {"nonlinearizable", nonlinearizable},
                  {"fixed_node_classes", fixed_node_classes}}}};
}

CrosscheckReport segre_h1_crosscheck(const SubgroupClasses& sc, const SegreGeometry& geo,
                                     const Classification& cls,
                                     const glattice::CohomologyReport& coh) {
    const Group& s6 = sc.group();
    CrosscheckReport rep;
    std::map<int, const glattice::CohomologyRow*> coh_by_class;
    for (const auto& r : coh.rows) coh_by_class[r.class_id] = &r;
    std::map<int, const VerdictRow*> row_by_class;
    for (const auto& r : cls.rows) row_by_class[r.class_id] = &r;

    // Tag the torus-type classes among plane-preserving nonlinearizable ones.
    for (const auto& r : cls.rows) {
        if (r.verdict != Verdict::NONLINEARIZABLE) continue;
        const auto& c = sc.cls(r.class_id);
        int planes = invariant_plane_count(s6, geo, c.rep);
        if (planes == 0) continue;
        const auto* co = coh_by_class.at(r.class_id);
        bool own_obstruction = !co->h1.empty() || !co->h1_dual.empty();
        if (c.iso_label == "C2^2" && own_obstruction) rep.u1_type_classes.push_back(r.class_id);
        if (c.iso_label == "C2xC4" && co->clean) rep.w1_type_classes.push_back(r.class_id);
        if (c.iso_label == "C2^3" && co->clean) rep.w2_type_classes.push_back(r.class_id);
    }

    rep.linearizable_all_clean = true;
    rep.noplane_nonlin_all_obstructed = true;
    rep.plane_nonlin_all_tagged = true;
    for (const auto& r : cls.rows) {
        if (r.verdict != Verdict::NONLINEARIZABLE) {
            if (!r.h1_clean) rep.linearizable_all_clean = false;
            continue;
        }
        int planes = invariant_plane_count(s6, geo, sc.cls(r.class_id).rep);
        if (planes == 0) {
            if (r.h1_clean) rep.noplane_nonlin_all_obstructed = false;
        } else {
            bool tagged = false;
            for (int t : rep.u1_type_classes) tagged |= sc.contains_conjugate(r.class_id, t);
            for (int t : rep.w1_type_classes) tagged |= sc.contains_conjugate(r.class_id, t);
            for (int t : rep.w2_type_classes) tagged |= sc.contains_conjugate(r.class_id, t);
            if (!tagged) rep.plane_nonlin_all_tagged = false;
        }
    }
    if (cls.special_c22_class >= 0)
        rep.special_c22_clean = row_by_class.at(cls.special_c22_class)->h1_clean;
    rep.s5prime_chain_clean = true;
    for (const auto& r : cls.rows)
        if (r.verdict == Verdict::LIN_IN_S5PRIME && !r.h1_clean) rep.s5prime_chain_clean = false;
    return rep;
}

json CrosscheckReport::to_json() const {
    return json{{"linearizable_all_clean", linearizable_all_clean},
                {"noplane_nonlin_all_obstructed", noplane_nonlin_all_obstructed},
                {"plane_nonlin_all_tagged", plane_nonlin_all_tagged},
                {"special_c22_clean", special_c22_clean},
                {"s5prime_chain_clean", s5prime_chain_clean},
                {"u1_type_classes", u1_type_classes},
                {"w1_type_classes", w1_type_classes},
                {"w2_type_classes", w2_type_classes},
                {"ok", ok()}};
}

}  // namespace segre

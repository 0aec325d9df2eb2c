#include "groupcore/subgroups.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "groupcore/isotype.hpp"

namespace groupcore {

using json = nlohmann::json;

std::uint64_t subgroup_key(const std::vector<int>& elems) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ elems.size();
    for (int e : elems) h = (h ^ (std::uint64_t)e) * 0x100000001b3ULL;
    return h;
}

namespace {

std::vector<int> conjugate_subgroup(const Group& G, const std::vector<int>& sub, int x) {
    std::vector<int> out;
    out.reserve(sub.size());
    int xi = G.inv(x);
    for (int e : sub) out.push_back(G.mult(G.mult(xi, e), x));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

struct SubgroupEnumerator {
    const Group& G;
    SubgroupClasses& out;
    long bail;  // proper subgroups have order <= |G|/2

    SubgroupEnumerator(const Group& g, SubgroupClasses& o) : G(g), out(o), bail(g.order() / 2) {}

    int lookup(const std::vector<int>& elems) const {
        auto it = out.sub_to_class_.find(subgroup_key(elems));
        if (it == out.sub_to_class_.end()) return -1;
        for (const auto& [set, cid] : it->second)
            if (set == elems) return cid;
        return -1;
    }

    // Registers the class of `sub` (must be a closed subgroup), expanding its
    // full conjugation orbit and collecting Schreier normalizer generators.
    int register_subgroup(const std::vector<int>& sub) {
        int found = lookup(sub);
        if (found >= 0) return found;

        int cid = (int)out.classes_.size();
        SubgroupClass cls;
        cls.order = (long)sub.size();

        std::vector<std::vector<int>> orbit{sub};
        std::vector<int> transversal{0};  // element conjugating sub to orbit[k]
        std::unordered_map<std::uint64_t, std::vector<int>> orbit_index;
        orbit_index[subgroup_key(sub)].push_back(0);
        std::vector<int> norm_gens;

        for (std::size_t head = 0; head < orbit.size(); head++) {
            for (int g : G.generator_ids()) {
                std::vector<int> img = conjugate_subgroup(G, orbit[head], g);
                std::uint64_t key = subgroup_key(img);
                int t = G.mult(transversal[head], g);
                int existing = -1;
                auto it = orbit_index.find(key);
                if (it != orbit_index.end()) {
                    for (int idx : it->second)
                        if (orbit[idx] == img) { existing = idx; break; }
                }
                if (existing < 0) {
                    orbit_index[key].push_back((int)orbit.size());
                    orbit.push_back(std::move(img));
                    transversal.push_back(t);
                } else if (norm_gens.size() < 24) {
                    // Schreier generator of the normalizer.
                    int s = G.mult(t, G.inv(transversal[existing]));
                    if (s != 0) {
                        bool dup = false;
                        for (int e : norm_gens) dup |= (e == s);
                        if (!dup) norm_gens.push_back(s);
                    }
                }
            }
        }

        cls.rep = sub;
        cls.class_size = (long)orbit.size();
        cls.normalizer_order = G.order() / cls.class_size;
        cls.normalizer_gens = std::move(norm_gens);
        cls.gens = sub.size() == 1 ? std::vector<int>{0} : G.small_generating_set(sub);
        cls.cyclic = false;
        for (int e : sub)
            if (G.element_order(e) == (long)sub.size()) { cls.cyclic = true; break; }

        for (std::size_t k = 0; k < orbit.size(); k++)
            out.sub_to_class_[subgroup_key(orbit[k])].emplace_back(orbit[k], cid);
        out.conjugate_lists_.push_back(std::move(orbit));
        out.classes_.push_back(std::move(cls));
        return cid;
    }

    void run() {
        // Trivial subgroup, full group, cyclic subgroups from element classes.
        register_subgroup({0});
        {
            std::vector<int> all((std::size_t)G.order());
            for (int i = 0; i < G.order(); i++) all[i] = i;
            register_subgroup(all);
        }
        std::vector<int> cyclic_classes;
        for (int c = 0; c < G.num_elem_classes(); c++) {
            int g = G.elem_class_rep(c);
            if (g == 0) continue;
            int cid = register_subgroup(G.subgroup_closure({g}));
            bool dup = false;
            for (int e : cyclic_classes) dup |= (e == cid);
            if (!dup) cyclic_classes.push_back(cid);
        }

        // Join closure: every subgroup is generated by a proper subgroup
        // together with one cyclic subgroup, so iterating joins of known
        // classes with cyclic classes reaches every class.  Conjugates of the
        // cyclic side are pruned to normalizer orbits.
        for (std::size_t i = 0; i < out.classes_.size(); i++) {
            if (out.classes_[i].order > bail) continue;  // full group
            const std::vector<int> host_gens = out.classes_[i].gens;
            std::vector<bool> in_host(G.order(), false);
            for (int e : out.classes_[i].rep) in_host[e] = true;
            const std::vector<int> norm = out.classes_[i].normalizer_gens;

            for (int cyc : cyclic_classes) {
                // Copy: register_subgroup below may reallocate the lists.
                const auto conjs = out.conjugate_lists_[cyc];
                // Orbits of N(host) on the conjugate list.
                std::unordered_map<std::uint64_t, std::vector<int>> index;
                for (int k = 0; k < (int)conjs.size(); k++)
                    index[subgroup_key(conjs[k])].push_back(k);
                auto find_conj = [&](const std::vector<int>& s) {
                    auto it = index.find(subgroup_key(s));
                    if (it != index.end())
                        for (int idx : it->second)
                            if (conjs[idx] == s) return idx;
                    return -1;
                };
                std::vector<bool> seen(conjs.size(), false);
                for (int k = 0; k < (int)conjs.size(); k++) {
                    if (seen[k]) continue;
                    // BFS the N(host)-orbit of conjs[k].
                    std::vector<int> orb{k};
                    seen[k] = true;
                    for (std::size_t h = 0; h < orb.size(); h++) {
                        for (int n : norm) {
                            int img = find_conj(conjugate_subgroup(G, conjs[orb[h]], n));
                            if (img >= 0 && !seen[img]) {
                                seen[img] = true;
                                orb.push_back(img);
                            }
                        }
                    }
                    // Join host with the orbit representative.
                    const std::vector<int>& cyc_sub = conjs[k];
                    bool inside = true;
                    for (int e : cyc_sub) inside &= in_host[e];
                    if (inside) continue;
                    int gen = -1;
                    for (int e : cyc_sub)
                        if (G.element_order(e) == (long)cyc_sub.size()) { gen = e; break; }
                    if (gen < 0) throw std::logic_error("join: cyclic class without generator");
                    std::vector<int> join_gens = host_gens;
                    join_gens.push_back(gen);
                    std::vector<int> joined = G.subgroup_closure(join_gens, bail);
                    if (joined.empty()) continue;  // exceeded |G|/2, so the join is G itself
                    register_subgroup(joined);
                }
            }
        }

        // Audit: every representative is closed and class sizes match
        // normalizer indices.
        for (const auto& cls : out.classes_) {
            std::vector<int> cl = G.subgroup_closure(cls.gens);
            if (cl != cls.rep) throw std::logic_error("subgroup audit: rep not closed");
            if (cls.class_size * cls.normalizer_order != G.order())
                throw std::logic_error("subgroup audit: orbit-stabilizer mismatch");
        }
    }
};

SubgroupClasses SubgroupClasses::enumerate(const Group& G, const std::string& cache_path) {
    if (!cache_path.empty()) {
        SubgroupClasses cached;
        cached.G_ = &G;
        if (cached.load_cache(cache_path)) {
            cached.build_inclusion();
            return cached;
        }
    }
    SubgroupClasses sc;
    sc.G_ = &G;
    SubgroupEnumerator en(G, sc);
    en.run();
    sc.sort_and_label();
    sc.build_inclusion();
    if (!cache_path.empty()) sc.save_cache(cache_path);
    return sc;
}

void SubgroupClasses::sort_and_label() {
    for (auto& cls : classes_) cls.iso_label = iso_label(rep_group_for(*G_, cls));
    std::vector<int> perm(classes_.size());
    for (std::size_t i = 0; i < perm.size(); i++) perm[i] = (int)i;
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        const auto& A = classes_[a];
        const auto& B = classes_[b];
        if (A.order != B.order) return A.order < B.order;
        if (A.iso_label != B.iso_label) return A.iso_label < B.iso_label;
        return A.rep < B.rep;
    });
    std::vector<SubgroupClass> nc;
    std::vector<std::vector<std::vector<int>>> nl;
    for (int p : perm) {
        nc.push_back(std::move(classes_[p]));
        nl.push_back(std::move(conjugate_lists_[p]));
    }
    classes_ = std::move(nc);
    conjugate_lists_ = std::move(nl);
    sub_to_class_.clear();
    register_all_conjugates();
}

void SubgroupClasses::register_all_conjugates() {
    for (int cid = 0; cid < (int)classes_.size(); cid++)
        for (const auto& sub : conjugate_lists_[cid])
            sub_to_class_[subgroup_key(sub)].emplace_back(sub, cid);
}

void SubgroupClasses::build_inclusion() {
    int n = (int)classes_.size();
    contains_.assign(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> rep_bits(n, std::vector<bool>(G_->order(), false));
    for (int i = 0; i < n; i++)
        for (int e : classes_[i].rep) rep_bits[i][e] = true;
    for (int j = 0; j < n; j++) {
        for (const auto& sub : conjugate_lists_[j]) {
            if ((long)sub.size() > classes_[j].order) throw std::logic_error("inclusion: size");
            for (int i = 0; i < n; i++) {
                if (contains_[i][j] || classes_[i].order % (long)sub.size() != 0) continue;
                bool ok = true;
                for (int e : sub)
                    if (!rep_bits[i][e]) { ok = false; break; }
                if (ok) contains_[i][j] = true;
            }
        }
    }
}

int SubgroupClasses::class_of(const std::vector<int>& elems) const {
    auto it = sub_to_class_.find(subgroup_key(elems));
    if (it == sub_to_class_.end()) return -1;
    for (const auto& [set, cid] : it->second)
        if (set == elems) return cid;
    return -1;
}

int SubgroupClasses::class_of_closure(const std::vector<int>& gen_ids) const {
    return class_of(G_->subgroup_closure(gen_ids));
}

std::vector<int> SubgroupClasses::contained_classes(int i) const {
    std::vector<int> out;
    for (int j = 0; j < num_classes(); j++)
        if (contains_[i][j]) out.push_back(j);
    return out;
}

std::vector<int> SubgroupClasses::minimal_classes(const std::vector<int>& class_ids) const {
    std::vector<int> out;
    for (int i : class_ids) {
        bool minimal = true;
        for (int j : class_ids)
            if (j != i && contains_[i][j]) { minimal = false; break; }
        if (minimal) out.push_back(i);
    }
    return out;
}

long SubgroupClasses::total_subgroup_count() const {
    long total = 0;
    for (const auto& cls : classes_) total += cls.class_size;
    return total;
}

Group SubgroupClasses::rep_group(int class_id) const {
    return rep_group_for(*G_, classes_[class_id]);
}

bool SubgroupClasses::load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    json j;
    try {
        in >> j;
    } catch (...) {
        return false;
    }
    if (j.value("order", -1L) != G_->order() || j.value("degree", -1) != G_->degree()) return false;
    std::uint64_t gh = 0;
    for (int g : G_->generator_ids()) gh = hash_combine_ids(gh, (*G_)[g].hash());
    if (j.value("gens_hash", std::uint64_t(0)) != gh) return false;

    SubgroupEnumerator en(*G_, *this);
    for (const auto& rep : j.at("reps")) {
        std::vector<int> sub = rep.get<std::vector<int>>();
        en.register_subgroup(sub);
    }
    for (auto& cls : classes_) {
        std::vector<int> cl = G_->subgroup_closure(cls.gens);
        if (cl != cls.rep) return false;
    }
    sort_and_label();
    return true;
}

void SubgroupClasses::save_cache(const std::string& path) const {
    json j;
    j["order"] = G_->order();
    j["degree"] = G_->degree();
    std::uint64_t gh = 0;
    for (int g : G_->generator_ids()) gh = hash_combine_ids(gh, (*G_)[g].hash());
    j["gens_hash"] = gh;
    json reps = json::array();
    for (const auto& cls : classes_) reps.push_back(cls.rep);
    j["reps"] = reps;
    std::ofstream out(path);
    out << j;
}

}  // namespace groupcore

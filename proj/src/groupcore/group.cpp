#include "groupcore/group.hpp"

#include <algorithm>

namespace groupcore {

Group Group::closure(const std::vector<Perm>& gens, std::size_t bound) {
    if (gens.empty()) throw std::runtime_error("Group::closure: no generators");
    int degree = gens[0].degree();
    for (const auto& g : gens)
        if (g.degree() != degree) throw std::runtime_error("Group::closure: degree mismatch");

    std::unordered_map<Perm, int, PermHash> seen;
    std::vector<Perm> elems;
    Perm id(degree);
    seen.emplace(id, 0);
    elems.push_back(id);
    for (std::size_t head = 0; head < elems.size(); head++) {
        for (const Perm& g : gens) {
            Perm img = elems[head] * g;
            if (seen.emplace(img, (int)elems.size()).second) {
                elems.push_back(std::move(img));
                if (elems.size() > bound)
                    throw std::runtime_error("Group::closure: size bound exceeded");
            }
        }
    }

    Group G;
    G.degree_ = degree;
    std::sort(elems.begin(), elems.end());
    G.elems_ = std::move(elems);
    G.build_index();
    for (const Perm& g : gens) {
        int id_g = G.index_of(g);
        bool dup = false;
        for (int e : G.gen_ids_) dup |= (e == id_g);
        if (!dup) G.gen_ids_.push_back(id_g);
    }
    G.build_elem_classes();
    return G;
}

void Group::build_index() {
    index_.reserve(elems_.size() * 2);
    for (int i = 0; i < (int)elems_.size(); i++) index_.emplace(elems_[i], i);
    inv_.resize(elems_.size());
    for (int i = 0; i < (int)elems_.size(); i++) inv_[i] = index_.at(elems_[i].inverse());
    // Full multiplication table for small groups.
    if (elems_.size() <= 1500) {
        std::size_t n = elems_.size();
        table_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; i++)
            for (std::size_t j = 0; j < n; j++)
                table_[i * n + j] = (std::uint32_t)index_.at(elems_[i] * elems_[j]);
    }
}

int Group::index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

int Group::mult(int i, int j) const {
    if (!table_.empty()) return (int)table_[std::size_t(i) * elems_.size() + j];
    return index_.at(elems_[i] * elems_[j]);
}

int Group::inv(int i) const { return inv_[i]; }

int Group::pow(int g, long e) const {
    long n = order();
    e %= n;
    if (e < 0) e += n;
    int r = 0;
    int base = g;
    while (e > 0) {
        if (e & 1) r = mult(r, base);
        base = mult(base, base);
        e >>= 1;
    }
    return r;
}

void Group::build_elem_classes() {
    int n = (int)elems_.size();
    elem_class_of_.assign(n, -1);
    for (int i = 0; i < n; i++) {
        if (elem_class_of_[i] >= 0) continue;
        int cid = (int)elem_class_reps_.size();
        elem_class_reps_.push_back(i);
        std::vector<int> members{i};
        elem_class_of_[i] = cid;
        for (std::size_t head = 0; head < members.size(); head++) {
            for (int g : gen_ids_) {
                int img = conj(members[head], g);
                if (elem_class_of_[img] < 0) {
                    elem_class_of_[img] = cid;
                    members.push_back(img);
                }
            }
        }
        std::sort(members.begin(), members.end());
        elem_class_members_.push_back(std::move(members));
    }
}

std::vector<int> Group::subgroup_closure(const std::vector<int>& gen_ids, long bail_above) const {
    std::vector<bool> in(elems_.size(), false);
    std::vector<int> out{0};
    in[0] = true;
    long count = 1;
    std::vector<int> gens;
    for (int g : gen_ids)
        if (!in[g]) { in[g] = true; out.push_back(g); gens.push_back(g); count++; }
    if (bail_above > 0 && count > bail_above) return {};
    for (std::size_t head = 0; head < out.size(); head++) {
        for (int g : gens) {
            int img = mult(out[head], g);
            if (!in[img]) {
                in[img] = true;
                out.push_back(img);
                if (bail_above > 0 && ++count > bail_above) return {};
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Group::small_generating_set(const std::vector<int>& subgroup) const {
    if (subgroup.size() <= 1) return {0};
    std::vector<int> by_order = subgroup;
    std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
        return elems_[a].order() > elems_[b].order();
    });
    if (elems_[by_order[0]].order() == (long)subgroup.size()) return {by_order[0]};
    // Try two-generator sets first.
    int tries = 0;
    for (std::size_t i = 0; i < by_order.size() && tries < 80; i++)
        for (std::size_t j = i + 1; j < by_order.size() && tries < 80; j++) {
            tries++;
            std::vector<int> cl = subgroup_closure({by_order[i], by_order[j]});
            if (cl.size() == subgroup.size()) return {by_order[i], by_order[j]};
        }
    // Greedy: repeatedly adjoin the highest-order element outside the
    // current closure.
    std::vector<int> gens;
    std::vector<bool> in(elems_.size(), false);
    in[0] = true;
    std::size_t have = 1;
    while (have < subgroup.size()) {
        int next = -1;
        for (int e : by_order)
            if (!in[e]) { next = e; break; }
        if (next < 0) throw std::logic_error("small_generating_set: exhausted");
        gens.push_back(next);
        std::vector<int> cl = subgroup_closure(gens);
        std::fill(in.begin(), in.end(), false);
        for (int e : cl) in[e] = true;
        have = cl.size();
    }
    return gens.empty() ? std::vector<int>{0} : gens;
}

bool Group::is_abelian() const {
    for (int a : gen_ids_)
        for (int b : gen_ids_)
            if (mult(a, b) != mult(b, a)) return false;
    return true;
}

}  // namespace groupcore

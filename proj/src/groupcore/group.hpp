#pragma once

#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "groupcore/perm.hpp"

namespace groupcore {

// A finite permutation group with a fixed, deterministic element order
// (lexicographic on images, so index 0 is the identity).  All subgroup
// machinery works with element indices into this list.
class Group {
  public:
    // Closure of the generating set.  Throws if the closure exceeds `bound`.
    static Group closure(const std::vector<Perm>& gens, std::size_t bound = 1u << 20);

    long order() const { return (long)elems_.size(); }
    int degree() const { return degree_; }
    const Perm& operator[](int i) const { return elems_[i]; }
    const std::vector<int>& generator_ids() const { return gen_ids_; }

    int index_of(const Perm& p) const;   // -1 if absent
    int mult(int i, int j) const;
    int inv(int i) const;
    int conj(int g, int x) const { return mult(mult(inv(x), g), x); }  // x^-1 g x
    int pow(int g, long e) const;
    long element_order(int i) const { return elems_[i].order(); }

    // Conjugacy classes of elements.
    int num_elem_classes() const { return (int)elem_class_reps_.size(); }
    int elem_class_of(int i) const { return elem_class_of_[i]; }
    const std::vector<int>& elem_class_members(int c) const { return elem_class_members_[c]; }
    int elem_class_rep(int c) const { return elem_class_reps_[c]; }

    // Closure of a set of element ids inside this group.  If the closure
    // size would exceed `bail_above` > 0, returns an empty vector.
    std::vector<int> subgroup_closure(const std::vector<int>& gen_ids, long bail_above = 0) const;

    // Greedy small generating set for a subgroup given as a sorted id list.
    std::vector<int> small_generating_set(const std::vector<int>& subgroup) const;

    bool is_abelian() const;

  private:
    void build_index();
    void build_elem_classes();

    int degree_ = 0;
    std::vector<Perm> elems_;
    std::vector<int> gen_ids_;
    std::unordered_map<Perm, int, PermHash> index_;
    std::vector<std::uint32_t> table_;  // full multiplication table when order is small
    std::vector<int> inv_;
    std::vector<int> elem_class_of_;
    std::vector<int> elem_class_reps_;
    std::vector<std::vector<int>> elem_class_members_;
};

// Orbit of a seed under an action of group elements on hashable objects.
template <typename T, typename Hash, typename Act>
std::vector<T> orbit(const std::vector<T>& seeds, const std::vector<Perm>& gens, Act act,
                     std::size_t bound = 1u << 22) {
    std::vector<T> out;
    std::unordered_map<T, int, Hash> seen;
    for (const T& s : seeds) {
        if (seen.emplace(s, (int)out.size()).second) out.push_back(s);
    }
    for (std::size_t head = 0; head < out.size(); head++) {
        T cur = out[head];
        for (const Perm& g : gens) {
            T img = act(g, cur);
            if (seen.emplace(img, (int)out.size()).second) {
                out.push_back(img);
                if (out.size() > bound) throw std::runtime_error("orbit: bound exceeded");
            }
        }
    }
    return out;
}

}  // namespace groupcore

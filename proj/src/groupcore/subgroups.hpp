#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "groupcore/group.hpp"

namespace groupcore {

struct SubgroupClass {
    std::vector<int> rep;              // sorted ambient element ids
    std::vector<int> gens;             // small generating set (ambient element ids)
    long order = 0;
    long class_size = 0;               // number of conjugate subgroups
    long normalizer_order = 0;
    std::vector<int> normalizer_gens;  // Schreier generators of N(rep), possibly capped
    std::string iso_label;
    bool cyclic = false;
};

// Conjugacy classes of subgroups of a finite group, with every individual
// subgroup registered so membership and inclusion queries are exact.
class SubgroupClasses {
  public:
    // Enumerates all conjugacy classes of subgroups by seeding with cyclic
    // subgroups and closing under joins with cyclic subgroups, pruned by
    // normalizer orbits.  An audit verifies each representative is closed.
    // If cache_path is nonempty, tries to load from / saves to that file.
    static SubgroupClasses enumerate(const Group& G, const std::string& cache_path = "");

    const Group& group() const { return *G_; }
    int num_classes() const { return (int)classes_.size(); }
    const SubgroupClass& cls(int i) const { return classes_[i]; }
    // Classes other than the trivial one.
    int num_nontrivial() const { return num_classes() - 1; }

    // Class id of an exact subgroup (sorted element ids); -1 if not a
    // registered subgroup (i.e. not a subgroup at all).
    int class_of(const std::vector<int>& elems) const;
    int class_of_closure(const std::vector<int>& gen_ids) const;

    // True iff the representative of class i contains a conjugate of the
    // representative of class j.
    bool contains_conjugate(int i, int j) const { return contains_[i][j]; }
    // All classes j (including i) with contains_conjugate(i, j).
    std::vector<int> contained_classes(int i) const;
    // Minimal elements of a set of classes under the containment order.
    std::vector<int> minimal_classes(const std::vector<int>& class_ids) const;

    long total_subgroup_count() const;
    const std::vector<std::vector<int>>& conjugates(int class_id) const {
        return conjugate_lists_[class_id];
    }

    // Abstract group generated by a class representative.
    Group rep_group(int class_id) const;

  private:
    friend struct SubgroupEnumerator;
    const Group* G_ = nullptr;
    std::vector<SubgroupClass> classes_;
    std::vector<std::vector<std::vector<int>>> conjugate_lists_;
    std::unordered_map<std::uint64_t, std::vector<std::pair<std::vector<int>, int>>> sub_to_class_;
    std::vector<std::vector<bool>> contains_;

    void register_all_conjugates();
    void build_inclusion();
    void sort_and_label();
    bool load_cache(const std::string& path);
    void save_cache(const std::string& path) const;
};

std::uint64_t subgroup_key(const std::vector<int>& elems);

inline std::uint64_t hash_combine_ids(std::uint64_t h, std::uint64_t v) {
    return h * 0x100000001b3ULL ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

// Abstract group generated by a subgroup class representative.
Group rep_group_for(const Group& G, const SubgroupClass& cls);

}  // namespace groupcore

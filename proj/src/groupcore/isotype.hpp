#pragma once

#include <string>
#include <vector>

#include "groupcore/subgroups.hpp"

namespace groupcore {

// Cheap conjugation-invariant data used to pre-filter isomorphism tests and
// to build fallback labels.
struct Fingerprint {
    long order = 0;
    bool abelian = false;
    std::vector<std::pair<long, long>> order_stats;  // (element order, count)
    long center_order = 0;
    long derived_order = 0;
    std::vector<long> abelianization;  // invariant factors
    long exponent = 1;

    bool operator==(const Fingerprint& o) const;
    std::uint64_t hash() const;
};

Fingerprint fingerprint(const Group& H);

// Invariant factors d1 | d2 | ... of a finite abelian group.
std::vector<long> abelian_invariants(const Group& H);

// Backtracking isomorphism test for groups of moderate order (<= ~1300).
bool isomorphic(const Group& A, const Group& B);

// Canonical textual name: exact names for abelian groups and for the
// catalogued nonabelian types; otherwise a deterministic fingerprint label.
std::string iso_label(const Group& H);

// Direct product of permutation groups on a disjoint union of domains.
Group direct_product(const std::vector<const Group*>& factors);

// Small standard groups used as references and in tests.
Group cyclic_group(int n);
Group dihedral_group(int n);       // order 2n
Group dicyclic_group(int n);       // order 4n; n = 2 is Q8
Group symmetric_group(int n);
Group alternating_group(int n);

}  // namespace groupcore

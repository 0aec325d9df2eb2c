#pragma once

#include <vector>

#include "exactnum/mat.hpp"

namespace exactnum {

// Point of projective space, canonicalized so that the first nonzero
// coordinate equals 1.  Two points are equal iff coordinate-wise equal.
class ProjPoint {
  public:
    ProjPoint() = default;
    explicit ProjPoint(std::vector<Eisen> coords);
    static ProjPoint parse(const std::vector<std::string>& coords);

    int dim() const { return (int)c_.size() - 1; }  // ambient projective dimension
    const std::vector<Eisen>& coords() const { return c_; }
    const Eisen& operator[](int i) const { return c_[i]; }

    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjPoint& o) const { return c_ != o.c_; }
    bool operator<(const ProjPoint& o) const;
    std::uint64_t hash() const;
    std::string to_string() const;

  private:
    std::vector<Eisen> c_;
};

// Apply an invertible square matrix to a point (column-vector action).
// Throws std::domain_error on singular or size-mismatched input.
ProjPoint proj_apply(const EisenMat& m, const ProjPoint& p);
// Same action without the invertibility check (for bulk trusted use).
ProjPoint proj_apply_unchecked(const EisenMat& m, const ProjPoint& p);

// Linear subspace of projective space, stored as the RREF basis of its
// spanning vectors, which is the unique canonical representative.
class ProjSubspace {
  public:
    ProjSubspace() = default;
    // rows of basis = spanning vectors; reduced internally.
    ProjSubspace(int ambient_dim, const EisenMat& spanning_rows);
    static ProjSubspace span_of(const std::vector<ProjPoint>& pts);
    // Subspace cut out by linear forms (rows f with f.x = 0).
    static ProjSubspace from_forms(int ambient_dim, const EisenMat& forms);

    int ambient_dim() const { return ambient_; }           // projective ambient dim
    int dim() const { return basis_.rows() - 1; }          // projective dim of the subspace
    const EisenMat& basis() const { return basis_; }
    // Linear forms vanishing on the subspace (RREF rows).
    EisenMat forms() const;

    bool contains(const ProjPoint& p) const;
    bool contains(const ProjSubspace& o) const;
    ProjPoint basis_point(int i) const;

    // Smallest subspace containing both; and intersection.
    ProjSubspace join(const ProjSubspace& o) const;
    ProjSubspace meet(const ProjSubspace& o) const;

    // Image under an invertible matrix acting on points as columns.
    ProjSubspace apply(const EisenMat& m) const;

    bool operator==(const ProjSubspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator<(const ProjSubspace& o) const { return basis_.lex_less(o.basis_); }
    std::uint64_t hash() const { return basis_.hash(); }
    std::string to_string() const { return basis_.to_string(); }

  private:
    int ambient_ = -1;
    EisenMat basis_;  // RREF, rows linearly independent
};

}  // namespace exactnum

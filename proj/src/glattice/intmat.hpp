#pragma once

#include <vector>

#include "exactnum/rat.hpp"

namespace glattice {

using exactnum::Int;

// Dense row-major matrix over Z with arbitrary-precision entries.
class IntMat {
  public:
    IntMat() = default;
    IntMat(int rows, int cols) : r_(rows), c_(cols), e_(std::size_t(rows) * cols) {}
    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Int& at(int i, int j) { return e_[std::size_t(i) * c_ + j]; }
    const Int& at(int i, int j) const { return e_[std::size_t(i) * c_ + j]; }

    IntMat operator*(const IntMat& o) const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat transpose() const;
    bool operator==(const IntMat& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }
    bool is_zero() const;
    bool is_identity() const;

    std::vector<Int> apply(const std::vector<Int>& v) const;

    std::string to_string() const;

  private:
    int r_ = 0, c_ = 0;
    std::vector<Int> e_;
};

int rank(const IntMat& m);

struct SNFResult {
    std::vector<Int> divisors;  // elementary divisors d1 | d2 | ... (nonzero ones)
    IntMat left;                // unimodular U
    IntMat right;               // unimodular V with U * A * V = diag(divisors)
};

// Smith normal form with transforms; U*A*V is diagonal with the divisibility
// chain along the diagonal.
SNFResult smith_normal_form(const IntMat& a);

// Basis of the integer kernel {x : A x = 0}, as rows.  The kernel of an
// integer matrix is saturated by construction.
IntMat kernel_lattice(const IntMat& a);

// Solve A x = b over the integers; false if no integral solution.
bool solve_integer(const IntMat& a, const std::vector<Int>& b, std::vector<Int>* x);

// Inverse of a unimodular matrix; throws if not invertible over Z.
IntMat unimodular_inverse(const IntMat& a);

// Try to find x with A x = b where A has full column rank, else return false.
bool solve_full_column_rank(const IntMat& a, const std::vector<Int>& b, std::vector<Int>* x);

}  // namespace glattice

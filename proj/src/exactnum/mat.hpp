#pragma once

#include <initializer_list>
#include <vector>

#include "exactnum/eisen.hpp"

namespace exactnum {

// Dense row-major matrix over Q(w).
class EisenMat {
  public:
    EisenMat() = default;
    EisenMat(int rows, int cols) : r_(rows), c_(cols), e_(size_t(rows) * cols) {}

    static EisenMat identity(int n);
    static EisenMat from_rows(const std::vector<std::vector<Eisen>>& rows);
    // Parses entries in the textual Eisen encoding, row major.
    static EisenMat parse(int rows, int cols, const std::vector<std::string>& entries);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Eisen& at(int i, int j) { return e_[size_t(i) * c_ + j]; }
    const Eisen& at(int i, int j) const { return e_[size_t(i) * c_ + j]; }

    EisenMat operator*(const EisenMat& o) const;
    EisenMat operator+(const EisenMat& o) const;
    EisenMat operator-(const EisenMat& o) const;
    EisenMat scaled(const Eisen& c) const;
    EisenMat transpose() const;
    bool operator==(const EisenMat& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }
    bool operator!=(const EisenMat& o) const { return !(*this == o); }
    bool is_zero() const;

    std::vector<Eisen> apply(const std::vector<Eisen>& v) const;  // matrix * column vector
    std::vector<Eisen> apply_left(const std::vector<Eisen>& v) const;  // row vector * matrix

    // Projective canonicalization: divide by the first nonzero entry in
    // row-major scan, making projective equality literal equality.
    EisenMat proj_canonical() const;

    std::uint64_t hash() const;
    // Lexicographic row-major comparison; used for deterministic orderings.
    bool lex_less(const EisenMat& o) const;

    std::string to_string() const;

    std::vector<Eisen>& data() { return e_; }
    const std::vector<Eisen>& data() const { return e_; }

  private:
    int r_ = 0, c_ = 0;
    std::vector<Eisen> e_;
};

struct RrefResult {
    EisenMat mat;
    int rank = 0;
    std::vector<int> pivots;  // pivot column per pivot row
};

// Reduced row echelon form over the field Q(w).
RrefResult rref(const EisenMat& m);

// Basis of the right null space {v : M v = 0}, rows of the result, in RREF.
EisenMat kernel(const EisenMat& m);

int rank(const EisenMat& m);
Eisen det(const EisenMat& m);
// Inverse; throws std::domain_error on singular input.
EisenMat inverse(const EisenMat& m);

}  // namespace exactnum

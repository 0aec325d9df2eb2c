#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace groupcore {

// Permutation of {0, ..., n-1}, n <= 255.  p.im[i] is the image of i.
struct Perm {
    std::vector<std::uint8_t> im;

    Perm() = default;
    explicit Perm(int degree) : im(degree) {
        for (int i = 0; i < degree; i++) im[i] = (std::uint8_t)i;
    }
    static Perm from_images(const std::vector<int>& images);
    // One-line cycle notation, e.g. "(1 2)(3 4 5)" on points 1..n.
    static Perm from_cycles(int degree, const std::string& cycles);

    int degree() const { return (int)im.size(); }
    int operator()(int i) const { return im[i]; }
    bool is_identity() const;

    // (a*b)(i) = b(a(i)): apply a first.  Matches composition of actions
    // applied left to right.
    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    long order() const;
    bool even() const;

    bool operator==(const Perm& o) const { return im == o.im; }
    bool operator!=(const Perm& o) const { return im != o.im; }
    bool operator<(const Perm& o) const { return im < o.im; }

    std::uint64_t hash() const;
    std::string to_string() const;  // cycle notation on points 1..n
};

struct PermHash {
    std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace groupcore

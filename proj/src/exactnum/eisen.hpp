#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactnum/rat.hpp"

namespace exactnum {

// An element a + b*w of Q(w), where w is a primitive cube root of unity,
// w^2 + w + 1 = 0.  The (a, b) pair is the unique canonical representative.
struct Eisen {
    Rat a;
    Rat b;

    Eisen() = default;
    Eisen(int v) : a(v) {}                       // NOLINT: implicit by design
    Eisen(const Rat& v) : a(v) {}                // NOLINT
    Eisen(Rat av, Rat bv) : a(std::move(av)), b(std::move(bv)) {}

    static Eisen omega() { return Eisen(Rat(0), Rat(1)); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    Eisen operator-() const { return Eisen(-a, -b); }
    Eisen operator+(const Eisen& o) const { return Eisen(a + o.a, b + o.b); }
    Eisen operator-(const Eisen& o) const { return Eisen(a - o.a, b - o.b); }
    Eisen operator*(const Eisen& o) const {
        // (a+bw)(c+dw) = ac - bd + (ad + bc - bd) w
        Rat bd = b * o.b;
        return Eisen(a * o.a - bd, a * o.b + b * o.a - bd);
    }
    Eisen& operator+=(const Eisen& o) { a += o.a; b += o.b; return *this; }
    Eisen& operator-=(const Eisen& o) { a -= o.a; b -= o.b; return *this; }
    Eisen& operator*=(const Eisen& o) { *this = *this * o; return *this; }

    // Galois conjugate w -> w^2 = -1 - w.
    Eisen conj() const { return Eisen(a - b, -b); }

    // Field norm N(a+bw) = a^2 - ab + b^2, positive unless zero.
    Rat norm() const { return a * a - a * b + b * b; }

    Eisen inv() const {
        if (is_zero()) throw std::domain_error("Eisen: inversion of zero");
        Rat n = norm();
        Eisen c = conj();
        return Eisen(c.a / n, c.b / n);
    }
    Eisen operator/(const Eisen& o) const { return *this * o.inv(); }

    bool operator==(const Eisen& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Eisen& o) const { return !(*this == o); }
    // Lexicographic order on (a, b); used only for canonical orderings.
    bool operator<(const Eisen& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }

    std::uint64_t hash() const { return hash_combine(hash_rat(a), hash_rat(b)); }

    Eisen pow(long e) const;
};

// Textual encoding "a/b+c/d*w", omitting zero parts and unit denominators.
std::string eisen_to_string(const Eisen& v);
Eisen eisen_from_string(const std::string& s);
std::ostream& operator<<(std::ostream& os, const Eisen& v);

// Square root in Q(w) if one exists.
std::optional<Eisen> eisen_sqrt(const Eisen& v);

}  // namespace exactnum

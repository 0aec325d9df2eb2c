#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>

namespace exactnum {

// Arbitrary-precision integers and canonical rationals (reduced, denominator > 0),
// backed by GMP.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline std::uint64_t hash_int(const Int& v) {
    // Residue modulo a large prime, sign-adjusted.  Cheap and stable.
    unsigned long r = mpz_fdiv_ui(v.backend().data(), 0xfffffffbUL);
    return v < 0 ? ~static_cast<std::uint64_t>(r) : r;
}

inline std::uint64_t hash_rat(const Rat& v) {
    std::uint64_t h = hash_int(numerator(v));
    h = h * 0x9e3779b97f4a7c15ULL + hash_int(denominator(v));
    return h;
}

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    return h * 0x100000001b3ULL ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

// True iff v is the square of a rational; if so *root is the nonnegative root.
bool rat_sqrt(const Rat& v, Rat* root);

std::string rat_to_string(const Rat& v);
Rat rat_from_string(const std::string& s);

}  // namespace exactnum

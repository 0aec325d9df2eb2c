#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exactnum/proj.hpp"

namespace exactnum {

// Sparse multivariate polynomial over Q(w) in at most 8 variables.
// Monomial exponents are packed into a uint64 key, variable 0 in the most
// significant byte, so key order is lex order with x0 > x1 > ...
class Poly {
  public:
    using Key = std::uint64_t;
    static constexpr int kMaxVars = 8;

    Poly() = default;
    explicit Poly(int nvars) : nv_(nvars) {}
    Poly(int nvars, const Eisen& c) : nv_(nvars) {
        if (!c.is_zero()) t_[0] = c;
    }
    static Poly variable(int nvars, int i, int exp = 1);
    static Key key_of(const std::vector<int>& exps);
    static int key_exp(Key k, int i) { return int((k >> (8 * (7 - i))) & 0xff); }

    int nvars() const { return nv_; }
    bool is_zero() const { return t_.empty(); }
    int num_terms() const { return (int)t_.size(); }
    int degree() const;
    const std::map<Key, Eisen>& terms() const { return t_; }
    Eisen coeff(const std::vector<int>& exps) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Eisen& c) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const { return nv_ == o.nv_ && t_ == o.t_; }

    Poly pow(int e) const;
    Poly derivative(int var) const;
    Eisen eval(const std::vector<Eisen>& pt) const;
    // Substitute each variable by args[i]; args must share a variable count.
    Poly subst(const std::vector<Poly>& args) const;
    // Substitute variable i by a polynomial, keeping other variables.
    Poly subst_var(int var, const Poly& val) const;

    // Is this a scalar multiple c*o with c != 0?  Returns c if so.
    std::optional<Eisen> proportional_to(const Poly& o) const;

    struct DivRem;
    // Division with remainder by a single divisor under the key order.
    DivRem divrem(const Poly& divisor) const;

    std::string to_string(const std::vector<std::string>& var_names) const;

    void set_coeff(Key k, const Eisen& c);

  private:
    int nv_ = 0;
    std::map<Key, Eisen> t_;
};

struct Poly::DivRem {
    Poly quot, rem;
};

// Recursive-descent parser for polynomial expressions over Q(w): rationals,
// the symbols w/q, named variables, + - * ^ and parentheses.
Poly parse_poly(const std::string& expr, const std::vector<std::string>& var_names);

// Dense univariate polynomial over Q(w); coefficient i multiplies t^i.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Eisen> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly from_roots(const std::vector<Eisen>& roots);

    int degree() const { return (int)c_.size() - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    const Eisen& coeff(int i) const { return c_[i]; }
    Eisen eval(const Eisen& x) const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const Eisen& k) const;
    UPoly monic() const;
    struct DivRem;
    DivRem divrem(const UPoly& d) const;

    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    std::string to_string() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Eisen> c_;
};

struct UPoly::DivRem {
    UPoly quot, rem;
};

UPoly upoly_gcd(const UPoly& a, const UPoly& b);

struct RootReport {
    std::vector<Eisen> roots;   // distinct roots found in Q(w)
    bool complete = false;      // true iff the polynomial splits into linear factors over Q(w)
};
// Finds Q(w)-roots; complete factorization guaranteed for degree <= 2, and
// attempted beyond that by splitting off found roots.
RootReport upoly_roots(const UPoly& p);

// Converts a polynomial that uses only variable `var` into a UPoly.
UPoly to_univariate(const Poly& p, int var);

}  // namespace exactnum

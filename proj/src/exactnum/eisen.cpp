#include "exactnum/eisen.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace exactnum {

bool rat_sqrt(const Rat& v, Rat* root) {
    if (v < 0) return false;
    Int n = numerator(v), d = denominator(v);
    Int rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return false;
    *root = Rat(rn, rd);
    return true;
}

std::string rat_to_string(const Rat& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

Rat rat_from_string(const std::string& s) { return Rat(s); }

Eisen Eisen::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Eisen r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::string eisen_to_string(const Eisen& v) {
    if (v.is_zero()) return "0";
    std::string s;
    if (v.a != 0) s += rat_to_string(v.a);
    if (v.b != 0) {
        if (v.b > 0 && !s.empty()) s += "+";
        if (v.b == 1) s += "w";
        else if (v.b == -1) s += "-w";
        else s += rat_to_string(v.b) + "*w";
    }
    return s;
}

namespace {

// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*
//          term := rational ['*' w] | w
// where w may also be written q.
struct EisenParser {
    const std::string& s;
    size_t i = 0;
    explicit EisenParser(const std::string& str) : s(str) {}

    void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) i++; }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { i++; return true; }
        return false;
    }
    bool peek_w() {
        skip();
        return i < s.size() && (s[i] == 'w' || s[i] == 'q');
    }
    Rat rational() {
        skip();
        size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) j++;
        if (j == i) throw std::runtime_error("Eisen parse: digit expected in '" + s + "'");
        Int num(s.substr(i, j - i));
        i = j;
        if (eat('/')) {
            skip();
            size_t k = i;
            while (k < s.size() && std::isdigit((unsigned char)s[k])) k++;
            Int den(s.substr(i, k - i));
            i = k;
            return Rat(num, den);
        }
        return Rat(num);
    }
    Eisen omega_power() {
        // Consumes w or q, optionally followed by ^e.
        i++;
        if (eat('^')) {
            skip();
            size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) j++;
            if (j == i) throw std::runtime_error("Eisen parse: exponent expected in '" + s + "'");
            long e = std::stol(s.substr(i, j - i));
            i = j;
            return Eisen::omega().pow(e);
        }
        return Eisen::omega();
    }
    Eisen term() {
        if (peek_w()) return omega_power();
        Rat c = rational();
        // Both "2*w" and the juxtaposition "2w" denote twice omega.
        if (eat('*')) {
            if (!peek_w()) throw std::runtime_error("Eisen parse: w expected in '" + s + "'");
            return omega_power() * Eisen(c);
        }
        if (peek_w()) return omega_power() * Eisen(c);
        return Eisen(c);
    }
    Eisen parse() {
        Eisen acc(0);
        bool neg = eat('-');
        if (!neg) eat('+');
        Eisen t = term();
        acc = neg ? -t : t;
        for (;;) {
            skip();
            if (i >= s.size()) break;
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else throw std::runtime_error("Eisen parse: unexpected char in '" + s + "'");
        }
        return acc;
    }
};

}  // namespace

Eisen eisen_from_string(const std::string& s) { return EisenParser(s).parse(); }

std::ostream& operator<<(std::ostream& os, const Eisen& v) { return os << eisen_to_string(v); }

std::optional<Eisen> eisen_sqrt(const Eisen& v) {
    // Solve (a+bw)^2 = c+dw: a^2 - b^2 = c and b(2a - b) = d.
    const Rat& c = v.a;
    const Rat& d = v.b;
    Rat r;
    if (d == 0) {
        if (rat_sqrt(c, &r)) return Eisen(r);
        // b = 2a branch: -3a^2 = c.
        if (rat_sqrt(-c / 3, &r)) return Eisen(r, 2 * r);
        return std::nullopt;
    }
    // b != 0: a = (d + b^2) / (2b), so 3t^2 + (4c - 2d)t - d^2 = 0 with t = b^2.
    Rat A(3), B = 4 * c - 2 * d, C = -d * d;
    Rat disc = B * B - 4 * A * C, sd;
    if (!rat_sqrt(disc, &sd)) return std::nullopt;
    for (int sign : {1, -1}) {
        Rat t = (-B + sign * sd) / (2 * A);
        Rat b;
        if (t >= 0 && rat_sqrt(t, &b) && b != 0) {
            Rat a = (d + b * b) / (2 * b);
            Eisen cand(a, b);
            if (cand * cand == v) return cand;
        }
    }
    return std::nullopt;
}

}  // namespace exactnum

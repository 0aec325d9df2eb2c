#include "exactnum/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace exactnum {

Poly Poly::variable(int nvars, int i, int exp) {
    if (i < 0 || i >= nvars || nvars > kMaxVars) throw std::runtime_error("Poly::variable: index");
    Poly p(nvars);
    if (exp > 255) throw std::runtime_error("Poly: exponent overflow");
    Key k = Key(exp) << (8 * (7 - i));
    p.t_[k] = Eisen(1);
    return p;
}

Poly::Key Poly::key_of(const std::vector<int>& exps) {
    Key k = 0;
    for (size_t i = 0; i < exps.size(); i++) {
        if (exps[i] < 0 || exps[i] > 255) throw std::runtime_error("Poly: exponent out of range");
        k |= Key(exps[i]) << (8 * (7 - i));
    }
    return k;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) {
        int s = 0;
        for (int i = 0; i < 8; i++) s += key_exp(k, i);
        d = std::max(d, s);
    }
    return d;
}

Eisen Poly::coeff(const std::vector<int>& exps) const {
    auto it = t_.find(key_of(exps));
    return it == t_.end() ? Eisen(0) : it->second;
}

void Poly::set_coeff(Key k, const Eisen& c) {
    if (c.is_zero()) t_.erase(k);
    else t_[k] = c;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [k, c] : o.t_) {
        auto it = t_.find(k);
        if (it == t_.end()) t_[k] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [k, c] : o.t_) {
        auto it = t_.find(k);
        if (it == t_.end()) t_[k] = -c;
        else {
            it->second -= c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

Poly Poly::operator-() const {
    Poly r(nv_);
    for (const auto& [k, c] : t_) r.t_[k] = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(std::max(nv_, o.nv_));
    for (const auto& [k1, c1] : t_)
        for (const auto& [k2, c2] : o.t_) {
            Key k = k1 + k2;  // per-byte addition; exponents stay below 256 in this codebase
            auto it = r.t_.find(k);
            if (it == r.t_.end()) r.t_[k] = c1 * c2;
            else {
                it->second += c1 * c2;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    return r;
}

Poly Poly::scaled(const Eisen& c) const {
    Poly r(nv_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : t_) r.t_[k] = v * c;
    return r;
}

Poly Poly::pow(int e) const {
    Poly r(nv_, Eisen(1));
    for (int i = 0; i < e; i++) r = r * *this;
    return r;
}

Poly Poly::derivative(int var) const {
    Poly r(nv_);
    for (const auto& [k, c] : t_) {
        int e = key_exp(k, var);
        if (e == 0) continue;
        Key k2 = k - (Key(1) << (8 * (7 - var)));
        r.t_[k2] = c * Eisen(e);
    }
    return r;
}

Eisen Poly::eval(const std::vector<Eisen>& pt) const {
    Eisen r(0);
    for (const auto& [k, c] : t_) {
        Eisen m = c;
        for (int i = 0; i < nv_; i++) {
            int e = key_exp(k, i);
            if (e) m *= pt[i].pow(e);
        }
        r += m;
    }
    return r;
}

Poly Poly::subst(const std::vector<Poly>& args) const {
    if ((int)args.size() != nv_) throw std::runtime_error("Poly::subst: arity mismatch");
    int target_nv = args.empty() ? 0 : args[0].nvars();
    Poly r(target_nv);
    for (const auto& [k, c] : t_) {
        Poly m(target_nv, c);
        for (int i = 0; i < nv_; i++) {
            int e = key_exp(k, i);
            if (e) m = m * args[i].pow(e);
        }
        r += m;
    }
    return r;
}

Poly Poly::subst_var(int var, const Poly& val) const {
    std::vector<Poly> args;
    for (int i = 0; i < nv_; i++)
        args.push_back(i == var ? val : Poly::variable(nv_, i));
    return subst(args);
}

std::optional<Eisen> Poly::proportional_to(const Poly& o) const {
    if (t_.size() != o.t_.size()) return std::nullopt;
    if (t_.empty()) return std::nullopt;
    auto it1 = t_.begin();
    auto it2 = o.t_.begin();
    Eisen c = it1->second / it2->second;
    for (; it1 != t_.end(); ++it1, ++it2) {
        if (it1->first != it2->first) return std::nullopt;
        if (it1->second != c * it2->second) return std::nullopt;
    }
    return c;
}

Poly::DivRem Poly::divrem(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Poly: division by zero");
    Key lead = divisor.t_.rbegin()->first;
    Eisen lead_inv = divisor.t_.rbegin()->second.inv();
    Poly q(nv_), r = *this;
    for (;;) {
        // Largest term of r divisible by the leading term of the divisor.
        bool moved = false;
        for (auto it = r.t_.rbegin(); it != r.t_.rend(); ++it) {
            Key k = it->first;
            bool divisible = true;
            for (int i = 0; i < 8; i++)
                if (key_exp(k, i) < key_exp(lead, i)) { divisible = false; break; }
            if (!divisible) continue;
            Key qk = k - lead;
            Eisen qc = it->second * lead_inv;
            Poly term(nv_);
            term.t_[qk] = qc;
            q += term;
            r -= term * divisor;
            moved = true;
            break;
        }
        if (!moved) break;
    }
    return {q, r};
}

std::string Poly::to_string(const std::vector<std::string>& var_names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        os << (first ? "" : " + ") << "(" << eisen_to_string(it->second) << ")";
        for (int i = 0; i < nv_; i++) {
            int e = key_exp(it->first, i);
            if (e == 0) continue;
            os << "*" << var_names[i];
            if (e > 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

namespace {

struct PolyParser {
    const std::string& s;
    const std::vector<std::string>& vars;
    size_t i = 0;

    PolyParser(const std::string& str, const std::vector<std::string>& v) : s(str), vars(v) {}

    void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) i++; }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { i++; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::runtime_error("poly parse: " + msg + " at position " + std::to_string(i) +
                                 " in '" + s + "'");
    }

    Poly atom() {
        skip();
        if (i >= s.size()) fail("unexpected end");
        if (eat('(')) {
            Poly p = expr();
            if (!eat(')')) fail("expected )");
            return p;
        }
        char c = s[i];
        if (std::isdigit((unsigned char)c)) {
            size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) j++;
            Int num(s.substr(i, j - i));
            i = j;
            Rat val(num);
            if (eat('/')) {
                skip();
                size_t k = i;
                while (k < s.size() && std::isdigit((unsigned char)s[k])) k++;
                if (k == i) fail("expected denominator");
                val /= Rat(Int(s.substr(i, k - i)));
                i = k;
            }
            return Poly((int)vars.size(), Eisen(val));
        }
        if (std::isalpha((unsigned char)c)) {
            size_t j = i;
            while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) j++;
            std::string name = s.substr(i, j - i);
            i = j;
            if (name == "w" || name == "q") return Poly((int)vars.size(), Eisen::omega());
            for (size_t v = 0; v < vars.size(); v++)
                if (vars[v] == name) return Poly::variable((int)vars.size(), (int)v);
            fail("unknown symbol '" + name + "'");
        }
        fail("unexpected character");
    }

    Poly factor() {
        Poly p = atom();
        skip();
        if (eat('^')) {
            skip();
            size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) j++;
            if (j == i) fail("expected exponent");
            int e = std::stoi(s.substr(i, j - i));
            i = j;
            return p.pow(e);
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            skip();
            if (eat('*')) p = p * factor();
            else break;
        }
        return p;
    }

    Poly expr() {
        skip();
        bool neg = eat('-');
        if (!neg) eat('+');
        Poly p = term();
        if (neg) p = -p;
        for (;;) {
            skip();
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else break;
        }
        return p;
    }

    Poly parse() {
        Poly p = expr();
        skip();
        if (i != s.size()) fail("trailing input");
        return p;
    }
};

}  // namespace

Poly parse_poly(const std::string& expr, const std::vector<std::string>& var_names) {
    return PolyParser(expr, var_names).parse();
}

UPoly UPoly::from_roots(const std::vector<Eisen>& roots) {
    UPoly p(std::vector<Eisen>{Eisen(1)});
    for (const auto& r : roots) p = p * UPoly(std::vector<Eisen>{-r, Eisen(1)});
    return p;
}

Eisen UPoly::eval(const Eisen& x) const {
    Eisen r(0);
    for (int i = degree(); i >= 0; i--) r = r * x + c_[i];
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Eisen> c(std::max(c_.size(), o.c_.size()), Eisen(0));
    for (size_t i = 0; i < c_.size(); i++) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); i++) c[i] += o.c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o.scaled(Eisen(-1)); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Eisen> c(c_.size() + o.c_.size() - 1, Eisen(0));
    for (size_t i = 0; i < c_.size(); i++)
        for (size_t j = 0; j < o.c_.size(); j++) c[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(c));
}

UPoly UPoly::scaled(const Eisen& k) const {
    std::vector<Eisen> c(c_);
    for (auto& x : c) x *= k;
    return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(c_.back().inv());
}

UPoly::DivRem UPoly::divrem(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UPoly: division by zero");
    std::vector<Eisen> rem(c_), quot;
    int dd = d.degree();
    Eisen lead_inv = d.c_.back().inv();
    int qd = (int)rem.size() - 1 - dd;
    if (qd < 0) return {UPoly(), *this};
    quot.assign(qd + 1, Eisen(0));
    for (int k = (int)rem.size() - 1; k >= dd; k--) {
        if (rem[k].is_zero()) continue;
        Eisen f = rem[k] * lead_inv;
        quot[k - dd] = f;
        for (int j = 0; j <= dd; j++) rem[k - dd + j] -= f * d.c_[j];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

std::string UPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (int i = degree(); i >= 0; i--) {
        if (c_[i].is_zero()) continue;
        os << "(" << eisen_to_string(c_[i]) << ")";
        if (i) os << "*t^" << i;
        if (i) os << " + ";
    }
    return os.str();
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x.divrem(y).rem;
        x = y;
        y = r;
    }
    return x.monic();
}

RootReport upoly_roots(const UPoly& p) {
    RootReport rep;
    if (p.is_zero() || p.degree() == 0) {
        rep.complete = p.degree() == 0;
        return rep;
    }
    UPoly cur = p.monic();
    // Peel off roots while the remaining factor is solvable exactly.
    while (cur.degree() >= 1) {
        std::optional<Eisen> root;
        if (cur.degree() == 1) {
            root = -cur.coeff(0);
        } else if (cur.degree() == 2) {
            Eisen bb = cur.coeff(1), cc = cur.coeff(0);
            Eisen disc = bb * bb - Eisen(4) * cc;
            auto sq = eisen_sqrt(disc);
            if (!sq) break;
            root = (-bb + *sq) * Eisen(Rat(1, 2));
        } else {
            Eisen c0 = cur.coeff(0);
            if (c0.is_zero()) {
                root = Eisen(0);
            } else {
                // Candidate search over small rationals times units of Z[w].
                static const int kNums[] = {1, 2, 3, 4, 5, 6, 7};
                static const int kDens[] = {1, 2, 3};
                std::vector<Eisen> units = {Eisen(1),          -Eisen(1),
                                            Eisen::omega(),    -Eisen::omega(),
                                            Eisen(-1, -1),     Eisen(1, 1)};
                for (int n : kNums) {
                    for (int d : kDens) {
                        for (const auto& u : units) {
                            Eisen cand = u * Eisen(Rat(n, d));
                            if (cur.eval(cand).is_zero()) { root = cand; break; }
                        }
                        if (root) break;
                    }
                    if (root) break;
                }
                if (!root) break;
            }
        }
        if (!root) break;
        bool seen = false;
        for (const auto& r : rep.roots) seen |= (r == *root);
        if (!seen) rep.roots.push_back(*root);
        UPoly lin(std::vector<Eisen>{-*root, Eisen(1)});
        auto dr = cur.divrem(lin);
        if (!dr.rem.is_zero()) throw std::logic_error("upoly_roots: nonzero remainder");
        cur = dr.quot;
    }
    rep.complete = cur.degree() == 0;
    return rep;
}

UPoly to_univariate(const Poly& p, int var) {
    std::vector<Eisen> c;
    for (const auto& [k, v] : p.terms()) {
        int e = Poly::key_exp(k, var);
        for (int i = 0; i < p.nvars(); i++)
            if (i != var && Poly::key_exp(k, i) != 0)
                throw std::runtime_error("to_univariate: polynomial is not univariate");
        if ((int)c.size() <= e) c.resize(e + 1, Eisen(0));
        c[e] += v;
    }
    return UPoly(std::move(c));
}

}  // namespace exactnum

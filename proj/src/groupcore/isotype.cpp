#include "groupcore/isotype.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace groupcore {

namespace {

// Normal closure of a seed set under conjugation by the group generators.
std::vector<int> normal_closure(const Group& G, std::vector<int> seed_gens) {
    std::vector<int> gens = std::move(seed_gens);
    for (;;) {
        std::vector<int> sub = G.subgroup_closure(gens);
        bool stable = true;
        for (int h : G.generator_ids()) {
            for (int s : sub) {
                int c = G.conj(s, h);
                if (!std::binary_search(sub.begin(), sub.end(), c)) {
                    gens.push_back(c);
                    stable = false;
                    break;
                }
            }
            if (!stable) break;
        }
        if (stable) return sub;
    }
}

std::vector<int> derived_subgroup_ids(const Group& G) {
    std::vector<int> comms;
    for (int a : G.generator_ids())
        for (int b : G.generator_ids()) {
            int c = G.mult(G.mult(G.inv(a), G.inv(b)), G.mult(a, b));
            if (c != 0) comms.push_back(c);
        }
    if (comms.empty()) return {0};
    return normal_closure(G, comms);
}

long center_order(const Group& G) {
    long n = 0;
    for (int x = 0; x < G.order(); x++) {
        bool central = true;
        for (int g : G.generator_ids())
            if (G.mult(x, g) != G.mult(g, x)) { central = false; break; }
        if (central) n++;
    }
    return n;
}

// Quotient of G by a normal subgroup (given as sorted id list), as an
// abstract permutation group acting on the cosets.
Group quotient_group(const Group& G, const std::vector<int>& normal) {
    long n = G.order();
    std::vector<int> coset_of(n, -1);
    std::vector<int> coset_min;
    for (int x = 0; x < n; x++) {
        if (coset_of[x] >= 0) continue;
        int cid = (int)coset_min.size();
        coset_min.push_back(x);
        for (int s : normal) coset_of[G.mult(s, x)] = cid;
    }
    int m = (int)coset_min.size();
    if (m > 255) throw std::runtime_error("quotient_group: too many cosets for a Perm");
    std::vector<Perm> gens;
    for (int g : G.generator_ids()) {
        std::vector<int> im(m);
        for (int c = 0; c < m; c++) im[c] = coset_of[G.mult(coset_min[c], g)];
        gens.push_back(Perm::from_images(im));
    }
    return Group::closure(gens);
}

}  // namespace

std::vector<long> abelian_invariants(const Group& H) {
    long n = H.order();
    // Primary decomposition from counts of solutions of x^(p^k) = 1.
    std::map<long, std::vector<int>> primary;  // p -> partition (exponents, descending)
    long m = n;
    for (long p = 2; m > 1; p++) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        std::vector<long> counts{1};
        for (long pk = p;; pk *= p) {
            long c = 0;
            for (int x = 0; x < n; x++)
                if (H.pow(x, pk) == 0) c++;
            counts.push_back(c);
            if (c == counts[counts.size() - 2]) break;
        }
        std::vector<int> mk;  // log_p of counts
        for (long c : counts) {
            int e = 0;
            while (c > 1) { c /= p; e++; }
            mk.push_back(e);
        }
        std::vector<int> lambda;
        for (std::size_t k = 1; k < mk.size(); k++) {
            int d = mk[k] - mk[k - 1];
            for (int i = 0; i < d; i++) {
                if ((int)lambda.size() < i + 1) lambda.resize(i + 1, 0);
            }
            for (int i = 0; i < d; i++) lambda[i]++;
        }
        primary[p] = lambda;
    }
    // Assemble invariant factors d1 | d2 | ... from primary parts.
    std::size_t len = 0;
    for (auto& [p, lambda] : primary) len = std::max(len, lambda.size());
    std::vector<long> inv(len, 1);
    for (auto& [p, lambda] : primary)
        for (std::size_t i = 0; i < lambda.size(); i++) {
            long pk = 1;
            for (int e = 0; e < lambda[i]; e++) pk *= p;
            inv[i] *= pk;  // lambda descending, so inv ends up divisible upward
        }
    std::sort(inv.begin(), inv.end());
    return inv;
}

Fingerprint fingerprint(const Group& H) {
    Fingerprint f;
    f.order = H.order();
    f.abelian = H.is_abelian();
    std::map<long, long> stats;
    for (int x = 0; x < H.order(); x++) {
        long o = H.element_order(x);
        stats[o]++;
        f.exponent = std::lcm(f.exponent, o);
    }
    f.order_stats.assign(stats.begin(), stats.end());
    f.center_order = center_order(H);
    std::vector<int> derived = derived_subgroup_ids(H);
    f.derived_order = (long)derived.size();
    if (f.abelian) {
        f.abelianization = abelian_invariants(H);
    } else {
        f.abelianization = abelian_invariants(quotient_group(H, derived));
    }
    return f;
}

bool Fingerprint::operator==(const Fingerprint& o) const {
    return order == o.order && abelian == o.abelian && order_stats == o.order_stats &&
           center_order == o.center_order && derived_order == o.derived_order &&
           abelianization == o.abelianization && exponent == o.exponent;
}

std::uint64_t Fingerprint::hash() const {
    std::uint64_t h = hash_combine_ids(order, abelian);
    for (auto& [o, c] : order_stats) h = hash_combine_ids(h, hash_combine_ids(o, c));
    h = hash_combine_ids(h, center_order);
    h = hash_combine_ids(h, derived_order);
    for (long d : abelianization) h = hash_combine_ids(h, d);
    return hash_combine_ids(h, exponent);
}

bool isomorphic(const Group& A, const Group& B) {
    if (A.order() != B.order()) return false;
    if (A.order() > 1300) throw std::runtime_error("isomorphic: order too large");
    // Invariant per element: (order, conjugacy class size).
    auto profile = [](const Group& G, int x) {
        return std::pair<long, long>(G.element_order(x),
                                     (long)G.elem_class_members(G.elem_class_of(x)).size());
    };
    std::vector<int> agens;
    {
        std::vector<int> all(A.order());
        std::iota(all.begin(), all.end(), 0);
        agens = A.small_generating_set(all);
    }
    // Candidate images for each generator, filtered by the profile.
    std::vector<std::vector<int>> cands(agens.size());
    for (std::size_t i = 0; i < agens.size(); i++) {
        auto p = profile(A, agens[i]);
        for (int y = 0; y < B.order(); y++)
            if (profile(B, y) == p) cands[i].push_back(y);
    }
    std::vector<int> img(agens.size(), -1);
    std::vector<int> map((std::size_t)A.order());
    std::vector<bool> hit((std::size_t)B.order());

    // Partial homomorphism check over the subgroup generated by the first
    // k+1 generators; prunes the search level by level.
    auto check = [&](std::size_t upto) {
        std::fill(map.begin(), map.end(), -1);
        std::fill(hit.begin(), hit.end(), false);
        map[0] = 0;
        hit[0] = true;
        std::vector<int> queue{0};
        for (std::size_t h = 0; h < queue.size(); h++) {
            int a = queue[h];
            for (std::size_t gi = 0; gi <= upto; gi++) {
                int a2 = A.mult(a, agens[gi]);
                int b2 = B.mult(map[a], img[gi]);
                if (map[a2] < 0) {
                    if (hit[b2]) return std::size_t(0);  // not injective
                    map[a2] = b2;
                    hit[b2] = true;
                    queue.push_back(a2);
                } else if (map[a2] != b2) {
                    return std::size_t(0);
                }
            }
        }
        return queue.size();
    };

    std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
        for (int cand : cands[k]) {
            img[k] = cand;
            std::size_t mapped = check(k);
            if (mapped == 0) continue;
            if (k + 1 == agens.size()) {
                if (mapped == (std::size_t)A.order()) return true;
                continue;
            }
            if (dfs(k + 1)) return true;
        }
        return false;
    };
    return dfs(0);
}

Group direct_product(const std::vector<const Group*>& factors) {
    int degree = 0;
    for (const Group* f : factors) degree += f->degree();
    std::vector<Perm> gens;
    int off = 0;
    for (const Group* f : factors) {
        for (int g : f->generator_ids()) {
            std::vector<int> im(degree);
            std::iota(im.begin(), im.end(), 0);
            for (int i = 0; i < f->degree(); i++) im[off + i] = off + (*f)[g](i);
            gens.push_back(Perm::from_images(im));
        }
        off += f->degree();
    }
    return Group::closure(gens);
}

Group cyclic_group(int n) {
    if (n == 1) return Group::closure({Perm(1)});
    std::vector<int> im(n);
    for (int i = 0; i < n; i++) im[i] = (i + 1) % n;
    return Group::closure({Perm::from_images(im)});
}

Group dihedral_group(int n) {
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; i++) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return Group::closure({Perm::from_images(rot), Perm::from_images(refl)});
}

Group dicyclic_group(int n) {
    // <a, x | a^(2n) = 1, x^2 = a^n, x a x^-1 = a^-1> on Z_2n x {0,1}.
    int m = 2 * n;
    std::vector<int> a(2 * m), x(2 * m);
    for (int i = 0; i < m; i++) {
        a[i] = (i + 1) % m;
        a[m + i] = m + (i + 1) % m;
        x[i] = m + (m - i) % m;
        x[m + i] = (m - i + n) % m;
    }
    return Group::closure({Perm::from_images(a), Perm::from_images(x)});
}

Group symmetric_group(int n) {
    if (n == 1) return Group::closure({Perm(1)});
    std::vector<int> cyc(n), tr(n);
    for (int i = 0; i < n; i++) { cyc[i] = (i + 1) % n; tr[i] = i; }
    std::swap(tr[0], tr[1]);
    return Group::closure({Perm::from_images(tr), Perm::from_images(cyc)});
}

Group alternating_group(int n) {
    std::vector<int> c3(n), rest(n);
    for (int i = 0; i < n; i++) { c3[i] = i; rest[i] = i; }
    c3[0] = 1; c3[1] = 2; c3[2] = 0;
    if (n % 2 == 1) {
        for (int i = 0; i < n; i++) rest[i] = (i + 1) % n;
    } else {
        for (int i = 1; i < n; i++) rest[i] = i % (n - 1) + 1;
        rest[0] = 0;
    }
    return Group::closure({Perm::from_images(c3), Perm::from_images(rest)});
}

namespace {

std::string abelian_name(const std::vector<long>& inv) {
    // Condensed invariant-factor name, e.g. C2^2xC4.
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < inv.size()) {
        std::size_t j = i;
        while (j < inv.size() && inv[j] == inv[i]) j++;
        if (!first) os << "x";
        os << "C" << inv[i];
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

struct Reference {
    std::string name;
    Group group;
    Fingerprint fp;
};

Group make_f5() {
    // Frobenius group of order 20: x -> x+1 and x -> 2x on Z/5.
    std::vector<int> add(5), mul(5);
    for (int i = 0; i < 5; i++) { add[i] = (i + 1) % 5; mul[i] = (2 * i) % 5; }
    return Group::closure({Perm::from_images(add), Perm::from_images(mul)});
}

Group make_sl2f3() {
    // Action on the 8 nonzero vectors of F_3^2.
    auto idx = [](int x, int y) {
        static const int table[3][3] = {{-1, 0, 1}, {2, 3, 4}, {5, 6, 7}};
        return table[x][y];
    };
    std::vector<std::pair<int, int>> vecs;
    for (int x = 0; x < 3; x++)
        for (int y = 0; y < 3; y++)
            if (x || y) vecs.emplace_back(x, y);
    auto act = [&](int a, int b, int c, int d) {
        std::vector<int> im(8);
        for (int k = 0; k < 8; k++) {
            auto [x, y] = vecs[k];
            im[idx(x, y)] = idx((a * x + b * y) % 3, (c * x + d * y) % 3);
        }
        return Perm::from_images(im);
    };
    return Group::closure({act(1, 1, 0, 1), act(0, 2, 1, 0)});
}

Group make_c2sq_rtimes_c4() {
    // <(12),(34)> extended by an order-4 element swapping the two factors.
    Perm a = Perm::from_cycles(8, "(1 2)");
    Perm b = Perm::from_cycles(8, "(3 4)");
    Perm c = Perm::from_cycles(8, "(1 3)(2 4)(5 6 7 8)");
    return Group::closure({a, b, c});
}

Group make_c4_rtimes_c4() {
    Perm a = Perm::from_cycles(8, "(1 2 3 4)");
    Perm b = Perm::from_cycles(8, "(1 3)(5 6 7 8)");
    return Group::closure({a, b});
}

Group make_c3_rtimes_d4() {
    // D4 = <r, s>, r of order 4 inverting C3, s a commuting reflection.
    Perm a = Perm::from_cycles(7, "(1 2 3)");
    Perm r = Perm::from_cycles(7, "(2 3)(4 5 6 7)");
    Perm s = Perm::from_cycles(7, "(5 7)");
    return Group::closure({a, r, s});
}

Group make_c3sq_rtimes_c4() {
    // Z_3^2 translations with (x, y) -> (y, -x).
    auto id9 = [](int x, int y) { return 3 * x + y; };
    std::vector<int> a(9), b(9), c(9);
    for (int x = 0; x < 3; x++)
        for (int y = 0; y < 3; y++) {
            a[id9(x, y)] = id9((x + 1) % 3, y);
            b[id9(x, y)] = id9(x, (y + 1) % 3);
            c[id9(x, y)] = id9(y, (3 - x) % 3);
        }
    return Group::closure({Perm::from_images(a), Perm::from_images(b), Perm::from_images(c)});
}

Group make_he3() {
    // Heisenberg group of order 27, exponent 3: translations and a shear.
    auto id9 = [](int x, int y) { return 3 * x + y; };
    std::vector<int> a(9), b(9);
    for (int x = 0; x < 3; x++)
        for (int y = 0; y < 3; y++) {
            a[id9(x, y)] = id9((x + 1) % 3, y);
            b[id9(x, y)] = id9(x, (y + x) % 3);
        }
    return Group::closure({Perm::from_images(a), Perm::from_images(b)});
}

Group make_c9_rtimes_c3() {
    std::vector<int> a(9), b(9);
    for (int i = 0; i < 9; i++) { a[i] = (i + 1) % 9; b[i] = (4 * i) % 9; }
    return Group::closure({Perm::from_images(a), Perm::from_images(b)});
}

Group make_gen_dihedral_c3sq() {
    Perm a = Perm::from_cycles(6, "(1 2 3)");
    Perm b = Perm::from_cycles(6, "(4 5 6)");
    Perm t = Perm::from_cycles(6, "(2 3)(5 6)");
    return Group::closure({a, b, t});
}

Group make_s3_wr_c2() {
    Perm a = Perm::from_cycles(6, "(1 2 3)");
    Perm b = Perm::from_cycles(6, "(1 2)");
    Perm c = Perm::from_cycles(6, "(4 5 6)");
    Perm d = Perm::from_cycles(6, "(4 5)");
    Perm s = Perm::from_cycles(6, "(1 4)(2 5)(3 6)");
    return Group::closure({a, b, c, d, s});
}

const std::vector<Reference>& references() {
    static std::vector<Reference>* refs = [] {
        auto* v = new std::vector<Reference>;
        auto add = [&](const std::string& name, Group g) {
            Reference r{name, std::move(g), {}};
            r.fp = fingerprint(r.group);
            v->push_back(std::move(r));
        };
        Group c2 = cyclic_group(2), c3 = cyclic_group(3), c4 = cyclic_group(4);
        Group s3 = dihedral_group(3), s4 = symmetric_group(4), a4 = alternating_group(4);
        Group d4 = dihedral_group(4), d5 = dihedral_group(5), d6 = dihedral_group(6);
        Group q8 = dicyclic_group(2);
        add("S3", s3);
        add("D4", d4);
        add("Q8", q8);
        add("D5", d5);
        add("A4", a4);
        add("D6", d6);
        add("C3:C4", dicyclic_group(3));
        add("C2xD4", direct_product({&c2, &d4}));
        add("C2xQ8", direct_product({&c2, &q8}));
        add("C2^2:C4", make_c2sq_rtimes_c4());
        add("C4:C4", make_c4_rtimes_c4());
        add("D8", dihedral_group(8));
        add("C3xS3", direct_product({&c3, &s3}));
        add("D9", dihedral_group(9));
        add("C3^2:C2", make_gen_dihedral_c3sq());
        add("F5", make_f5());
        add("D10", dihedral_group(10));
        add("C5:C4", dicyclic_group(5));
        add("S4", s4);
        add("SL2(F3)", make_sl2f3());
        add("D12", dihedral_group(12));
        add("C3:D4", make_c3_rtimes_d4());
        add("C3xQ8", direct_product({&c3, &q8}));
        add("C2xA4", direct_product({&c2, &a4}));
        add("C2xD6", direct_product({&c2, &d6}));
        add("C3xD4", direct_product({&c3, &d4}));
        add("Dic6", dicyclic_group(6));
        add("C3xA4", direct_product({&c3, &a4}));
        add("He3", make_he3());
        add("C9:C3", make_c9_rtimes_c3());
        add("S3^2", direct_product({&s3, &s3}));
        add("C3^2:C4", make_c3sq_rtimes_c4());
        add("C3xC3:C4", [&] { Group d = dicyclic_group(3); return direct_product({&c3, &d}); }());
        add("C6xS3", [&] { Group c6 = cyclic_group(6); return direct_product({&c6, &s3}); }());
        add("D18", dihedral_group(18));
        add("C2xS4", direct_product({&c2, &s4}));
        add("C4xA4", [&] { return direct_product({&c4, &a4}); }());
        add("C2^2xA4", [&] { Group k = direct_product({&c2, &c2}); return direct_product({&k, &a4}); }());
        add("A5", alternating_group(5));
        add("S3wrC2", make_s3_wr_c2());
        add("C2xA5", [&] { Group a5 = alternating_group(5); return direct_product({&c2, &a5}); }());
        add("S5", symmetric_group(5));
        add("C2xS3^2", [&] { Group ss = direct_product({&s3, &s3}); return direct_product({&c2, &ss}); }());
        add("C2xS3wrC2", [&] { Group w = make_s3_wr_c2(); return direct_product({&c2, &w}); }());
        add("A6", alternating_group(6));
        add("S6", symmetric_group(6));
        return v;
    }();
    return *refs;
}

std::string fallback_label(const Fingerprint& fp) {
    std::ostringstream os;
    os << "G" << fp.order << "." << std::hex << (fp.hash() & 0xffffffffu);
    return os.str();
}

}  // namespace

std::string iso_label(const Group& H) {
    if (H.order() == 1) return "1";
    if (H.is_abelian()) return abelian_name(abelian_invariants(H));
    Fingerprint fp = fingerprint(H);
    if (H.order() <= 1300) {
        for (const auto& ref : references()) {
            if (ref.fp == fp && isomorphic(H, ref.group)) return ref.name;
        }
    }
    return fallback_label(fp);
}

Group rep_group_for(const Group& G, const SubgroupClass& cls) {
    std::vector<Perm> gens;
    for (int g : cls.gens) gens.push_back(G[g]);
    return Group::closure(gens);
}

}  // namespace groupcore

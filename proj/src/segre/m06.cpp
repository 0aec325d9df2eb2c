#include "segre/m06.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace segre {

using glattice::Int;
using groupcore::Perm;

namespace {

struct GenIndex {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> triples;
    int pair_id[6][6];
    std::map<std::vector<int>, int> triple_id;

    GenIndex() {
        for (int i = 0; i < 6; i++)
            for (int j = 0; j < 6; j++) pair_id[i][j] = -1;
        for (int i = 0; i < 6; i++)
            for (int j = i + 1; j < 6; j++) {
                pair_id[i][j] = pair_id[j][i] = (int)pairs.size();
                pairs.emplace_back(i, j);
            }
        for (int a = 1; a < 6; a++)
            for (int b = a + 1; b < 6; b++) {
                std::vector<int> t{0, a, b};
                triple_id[t] = 15 + (int)triples.size();
                triples.push_back(t);
            }
    }

    int of_pair(int i, int j) const { return pair_id[i][j]; }
    int of_triple(std::vector<int> t) const {
        std::sort(t.begin(), t.end());
        if (t[0] != 0) {
            // Identify with the complement, which contains 0.
            std::vector<int> c;
            for (int i = 0; i < 6; i++)
                if (std::find(t.begin(), t.end(), i) == t.end()) c.push_back(i);
            t = c;
        }
        return triple_id.at(t);
    }
};

const GenIndex& gen_index() {
    static const GenIndex gi;
    return gi;
}

std::vector<std::vector<Int>> keel_relations() {
    const GenIndex& gi = gen_index();
    std::vector<std::vector<Int>> rows;
    auto sum_row = [&](int i, int j, int k, int l) {
        // Boundary classes separating {i,j} from {k,l}.
        std::vector<Int> row(25, 0);
        row[gi.of_pair(i, j)] += 1;
        row[gi.of_pair(k, l)] += 1;
        for (int m = 0; m < 6; m++) {
            if (m == i || m == j || m == k || m == l) continue;
            row[gi.of_triple({i, j, m})] += 1;
        }
        return row;
    };
    for (int i = 0; i < 6; i++)
        for (int j = i + 1; j < 6; j++)
            for (int k = j + 1; k < 6; k++)
                for (int l = k + 1; l < 6; l++) {
                    // Quadruple {i,j,k,l}: the three pairings agree.
                    auto r1 = sum_row(i, j, k, l);
                    auto r2 = sum_row(i, k, j, l);
                    auto r3 = sum_row(i, l, j, k);
                    std::vector<Int> d1(25), d2(25);
                    for (int t = 0; t < 25; t++) {
                        d1[t] = r1[t] - r2[t];
                        d2[t] = r1[t] - r3[t];
                    }
                    rows.push_back(std::move(d1));
                    rows.push_back(std::move(d2));
                }
    return rows;
}

}  // namespace

Perm SegreModules::generator_perm(int elem) const {
    const GenIndex& gi = gen_index();
    const Perm& g = (*s6)[elem];
    std::vector<int> im(25);
    for (int t = 0; t < 15; t++) {
        auto [i, j] = gi.pairs[t];
        im[t] = gi.of_pair(g(i), g(j));
    }
    for (int t = 0; t < 10; t++) {
        const auto& tri = gi.triples[t];
        im[15 + t] = gi.of_triple({g(tri[0]), g(tri[1]), g(tri[2])});
    }
    return Perm::from_images(im);
}

SegreModules segre_modules(const groupcore::Group& s6) {
    SegreModules mods;
    mods.s6 = &s6;
    mods.pair_gens = gen_index().pairs;
    mods.triple_gens = gen_index().triples;

    auto perm_provider = [&s6](int elem) {
        SegreModules tmp;
        tmp.s6 = &s6;
        return tmp.generator_perm(elem);
    };

    std::vector<std::vector<Int>> keel = keel_relations();
    std::vector<std::string> labels;
    for (auto [i, j] : mods.pair_gens)
        labels.push_back("d" + std::to_string(i + 1) + std::to_string(j + 1));
    for (const auto& t : mods.triple_gens)
        labels.push_back("d" + std::to_string(t[0] + 1) + std::to_string(t[1] + 1) +
                         std::to_string(t[2] + 1));

    mods.pic = glattice::quotient_lattice(&s6, 25, keel, perm_provider, &mods.pic_info, labels);
    if (mods.pic.rank() != 16) throw std::logic_error("segre_modules: Pic rank != 16");
    if (mods.pic_info.relation_rank != 9)
        throw std::logic_error("segre_modules: relation rank != 9");

    std::vector<std::vector<Int>> with_triples = keel;
    for (int t = 0; t < 10; t++) {
        std::vector<Int> row(25, 0);
        row[15 + t] = 1;
        with_triples.push_back(std::move(row));
    }
    mods.cl = glattice::quotient_lattice(&s6, 25, with_triples, perm_provider, &mods.cl_info, labels);
    if (mods.cl.rank() != 6) throw std::logic_error("segre_modules: Cl rank != 6");
    return mods;
}

namespace {

std::vector<int> closure_of(const groupcore::Group& g, const std::vector<std::string>& cycles) {
    std::vector<int> ids;
    for (const auto& c : cycles) {
        int id = g.index_of(Perm::from_cycles(6, c));
        if (id < 0) throw std::logic_error("closure_of: element not found");
        ids.push_back(id);
    }
    return g.subgroup_closure(ids);
}

}  // namespace

SegreTableGroups segre_table_groups(const groupcore::Group& s6,
                                    const groupcore::SubgroupClasses& sc,
                                    const SegreGeometry& geo) {
    SegreTableGroups tg;
    tg.s6_full.resize(s6.order());
    for (int i = 0; i < s6.order(); i++) tg.s6_full[i] = i;
    for (int i = 0; i < s6.order(); i++)
        if (s6[i].even()) tg.a6.push_back(i);

    // Standard S5: stabilizer of the last point.
    for (int i = 0; i < s6.order(); i++)
        if (s6[i](5) == 5) tg.s5_std.push_back(i);
    for (int e : tg.s5_std)
        if (s6[e].even()) tg.a5_std.push_back(e);

    // Nonstandard S5: the projective action on the 6 points of the line
    // over F5 (z -> z+1 and z -> 1/z), transitive of order 120.
    tg.s5_prime = closure_of(s6, {"(1 2 3 4 5)", "(1 6)(3 4)"});
    if (tg.s5_prime.size() != 120) throw std::logic_error("segre_table_groups: S5' order");
    {
        std::vector<bool> seen(6, false);
        seen[0] = true;
        std::vector<int> orb{0};
        for (std::size_t h = 0; h < orb.size(); h++)
            for (int e : tg.s5_prime) {
                int img = s6[e](orb[h]);
                if (!seen[img]) { seen[img] = true; orb.push_back(img); }
            }
        if (orb.size() != 6) throw std::logic_error("segre_table_groups: S5' not transitive");
    }
    for (int e : tg.s5_prime)
        if (s6[e].even()) tg.a5_prime.push_back(e);

    tg.s3wr2 = closure_of(s6, {"(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)", "(1 4)(2 5)(3 6)"});
    if (tg.s3wr2.size() != 72) throw std::logic_error("segre_table_groups: S3wrC2 order");

    tg.c2s4_std = closure_of(s6, {"(1 2)", "(3 4 5 6)", "(3 4)"});
    if (tg.c2s4_std.size() != 48) throw std::logic_error("segre_table_groups: C2xS4 order");

    // The other conjugacy class of order 48; the standard one preserves no
    // plane of the cubic, the nonstandard one does (checked by the caller).
    int std_class = sc.class_of(tg.c2s4_std);
    for (int i = 0; i < sc.num_classes(); i++) {
        if (sc.cls(i).order == 48 && i != std_class && sc.cls(i).iso_label == "C2xS4") {
            tg.c2s4_prime = sc.cls(i).rep;
            break;
        }
    }
    if (tg.c2s4_prime.empty()) throw std::logic_error("segre_table_groups: C2xS4'' not found");

    // Plane pinning: the standard group leaves no plane invariant, the
    // nonstandard one leaves exactly one invariant.
    auto invariant_planes = [&](const std::vector<int>& sub) {
        int count = 0;
        for (std::size_t p = 0; p < geo.planes.size(); p++) {
            bool inv = true;
            for (int e : sub) {
                if (plane_action(geo, s6[e])((int)p) != (int)p) { inv = false; break; }
                if (!inv) break;
            }
            if (inv) count++;
        }
        return count;
    };
    int inv_std = invariant_planes(tg.c2s4_std);
    int inv_prime = invariant_planes(tg.c2s4_prime);
    if (!(inv_std == 0 && inv_prime > 0))
        throw std::logic_error("segre_table_groups: plane pinning of the two C2xS4 failed");
    return tg;
}

std::vector<SegreTableRow> segre_rank_table(const SegreModules& mods, const SegreTableGroups& tg) {
    const groupcore::Group& s6 = *mods.s6;
    auto row = [&](const std::string& name, const std::vector<int>& sub) {
        std::vector<int> gens = s6.small_generating_set(sub);
        SegreTableRow r;
        r.name = name;
        r.rk_pic = glattice::invariant_rank(mods.pic, gens);
        r.rk_cl = glattice::invariant_rank(mods.cl, gens);
        return r;
    };
    return {row("S6", tg.s6_full),        row("A6", tg.a6),
            row("S5", tg.s5_std),         row("S5'", tg.s5_prime),
            row("A5", tg.a5_std),         row("A5'", tg.a5_prime),
            row("S3wrC2", tg.s3wr2),      row("C2xS4", tg.c2s4_std),
            row("C2xS4''", tg.c2s4_prime)};
}

}  // namespace segre

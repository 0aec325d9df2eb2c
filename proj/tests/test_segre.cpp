#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segre/classify.hpp"
#include "groupcore/named.hpp"

using namespace segre;
using groupcore::Group;
using groupcore::Perm;
using groupcore::SubgroupClasses;

namespace {

struct Fixture {
    Group s6 = groupcore::build_s6();
    SubgroupClasses sc = SubgroupClasses::enumerate(s6);
    SegreGeometry geo = segre_geometry();
    SegreModules mods = segre_modules(s6);
    glattice::CohomologyReport coh = glattice::h1_all_subgroups(mods.pic, sc, true);
};

const Fixture& fx() {
    static Fixture f;
    return f;
}

}  // namespace

TEST_CASE("ten nodes, all certified") {
    auto nodes = segre_nodes();
    CHECK(nodes.size() == 10);
    // [1:1:1:-1:-1:-1] is a node.
    auto p = exactnum::ProjPoint::parse({"1", "1", "1", "-1", "-1", "-1"});
    bool found = false;
    for (const auto& n : nodes) found |= (n == p);
    CHECK(found);
}

TEST_CASE("node orbit under the full symmetric group is everything") {
    const auto& f = fx();
    std::vector<bool> seen(10, false);
    std::vector<int> orb{0};
    seen[0] = true;
    for (std::size_t h = 0; h < orb.size(); h++)
        for (int g : f.s6.generator_ids()) {
            int img = node_action(f.geo, f.s6[g])(orb[h]);
            if (!seen[img]) { seen[img] = true; orb.push_back(img); }
        }
    CHECK(orb.size() == 10);
}

TEST_CASE("fifteen planes with the pairing shape") {
    const auto& f = fx();
    CHECK(f.geo.planes.size() == 15);
    // {x1+x2 = x3+x4 = x5+x6 = 0} is one of them.
    using exactnum::Eisen;
    exactnum::EisenMat forms(3, 6);
    forms.at(0, 0) = Eisen(1); forms.at(0, 1) = Eisen(1);
    forms.at(1, 2) = Eisen(1); forms.at(1, 3) = Eisen(1);
    forms.at(2, 4) = Eisen(1); forms.at(2, 5) = Eisen(1);
    auto plane = exactnum::ProjSubspace::from_forms(5, forms);
    CHECK(contained_in_cubic(plane));
    bool found = false;
    for (const auto& p : f.geo.planes) found |= (p == plane);
    CHECK(found);
    // Each plane carries exactly 4 nodes.
    for (const auto& inc : f.geo.node_on_plane) {
        int c = 0;
        for (bool b : inc) c += b;
        CHECK(c == 4);
    }
}

TEST_CASE("plane orbit is transitive with stabilizer of index 15") {
    const auto& f = fx();
    std::vector<bool> seen(15, false);
    std::vector<int> orb{0};
    seen[0] = true;
    for (std::size_t h = 0; h < orb.size(); h++)
        for (int g : f.s6.generator_ids()) {
            int img = plane_action(f.geo, f.s6[g])(orb[h]);
            if (!seen[img]) { seen[img] = true; orb.push_back(img); }
        }
    CHECK(orb.size() == 15);
    // Stabilizer order = 720 / 15 = 48.
    int stab = 0;
    for (int e = 0; e < f.s6.order(); e++)
        if (plane_action(f.geo, f.s6[e])(0) == 0) stab++;
    CHECK(stab == 48);
}

TEST_CASE("node-plane incidence is equivariant") {
    const auto& f = fx();
    Perm g = Perm::from_cycles(6, "(1 2 3)(4 5)");
    Perm np = node_action(f.geo, g);
    Perm pp = plane_action(f.geo, g);
    for (std::size_t p = 0; p < f.geo.planes.size(); p++)
        for (std::size_t i = 0; i < f.geo.nodes.size(); i++)
            CHECK(f.geo.node_on_plane[p][i] == f.geo.node_on_plane[pp((int)p)][np((int)i)]);
}

TEST_CASE("marked triple classes are permuted like the nodes") {
    const auto& f = fx();
    // The triple {a,b,c} corresponds to the node with + signs exactly there.
    for (int g : f.s6.generator_ids()) {
        Perm gp = f.mods.generator_perm(g);
        Perm np = node_action(f.geo, f.s6[g]);
        for (int t = 0; t < 10; t++) {
            const auto& tri = f.mods.triple_gens[t];
            std::vector<exactnum::Eisen> c(6, exactnum::Eisen(-1));
            for (int i : tri) c[i] = exactnum::Eisen(1);
            exactnum::ProjPoint node(std::move(c));
            int ni = -1, nj = -1;
            for (int k = 0; k < 10; k++)
                if (f.geo.nodes[k] == node) ni = k;
            // image triple index and image node must correspond
            int timg = gp(15 + t) - 15;
            const auto& tri2 = f.mods.triple_gens[timg];
            std::vector<exactnum::Eisen> c2(6, exactnum::Eisen(-1));
            for (int i : tri2) c2[i] = exactnum::Eisen(1);
            exactnum::ProjPoint node2(std::move(c2));
            for (int k = 0; k < 10; k++)
                if (f.geo.nodes[k] == node2) nj = k;
            REQUIRE(ni >= 0);
            REQUIRE(nj >= 0);
            CHECK(np(ni) == nj);
        }
    }
}

TEST_CASE("the rank table over Pic and Cl") {
    const auto& f = fx();
    SegreTableGroups tg = segre_table_groups(f.s6, f.sc, f.geo);
    auto table = segre_rank_table(f.mods, tg);
    std::vector<int> pic_expected{2, 2, 2, 3, 2, 3, 3, 3, 4};
    std::vector<int> cl_expected{1, 1, 1, 2, 1, 2, 1, 1, 2};
    REQUIRE(table.size() == 9);
    for (int i = 0; i < 9; i++) {
        CAPTURE(table[i].name);
        CHECK(table[i].rk_pic == pic_expected[i]);
        CHECK(table[i].rk_cl == cl_expected[i]);
    }
}

TEST_CASE("H1 of the swap involution on the class group is Z/2") {
    const auto& f = fx();
    int swap12 = f.s6.index_of(Perm::from_cycles(6, "(1 2)"));
    REQUIRE(swap12 >= 0);
    CHECK(glattice::h1(f.mods.cl, {swap12}) == std::vector<long>{2});
}

TEST_CASE("Theorem A classifier counts") {
    const auto& f = fx();
    Classification cls = classify_segre(f.sc, f.geo, f.mods, f.coh);
    CHECK(cls.rows.size() == 55);
    CHECK(cls.nonlinearizable == 19);
    CHECK(cls.fixed_node_classes == 25);
    CHECK(cls.special_c22_class >= 0);

    // <(12)(34), (12)(56)> is nonlinearizable.
    int a = f.s6.index_of(Perm::from_cycles(6, "(1 2)(3 4)"));
    int b = f.s6.index_of(Perm::from_cycles(6, "(1 2)(5 6)"));
    int cid = f.sc.class_of_closure({a, b});
    REQUIRE(cid >= 0);
    for (const auto& r : cls.rows)
        if (r.class_id == cid) CHECK(r.verdict == Verdict::NONLINEARIZABLE);

    // The standard A5 (point stabilizer intersection with evens) is
    // nonlinearizable.
    std::vector<int> a5;
    for (int e = 0; e < f.s6.order(); e++)
        if (f.s6[e](5) == 5 && f.s6[e].even()) a5.push_back(e);
    int a5id = f.sc.class_of(a5);
    REQUIRE(a5id >= 0);
    for (const auto& r : cls.rows)
        if (r.class_id == a5id) CHECK(r.verdict == Verdict::NONLINEARIZABLE);

    // Every class fixing a node embeds in the order-72 wreath class.
    int wreath = -1;
    for (int i = 0; i < f.sc.num_classes(); i++)
        if (f.sc.cls(i).order == 72 && f.sc.cls(i).iso_label == "S3wrC2") wreath = i;
    REQUIRE(wreath >= 0);
    for (const auto& r : cls.rows) {
        const auto& c = f.sc.cls(r.class_id);
        bool fixes = false;
        for (std::size_t i = 0; i < f.geo.nodes.size() && !fixes; i++) {
            fixes = true;
            for (int e : c.gens)
                if (node_action(f.geo, f.s6[e])((int)i) != (int)i) { fixes = false; break; }
        }
        if (fixes) CHECK(f.sc.contains_conjugate(wreath, r.class_id));
    }
}

TEST_CASE("cohomology crosscheck of the classification") {
    const auto& f = fx();
    Classification cls = classify_segre(f.sc, f.geo, f.mods, f.coh);
    CrosscheckReport rep = segre_h1_crosscheck(f.sc, f.geo, cls, f.coh);
    CHECK(rep.linearizable_all_clean);
    CHECK(rep.noplane_nonlin_all_obstructed);
    CHECK(rep.plane_nonlin_all_tagged);
    CHECK(rep.special_c22_clean);
    CHECK(rep.s5prime_chain_clean);
    CHECK(!rep.u1_type_classes.empty());
    CHECK(!rep.w1_type_classes.empty());
    CHECK(!rep.w2_type_classes.empty());
}

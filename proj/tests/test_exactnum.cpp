#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exactnum/poly.hpp"

using namespace exactnum;

namespace {

Eisen w() { return Eisen::omega(); }

std::mt19937 rng(20240611);

Eisen random_eisen() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    return Eisen(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("eisen basic arithmetic") {
    CHECK(w() * w() == Eisen(Rat(-1), Rat(-1)));          // w^2 = -1 - w
    CHECK((Eisen(1) + w()) * (Eisen(1) + w()) == w());    // (1+w)^2 = w
    CHECK(w().inv() == Eisen(Rat(-1), Rat(-1)));          // 1/w = w^2
    CHECK(w().pow(3) == Eisen(1));
    CHECK_THROWS_AS(Eisen(0).inv(), std::domain_error);
}

TEST_CASE("eisen field laws on random inputs") {
    for (int it = 0; it < 300; it++) {
        Eisen x = random_eisen(), y = random_eisen(), z = random_eisen();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inv() == Eisen(1));
    }
}

TEST_CASE("eisen norm and conjugate") {
    for (int it = 0; it < 50; it++) {
        Eisen x = random_eisen();
        CHECK(x * x.conj() == Eisen(x.norm()));
    }
}

TEST_CASE("eisen encoding round trip") {
    CHECK(eisen_to_string(Eisen(0)) == "0");
    CHECK(eisen_to_string(w()) == "w");
    CHECK(eisen_to_string(Eisen(Rat(1, 2), Rat(-1, 3))) == "1/2-1/3*w");
    for (const char* s : {"0", "1", "-2/3", "1/2+1/3*w", "-w", "2*w", "-1-w", "3-2*w"}) {
        Eisen v = eisen_from_string(s);
        CHECK(eisen_from_string(eisen_to_string(v)) == v);
    }
    CHECK(eisen_from_string("2q+1") == Eisen(Rat(1), Rat(2)));
}

TEST_CASE("eisen sqrt") {
    CHECK(*eisen_sqrt(Eisen(4)) == Eisen(2));
    CHECK(eisen_sqrt(Eisen(2)) == std::nullopt);
    // sqrt(-3) = 1 + 2w since (1+2w)^2 = 1 + 4w + 4w^2 = -3.
    auto r = eisen_sqrt(Eisen(-3));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Eisen(-3));
    for (int it = 0; it < 40; it++) {
        Eisen x = random_eisen();
        auto s = eisen_sqrt(x * x);
        REQUIRE(s.has_value());
        CHECK(*s * *s == x * x);
    }
}

TEST_CASE("rref examples") {
    CHECK(rref(EisenMat::identity(3)).rank == 3);
    CHECK(rref(EisenMat(2, 4)).rank == 0);
    // Second row is w times the first: rank 1.
    EisenMat m = EisenMat::from_rows({{Eisen(1), w()}, {w(), w() * w()}});
    CHECK(rref(m).rank == 1);
}

TEST_CASE("rref is idempotent") {
    std::uniform_int_distribution<int> dim(1, 5);
    for (int it = 0; it < 30; it++) {
        EisenMat m(dim(rng), dim(rng));
        for (auto& x : m.data()) x = random_eisen();
        RrefResult r1 = rref(m);
        RrefResult r2 = rref(r1.mat);
        CHECK(r1.mat == r2.mat);
        CHECK(r1.rank == r2.rank);
    }
}

TEST_CASE("kernel examples") {
    CHECK(kernel(EisenMat::identity(4)).rows() == 0);
    EisenMat row = EisenMat::from_rows({{Eisen(1), Eisen(1), Eisen(1)}});
    EisenMat k = kernel(row);
    CHECK(k.rows() == 2);
    CHECK((row * k.transpose()).is_zero());
}

TEST_CASE("matrix inverse") {
    EisenMat m = EisenMat::from_rows({{Eisen(1), w()}, {Eisen(2), Eisen(1)}});
    CHECK(inverse(m) * m == EisenMat::identity(2));
    EisenMat s = EisenMat::from_rows({{Eisen(1), Eisen(1)}, {Eisen(1), Eisen(1)}});
    CHECK_THROWS_AS(inverse(s), std::domain_error);
}

TEST_CASE("proj point canonicalization and action") {
    ProjPoint p = ProjPoint::parse({"2", "4", "0"});
    CHECK(p.to_string() == "[1:2:0]");
    CHECK(ProjPoint::parse({"1/3", "2/3", "0"}) == p);
    CHECK_THROWS_AS(ProjPoint({Eisen(0), Eisen(0)}), std::domain_error);

    EisenMat id = EisenMat::identity(3);
    CHECK(proj_apply(id, p) == p);
    CHECK(proj_apply(id.scaled(Eisen(2)), p) == p);

    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int it = 0; it < 20; it++) {
        EisenMat a(3, 3), b(3, 3);
        for (auto& x : a.data()) x = Eisen(coeff(rng));
        for (auto& x : b.data()) x = Eisen(coeff(rng));
        if (det(a).is_zero() || det(b).is_zero()) continue;
        CHECK(proj_apply(a * b, p) == proj_apply(a, proj_apply(b, p)));
    }
    EisenMat sing(3, 3);
    CHECK_THROWS_AS(proj_apply(sing, p), std::domain_error);
}

TEST_CASE("proj subspace basics") {
    auto p1 = ProjPoint::parse({"1", "0", "0", "1"});
    auto p2 = ProjPoint::parse({"0", "1", "1", "0"});
    ProjSubspace line = ProjSubspace::span_of({p1, p2});
    CHECK(line.dim() == 1);
    CHECK(line.contains(p1));
    CHECK(line.contains(ProjPoint::parse({"1", "1", "1", "1"})));
    CHECK(!line.contains(ProjPoint::parse({"1", "1", "0", "0"})));
    EisenMat f = line.forms();
    CHECK(f.rows() == 2);
    ProjSubspace again = ProjSubspace::from_forms(3, f);
    CHECK(again == line);
}

TEST_CASE("poly parser and arithmetic") {
    std::vector<std::string> vars{"x", "y"};
    Poly p = parse_poly("(x+y)^2 - x^2 - y^2 - 2*x*y", vars);
    CHECK(p.is_zero());
    Poly q = parse_poly("q^2 + q + 1", vars);
    CHECK(q.is_zero());
    Poly f = parse_poly("2*x^2*y - 1/2*y + 3", vars);
    CHECK(f.coeff({2, 1}) == Eisen(2));
    CHECK(f.eval({Eisen(1), Eisen(2)}) == Eisen(Rat(6)));
    Poly df = f.derivative(1);
    CHECK(df == parse_poly("2*x^2 - 1/2", vars));
}

TEST_CASE("poly substitution and division") {
    std::vector<std::string> vars{"x", "y"};
    Poly f = parse_poly("x^2 + y^2", vars);
    Poly g = f.subst({parse_poly("x+y", vars), parse_poly("x-y", vars)});
    CHECK(g == parse_poly("2*x^2 + 2*y^2", vars));

    Poly prod = parse_poly("(x^2+y^2+1)*(x-y)", vars);
    auto dr = prod.divrem(parse_poly("x-y", vars));
    CHECK(dr.rem.is_zero());
    CHECK(dr.quot == parse_poly("x^2+y^2+1", vars));
    auto dr2 = parse_poly("x^3+1", vars).divrem(parse_poly("x-y", vars));
    CHECK(!dr2.rem.is_zero());
}

TEST_CASE("upoly gcd and roots") {
    // (t-1)(t-w)(t-w^2) = t^3 - 1
    UPoly p = UPoly::from_roots({Eisen(1), w(), w() * w()});
    CHECK(p == UPoly(std::vector<Eisen>{Eisen(-1), Eisen(0), Eisen(0), Eisen(1)}));
    auto roots = upoly_roots(p);
    CHECK(roots.complete);
    CHECK(roots.roots.size() == 3);

    UPoly a = UPoly::from_roots({Eisen(1), Eisen(2)});
    UPoly b = UPoly::from_roots({Eisen(2), Eisen(3)});
    CHECK(upoly_gcd(a, b) == UPoly::from_roots({Eisen(2)}));

    // t^2 + t + 1 has roots w, w^2.
    auto rr = upoly_roots(UPoly(std::vector<Eisen>{Eisen(1), Eisen(1), Eisen(1)}));
    CHECK(rr.complete);
    CHECK(rr.roots.size() == 2);
    // t^2 - 2 has no roots in Q(w).
    auto none = upoly_roots(UPoly(std::vector<Eisen>{Eisen(-2), Eisen(0), Eisen(1)}));
    CHECK(!none.complete);
    CHECK(none.roots.empty());
}

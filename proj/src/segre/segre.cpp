#include "segre/segre.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace segre {

using exactnum::Eisen;
using exactnum::EisenMat;

const std::vector<std::string>& segre_vars() {
    static const std::vector<std::string> v{"x1", "x2", "x3", "x4", "x5", "x6"};
    return v;
}

const Poly& segre_cubic() {
    static const Poly f = exactnum::parse_poly("x1^3+x2^3+x3^3+x4^3+x5^3+x6^3", segre_vars());
    return f;
}

const Poly& segre_linear() {
    static const Poly f = exactnum::parse_poly("x1+x2+x3+x4+x5+x6", segre_vars());
    return f;
}

std::vector<ProjPoint> segre_nodes() {
    // The Jacobian of (cubic, hyperplane) drops rank iff 3 x_i^2 is the same
    // for every i, i.e. x_i = +-c with c != 0; the hyperplane then forces
    // three coordinates of each sign.
    std::vector<ProjPoint> out;
    for (int mask = 0; mask < 64; mask++) {
        if (__builtin_popcount(mask) != 3) continue;
        if (!(mask & 1)) continue;  // projective: fix the first sign +
        std::vector<Eisen> c;
        for (int i = 0; i < 6; i++) c.push_back(Eisen(mask >> i & 1 ? 1 : -1));
        out.push_back(ProjPoint(std::move(c)));
    }
    if (out.size() != 10) throw std::logic_error("segre_nodes: count");
    for (const auto& p : out) {
        if (!segre_cubic().eval(p.coords()).is_zero() || !segre_linear().eval(p.coords()).is_zero())
            throw std::logic_error("segre_nodes: point not on the variety");
        Eisen third;
        bool first = true;
        for (int i = 0; i < 6; i++) {
            Eisen d = segre_cubic().derivative(i).eval(p.coords());
            if (first) { third = d; first = false; }
            else if (d != third) throw std::logic_error("segre_nodes: Jacobian has full rank");
        }
    }
    return out;
}

bool contained_in_cubic(const ProjSubspace& s) {
    int k = s.basis().rows();
    std::vector<Poly> args;
    for (int i = 0; i < 6; i++) {
        Poly lin(k);
        for (int j = 0; j < k; j++) {
            if (!s.basis().at(j, i).is_zero())
                lin += Poly::variable(k, j).scaled(s.basis().at(j, i));
        }
        args.push_back(lin);
    }
    return segre_cubic().subst(args).is_zero() && segre_linear().subst(args).is_zero();
}

std::vector<ProjSubspace> segre_planes(const std::vector<ProjPoint>& nodes) {
    std::map<std::uint64_t, std::vector<ProjSubspace>> seen;
    std::vector<ProjSubspace> out;
    int n = (int)nodes.size();
    for (int a = 0; a < n; a++)
        for (int b = a + 1; b < n; b++)
            for (int c = b + 1; c < n; c++) {
                ProjSubspace span = ProjSubspace::span_of({nodes[a], nodes[b], nodes[c]});
                if (span.basis().rows() != 3) continue;
                if (!contained_in_cubic(span)) continue;
                auto& bucket = seen[span.hash()];
                bool dup = false;
                for (const auto& p : bucket) dup |= (p == span);
                if (!dup) {
                    bucket.push_back(span);
                    out.push_back(span);
                }
            }
    std::sort(out.begin(), out.end(), [](const ProjSubspace& a, const ProjSubspace& b) {
        return a < b;
    });
    return out;
}

SegreGeometry segre_geometry() {
    SegreGeometry geo;
    geo.nodes = segre_nodes();
    geo.planes = segre_planes(geo.nodes);
    if (geo.planes.size() != 15) throw std::logic_error("segre_geometry: plane count");
    geo.node_on_plane.assign(geo.planes.size(), std::vector<bool>(geo.nodes.size(), false));
    for (std::size_t p = 0; p < geo.planes.size(); p++)
        for (std::size_t i = 0; i < geo.nodes.size(); i++)
            geo.node_on_plane[p][i] = geo.planes[p].contains(geo.nodes[i]);
    return geo;
}

namespace {

std::vector<Eisen> permute_coords(const Perm& g, const std::vector<Eisen>& c) {
    std::vector<Eisen> out(c.size());
    for (std::size_t i = 0; i < c.size(); i++) out[g(int(i))] = c[i];
    return out;
}

}  // namespace

Perm node_action(const SegreGeometry& geo, const Perm& g) {
    std::vector<int> im(geo.nodes.size(), -1);
    for (std::size_t i = 0; i < geo.nodes.size(); i++) {
        ProjPoint q(permute_coords(g, geo.nodes[i].coords()));
        for (std::size_t j = 0; j < geo.nodes.size(); j++)
            if (geo.nodes[j] == q) { im[i] = (int)j; break; }
        if (im[i] < 0) throw std::logic_error("node_action: node set not stable");
    }
    return Perm::from_images(im);
}

Perm plane_action(const SegreGeometry& geo, const Perm& g) {
    // A plane is determined by its node set.
    std::vector<int> im(geo.planes.size(), -1);
    Perm np = node_action(geo, g);
    for (std::size_t p = 0; p < geo.planes.size(); p++) {
        std::vector<bool> img(geo.nodes.size(), false);
        for (std::size_t i = 0; i < geo.nodes.size(); i++)
            if (geo.node_on_plane[p][i]) img[np(int(i))] = true;
        for (std::size_t q = 0; q < geo.planes.size(); q++) {
            std::vector<bool> qb = geo.node_on_plane[q];
            if (img == qb) { im[p] = (int)q; break; }
        }
        if (im[p] < 0) throw std::logic_error("plane_action: plane set not stable");
    }
    return Perm::from_images(im);
}

}  // namespace segre

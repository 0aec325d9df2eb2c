#include "groupcore/named.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "groupcore/isotype.hpp"

namespace groupcore {

using exactnum::Eisen;
using exactnum::EisenMat;
using exactnum::Poly;
using exactnum::ProjPoint;

const std::vector<std::string>& burk_vars() {
    static const std::vector<std::string> v{"y1", "y2", "y3", "y4", "y5"};
    return v;
}

const Poly& burkhardt_quartic_y() {
    static const Poly f =
        exactnum::parse_poly("y1*(y1^3+y2^3+y3^3+y4^3+y5^3) + 3*y2*y3*y4*y5", burk_vars());
    return f;
}

std::vector<ProjPoint> burk_nodes() {
    std::vector<ProjPoint> out;
    Eisen w = Eisen::omega();
    std::vector<Eisen> mu3{Eisen(1), w, w * w};
    // All y2..y5 nonzero: y = [-z3*z4*z5 : 1 : z3 : z4 : z5].
    for (const Eisen& z3 : mu3)
        for (const Eisen& z4 : mu3)
            for (const Eisen& z5 : mu3)
                out.push_back(ProjPoint({-(z3 * z4 * z5), Eisen(1), z3, z4, z5}));
    // Exactly two of y2..y5 nonzero forces y1 = 0 and a ratio in -mu3.
    for (int i = 1; i <= 4; i++)
        for (int j = i + 1; j <= 4; j++)
            for (const Eisen& z : mu3) {
                std::vector<Eisen> c(5, Eisen(0));
                c[i] = Eisen(1);
                c[j] = -z;
                out.push_back(ProjPoint(std::move(c)));
            }
    if (out.size() != 45) throw std::logic_error("burk_nodes: count");
    return out;
}

EisenMat row_action_matrix(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::string> flat;
    for (const auto& r : rows)
        for (const auto& e : r) flat.push_back(e);
    EisenMat m = EisenMat::parse((int)rows.size(), (int)rows[0].size(), flat);
    return m.transpose();
}

const EisenMat& sigma_printed(int k) {
    static const EisenMat s2 = row_action_matrix({{"1", "0", "0", "0", "0"},
                                                  {"0", "0", "0", "0", "1"},
                                                  {"0", "0", "0", "q^2", "0"},
                                                  {"0", "0", "q", "0", "0"},
                                                  {"0", "1", "0", "0", "0"}});
    static const EisenMat s3 = row_action_matrix({{"-1", "2", "2q", "2q^2", "2"},
                                                  {"q", "q", "-2q^2", "1", "q"},
                                                  {"1", "-2", "q", "q^2", "1"},
                                                  {"1", "1", "q", "q^2", "-2"},
                                                  {"q^2", "q^2", "1", "-2q", "q^2"}});
    static const EisenMat s4 = row_action_matrix({{"1", "0", "0", "0", "0"},
                                                  {"0", "0", "0", "0", "q"},
                                                  {"0", "0", "0", "q^2", "0"},
                                                  {"0", "1", "0", "0", "0"},
                                                  {"0", "0", "1", "0", "0"}});
    static const EisenMat s5 = row_action_matrix({{"-1", "2q", "2q^2", "2", "2"},
                                                  {"q^2", "1", "2q", "q^2", "q^2"},
                                                  {"q", "q^2", "1", "2q", "q"},
                                                  {"q", "q^2", "1", "q", "2q"},
                                                  {"q^2", "2", "q", "q^2", "q^2"}});
    static const EisenMat s6 = row_action_matrix({{"-1", "2q", "2q^2", "2", "2"},
                                                  {"1", "q", "q^2", "1", "2"},
                                                  {"q^2", "2", "q", "q^2", "q^2"},
                                                  {"q^2", "1", "2q", "q^2", "q^2"},
                                                  {"q^2", "1", "q", "2q^2", "q+1"}});
    static const EisenMat s9 = row_action_matrix({{"2q+1", "2q+4", "0", "0", "0"},
                                                  {"-2q-1", "q+2", "0", "0", "0"},
                                                  {"0", "0", "2q+1", "-q+1", "2q+1"},
                                                  {"0", "0", "-q+1", "2q+1", "2q+1"},
                                                  {"0", "0", "-q-2", "-q-2", "2q+1"}});
    switch (k) {
        case 2: return s2;
        case 3: return s3;
        case 4: return s4;
        case 5: return s5;
        case 6: return s6;
        case 9: return s9;
    }
    throw std::runtime_error("sigma_printed: unknown index");
}

EisenMat frame_matrix(const std::vector<ProjPoint>& points, const ProjPoint& unit) {
    int n = (int)points.size();
    EisenMat P(n, n);
    for (int j = 0; j < n; j++)
        for (int i = 0; i < n; i++) P.at(i, j) = points[j].coords()[i];
    // Solve P * lambda = unit; all lambda_i must be nonzero.
    EisenMat aug(n, n + 1);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) aug.at(i, j) = P.at(i, j);
        aug.at(i, n) = unit.coords()[i];
    }
    auto r = exactnum::rref(aug);
    if (r.rank != n) throw std::domain_error("frame_matrix: dependent points");
    for (int j = 0; j < n; j++) {
        const Eisen& l = r.mat.at(j, n);
        if (l.is_zero()) throw std::domain_error("frame_matrix: degenerate unit point");
        for (int i = 0; i < n; i++) P.at(i, j) *= l;
    }
    return P;
}

Group build_s6() { return symmetric_group(6); }

namespace {

// Monomial automorphisms of the quartic: permutations of y2..y5 and cube
// root scalings with product one.
std::vector<EisenMat> monomial_generators() {
    Eisen w = Eisen::omega();
    std::vector<EisenMat> gens;
    auto perm5 = [](std::initializer_list<int> images) {
        EisenMat m(5, 5);
        int j = 0;
        for (int i : images) m.at(i, j++) = Eisen(1);
        return m;
    };
    gens.push_back(perm5({0, 2, 1, 3, 4}));      // swap y2, y3
    gens.push_back(perm5({0, 2, 3, 4, 1}));      // 4-cycle on y2..y5
    EisenMat d1 = EisenMat::identity(5);
    d1.at(1, 1) = w;
    d1.at(2, 2) = w * w;
    gens.push_back(d1);
    EisenMat d2 = EisenMat::identity(5);
    d2.at(2, 2) = w;
    d2.at(3, 3) = w * w;
    gens.push_back(d2);
    return gens;
}

// Depth-first search for quartic automorphisms mapping a node frame to node
// frames, matching the collinearity pattern.  Calls `emit` for every
// automorphism found; stops when emit returns false.
void frame_search(const std::vector<ProjPoint>& nodes, const Poly& quartic,
                  const std::function<bool(const EisenMat&)>& emit) {
    int n = (int)nodes.size();
    // Pair types: does the line through two nodes contain a third?
    std::vector<std::vector<bool>> collinear(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) {
            exactnum::ProjSubspace line = exactnum::ProjSubspace::span_of({nodes[i], nodes[j]});
            bool three = false;
            for (int k = 0; k < n && !three; k++)
                if (k != i && k != j && line.contains(nodes[k])) three = true;
            collinear[i][j] = collinear[j][i] = three;
        }

    // Deterministic source frame: greedily independent nodes plus a unit.
    std::vector<int> src;
    {
        std::vector<ProjPoint> picked;
        for (int i = 0; i < n && (int)src.size() < 5; i++) {
            std::vector<ProjPoint> trial = picked;
            trial.push_back(nodes[i]);
            if (exactnum::ProjSubspace::span_of(trial).basis().rows() == (int)trial.size()) {
                picked = trial;
                src.push_back(i);
            }
        }
        for (int i = 0; i < n; i++) {
            bool used = false;
            for (int s : src) used |= (s == i);
            if (used) continue;
            try {
                frame_matrix(picked, nodes[i]);
                src.push_back(i);
                break;
            } catch (const std::domain_error&) {
            }
        }
        if (src.size() != 6) throw std::logic_error("frame_search: no source frame");
    }

    std::vector<ProjPoint> spts;
    for (int i = 0; i < 5; i++) spts.push_back(nodes[src[i]]);
    EisenMat src_inv = exactnum::inverse(frame_matrix(spts, nodes[src[5]]));

    std::vector<std::uint64_t> node_hash(n);
    std::unordered_map<std::uint64_t, std::vector<int>> node_index;
    for (int i = 0; i < n; i++) {
        node_hash[i] = nodes[i].hash();
        node_index[node_hash[i]].push_back(i);
    }
    auto is_node = [&](const ProjPoint& p) {
        auto it = node_index.find(p.hash());
        if (it != node_index.end())
            for (int k : it->second)
                if (nodes[k] == p) return true;
        return false;
    };

    std::vector<int> img(6, -1);
    std::vector<bool> used(n, false);
    bool stop = false;

    std::function<void(int, const EisenMat&)> dfs = [&](int level, const EisenMat& span) {
        if (stop) return;
        if (level == 6) {
            EisenMat M;
            try {
                std::vector<ProjPoint> tpts;
                for (int i = 0; i < 5; i++) tpts.push_back(nodes[img[i]]);
                M = frame_matrix(tpts, nodes[img[5]]) * src_inv;
            } catch (const std::domain_error&) {
                return;
            }
            for (int k = 0; k < n; k++)
                if (!is_node(exactnum::proj_apply_unchecked(M, nodes[k]))) return;
            if (!poly_compose(quartic, M).proportional_to(quartic)) return;
            if (!emit(M)) stop = true;
            return;
        }
        for (int cand = 0; cand < n; cand++) {
            if (used[cand]) continue;
            bool ok = true;
            for (int prev = 0; prev < level; prev++)
                if (collinear[src[prev]][src[level]] != collinear[img[prev]][cand]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            // Candidates for the first five slots must stay independent.
            EisenMat next_span;
            if (level < 5) {
                next_span = EisenMat(span.rows() + 1, 5);
                for (int i = 0; i < span.rows(); i++)
                    for (int j = 0; j < 5; j++) next_span.at(i, j) = span.at(i, j);
                for (int j = 0; j < 5; j++)
                    next_span.at(span.rows(), j) = nodes[cand].coords()[j];
                if (exactnum::rank(next_span) != span.rows() + 1) continue;
            }
            img[level] = cand;
            used[cand] = true;
            dfs(level + 1, level < 5 ? next_span : span);
            used[cand] = false;
            if (stop) return;
        }
    };
    dfs(0, EisenMat(0, 5));
}

}  // namespace

MatRep build_psp4f3() {
    const Poly& F = burkhardt_quartic_y();
    std::vector<ProjPoint> nodes = burk_nodes();

    std::vector<EisenMat> gens = monomial_generators();
    gens.push_back(sigma2());
    gens.push_back(sigma4());
    for (const auto& g : gens) {
        if (!poly_compose(F, g).proportional_to(F))
            throw std::logic_error("build_psp4f3: generator does not preserve the quartic");
    }
    if (proj_order(sigma2()) != 2 || proj_order(sigma4()) != 4)
        throw std::logic_error("build_psp4f3: sigma order mismatch");

    // Group order is tracked through the faithful action on the nodes; if
    // the closure falls short, adjoin frame-search automorphisms.
    std::unordered_map<std::uint64_t, std::vector<int>> node_at;
    for (int i = 0; i < (int)nodes.size(); i++) node_at[nodes[i].hash()].push_back(i);
    auto induced = [&](const EisenMat& m) {
        std::vector<int> im(nodes.size(), -1);
        for (std::size_t i = 0; i < nodes.size(); i++) {
            ProjPoint q = exactnum::proj_apply_unchecked(m, nodes[i]);
            auto it = node_at.find(q.hash());
            if (it != node_at.end())
                for (int k : it->second)
                    if (nodes[k] == q) { im[i] = k; break; }
            if (im[i] < 0) throw std::runtime_error("build_psp4f3: node set not stable");
        }
        return Perm::from_images(im);
    };

    std::vector<Perm> gperms;
    for (const auto& g : gens) gperms.push_back(induced(g));
    Group G = Group::closure(gperms);
    if (G.order() < 25920) {
        frame_search(nodes, F, [&](const EisenMat& M) {
            Perm p = induced(M);
            if (G.index_of(p) >= 0) return true;  // already known; keep searching
            gens.push_back(M);
            gperms.push_back(p);
            G = Group::closure(gperms);
            return G.order() < 25920;
        });
    }
    if (G.order() != 25920) throw std::logic_error("build_psp4f3: group order != 25920");

    MatRep rep(gens, nodes);
    if (rep.points().size() != 45) throw std::logic_error("build_psp4f3: node orbit size != 45");
    if (rep.group().order() != 25920) throw std::logic_error("build_psp4f3: perm group order != 25920");
    return rep;
}

}  // namespace groupcore

#include "glattice/glattice.hpp"

#include "exactnum/rat.hpp"

#include <algorithm>
#include <unordered_map>
#include <stdexcept>

namespace glattice {

GLattice::GLattice(const Group* ambient, int rank, std::function<IntMat(int)> act,
                   std::vector<std::string> labels)
    : G_(ambient), rank_(rank), act_(std::move(act)), labels_(std::move(labels)) {}

const IntMat& GLattice::action(int elem) const {
    auto it = cache_.find(elem);
    if (it != cache_.end()) return it->second;
    IntMat m = act_(elem);
    if (m.rows() != rank_ || m.cols() != rank_)
        throw std::logic_error("GLattice: action matrix size mismatch");
    return cache_.emplace(elem, std::move(m)).first->second;
}

GLattice GLattice::dual() const {
    const GLattice* self = this;
    return GLattice(
        G_, rank_,
        [self](int elem) { return unimodular_inverse(self->action(elem)).transpose(); }, labels_);
}

void GLattice::verify_action() const {
    if (!action(0).is_identity()) throw std::logic_error("GLattice: action(1) != I");
    for (int a : G_->generator_ids())
        for (int b : G_->generator_ids()) {
            if (!(action(G_->mult(a, b)) == action(a) * action(b)))
                throw std::logic_error("GLattice: action is not a homomorphism");
        }
}

GLattice permutation_lattice(const Group* ambient, int n, std::function<Perm(int)> basis_perm,
                             std::vector<std::string> labels) {
    auto act = [basis_perm, n](int elem) {
        Perm p = basis_perm(elem);
        if (p.degree() != n) throw std::logic_error("permutation_lattice: degree mismatch");
        // Transposed permutation matrix, so that act is a homomorphism for
        // apply-left-to-right permutation composition.
        IntMat m(n, n);
        for (int i = 0; i < n; i++) m.at(i, p(i)) = 1;
        return m;
    };
    return GLattice(ambient, n, act, std::move(labels));
}

GLattice quotient_lattice(const Group* ambient, int n, const std::vector<std::vector<Int>>& relations,
                          const std::function<Perm(int)>& basis_perm, QuotientInfo* info,
                          std::vector<std::string> labels) {
    // Relations as columns of an n x m matrix.
    IntMat A(n, (int)relations.size());
    for (int j = 0; j < (int)relations.size(); j++) {
        if ((int)relations[j].size() != n) throw std::runtime_error("quotient_lattice: row size");
        for (int i = 0; i < n; i++) A.at(i, j) = relations[j][i];
    }
    SNFResult s = smith_normal_form(A);
    int k = (int)s.divisors.size();
    int r = n - k;
    IntMat W = unimodular_inverse(s.left);
    IntMat basis(n, r), proj(r, n), sat(n, k);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < r; j++) basis.at(i, j) = W.at(i, k + j);
    for (int i = 0; i < r; i++)
        for (int j = 0; j < n; j++) proj.at(i, j) = s.left.at(k + i, j);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < k; j++) sat.at(i, j) = W.at(i, j);

    if (info) {
        info->ambient_rank = n;
        info->relation_rank = k;
        info->torsion.clear();
        for (const Int& d : s.divisors)
            if (d != 1) info->torsion.push_back(d);
    }

    auto big_act = [basis_perm, n](int elem) {
        Perm p = basis_perm(elem);
        if (p.degree() != n) throw std::logic_error("quotient_lattice: degree mismatch");
        IntMat m(n, n);
        for (int i = 0; i < n; i++) m.at(i, p(i)) = 1;
        return m;
    };

    // Stability of the saturated relation lattice under the generators.
    for (int g : ambient->generator_ids()) {
        IntMat moved = proj * (big_act(g) * sat);
        if (!moved.is_zero())
            throw std::runtime_error("quotient_lattice: action does not stabilize the relations");
    }

    auto act = [big_act, basis, proj](int elem) { return proj * (big_act(elem) * basis); };
    return GLattice(ambient, r, act, std::move(labels));
}

int invariant_rank(const GLattice& L, const std::vector<int>& gens) {
    int r = L.rank();
    std::vector<int> use = gens.empty() ? std::vector<int>{0} : gens;
    IntMat stack((int)use.size() * r, r);
    for (int k = 0; k < (int)use.size(); k++) {
        IntMat d = L.action(use[k]) - IntMat::identity(r);
        for (int i = 0; i < r; i++)
            for (int j = 0; j < r; j++) stack.at(k * r + i, j) = d.at(i, j);
    }
    return r - rank(stack);
}

std::vector<long> h1(const GLattice& L, const std::vector<int>& gens_in) {
    const Group& G = L.group();
    int r = L.rank();
    std::vector<int> gens;
    for (int g : gens_in)
        if (g != 0) gens.push_back(g);
    if (gens.empty()) return {};
    int k = (int)gens.size();

    // Elements of the subgroup and their action matrices.
    std::vector<int> elems = G.subgroup_closure(gens);
    int h = (int)elems.size();
    std::vector<int> pos((std::size_t)G.order(), -1);
    for (int i = 0; i < h; i++) pos[elems[i]] = i;

    std::vector<IntMat> rho(h);
    std::vector<IntMat> expr(h);  // cocycle value as an r x (k*r) matrix in the unknowns
    std::vector<bool> have(h, false);
    int id_pos = pos[0];
    rho[id_pos] = IntMat::identity(r);
    expr[id_pos] = IntMat(r, k * r);
    have[id_pos] = true;

    std::vector<IntMat> rho_gen(k);
    for (int j = 0; j < k; j++) rho_gen[j] = L.action(gens[j]);

    std::vector<std::vector<Int>> constraints;
    std::unordered_map<std::uint64_t, std::vector<int>> row_hashes;
    auto add_constraint = [&](std::vector<Int> row) {
        std::uint64_t hsh = 0x9e3779b97f4a7c15ULL;
        for (const Int& x : row) hsh = groupcore::hash_combine_ids(hsh, exactnum::hash_int(x));
        auto& bucket = row_hashes[hsh];
        for (int idx : bucket)
            if (constraints[idx] == row) return;
        bucket.push_back((int)constraints.size());
        constraints.push_back(std::move(row));
    };
    std::vector<int> queue{id_pos};
    for (std::size_t head = 0; head < queue.size(); head++) {
        int vp = queue[head];
        int v = elems[vp];
        for (int j = 0; j < k; j++) {
            int wq = G.mult(v, gens[j]);
            int wp = pos[wq];
            // expr(v*g) = expr(v) + rho(v) * E_j.
            IntMat e = expr[vp];
            const IntMat& rv = rho[vp];
            for (int a = 0; a < r; a++)
                for (int b = 0; b < r; b++)
                    if (rv.at(a, b) != 0) e.at(a, j * r + b) += rv.at(a, b);
            if (!have[wp]) {
                have[wp] = true;
                rho[wp] = rho[vp] * rho_gen[j];
                expr[wp] = std::move(e);
                queue.push_back(wp);
            } else {
                IntMat diff = e - expr[wp];
                for (int a = 0; a < r; a++) {
                    bool nz = false;
                    for (int b = 0; b < k * r; b++)
                        if (diff.at(a, b) != 0) { nz = true; break; }
                    if (!nz) continue;
                    std::vector<Int> row((std::size_t)k * r);
                    for (int b = 0; b < k * r; b++) row[b] = diff.at(a, b);
                    add_constraint(std::move(row));
                }
            }
        }
    }

    IntMat A((int)constraints.size(), k * r);
    for (int i = 0; i < (int)constraints.size(); i++)
        for (int j = 0; j < k * r; j++) A.at(i, j) = constraints[i][j];
    IntMat K = kernel_lattice(A);  // rows form a saturated basis of Z^1
    int z = K.rows();

    // Coboundaries: m -> (rho(g_j) m - m)_j, expressed in kernel coordinates.
    IntMat Kt = K.transpose();  // (k*r) x z
    SNFResult s = smith_normal_form(Kt);
    for (const Int& d : s.divisors)
        if (d != 1) throw std::logic_error("h1: kernel basis not saturated");
    if ((int)s.divisors.size() != z) throw std::logic_error("h1: kernel rank");

    IntMat Y(r, z);
    for (int i = 0; i < r; i++) {
        std::vector<Int> beta((std::size_t)k * r);
        for (int j = 0; j < k; j++)
            for (int a = 0; a < r; a++)
                beta[j * r + a] = rho_gen[j].at(a, i) - (a == i ? 1 : 0);
        // Solve Kt y = beta using the precomputed SNF.
        std::vector<Int> ub((std::size_t)k * r);
        for (int a = 0; a < k * r; a++) {
            Int acc = 0;
            for (int b = 0; b < k * r; b++)
                if (s.left.at(a, b) != 0 && beta[b] != 0) acc += s.left.at(a, b) * beta[b];
            ub[a] = acc;
        }
        for (int a = z; a < k * r; a++)
            if (ub[a] != 0) throw std::logic_error("h1: coboundary outside cocycles");
        for (int a = 0; a < z; a++) {
            Int acc = 0;
            for (int b = 0; b < z; b++)
                if (s.right.at(a, b) != 0 && ub[b] != 0) acc += s.right.at(a, b) * ub[b];
            Y.at(i, a) = acc;
        }
    }

    SNFResult q = smith_normal_form(Y);
    if ((int)q.divisors.size() != z) throw std::logic_error("h1: H^1 has free part");
    std::vector<long> out;
    for (const Int& d : q.divisors)
        if (d != 1) out.push_back((long)d);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace glattice

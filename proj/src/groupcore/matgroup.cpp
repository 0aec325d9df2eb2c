#include "groupcore/matgroup.hpp"

#include <stdexcept>

namespace groupcore {

using exactnum::Eisen;
using exactnum::EisenMat;
using exactnum::Poly;
using exactnum::ProjPoint;

std::vector<EisenMat> proj_matrix_closure(const std::vector<EisenMat>& gens, std::size_t bound) {
    if (gens.empty()) throw std::runtime_error("proj_matrix_closure: no generators");
    int n = gens[0].rows();
    for (const auto& g : gens) {
        if (g.rows() != n || g.cols() != n)
            throw std::runtime_error("proj_matrix_closure: size mismatch");
        if (det(g).is_zero()) throw std::domain_error("proj_matrix_closure: singular generator");
    }
    std::vector<EisenMat> elems{EisenMat::identity(n)};
    std::unordered_map<std::uint64_t, std::vector<int>> index;
    auto find = [&](const EisenMat& m) {
        auto it = index.find(m.hash());
        if (it != index.end())
            for (int k : it->second)
                if (elems[k] == m) return k;
        return -1;
    };
    index[elems[0].hash()].push_back(0);
    std::vector<EisenMat> cgens;
    for (const auto& g : gens) cgens.push_back(g.proj_canonical());
    for (std::size_t head = 0; head < elems.size(); head++) {
        for (const auto& g : cgens) {
            EisenMat img = (elems[head] * g).proj_canonical();
            if (find(img) < 0) {
                index[img.hash()].push_back((int)elems.size());
                elems.push_back(std::move(img));
                if (elems.size() > bound)
                    throw std::runtime_error("proj_matrix_closure: bound exceeded");
            }
        }
    }
    return elems;
}

long proj_order(const EisenMat& m, long bound) {
    EisenMat c = m.proj_canonical();
    EisenMat p = c;
    EisenMat id = EisenMat::identity(m.rows());
    for (long k = 1; k <= bound; k++) {
        if (p == id) return k;
        p = (p * c).proj_canonical();
    }
    throw std::runtime_error("proj_order: bound exceeded");
}

MatRep::MatRep(std::vector<EisenMat> gen_mats, const std::vector<ProjPoint>& seeds,
               std::size_t point_bound, std::size_t group_bound) {
    if (gen_mats.empty()) throw std::runtime_error("MatRep: no generators");
    // Orbit closure of the seed points under the generator matrices.
    std::unordered_map<std::uint64_t, std::vector<int>> seen;
    auto find_pt = [&](const ProjPoint& p) {
        auto it = seen.find(p.hash());
        if (it != seen.end())
            for (int k : it->second)
                if (points_[k] == p) return k;
        return -1;
    };
    for (const auto& s : seeds) {
        if (find_pt(s) < 0) {
            seen[s.hash()].push_back((int)points_.size());
            points_.push_back(s);
        }
    }
    for (std::size_t head = 0; head < points_.size(); head++) {
        for (const auto& g : gen_mats) {
            ProjPoint img = exactnum::proj_apply_unchecked(g, points_[head]);
            if (find_pt(img) < 0) {
                seen[img.hash()].push_back((int)points_.size());
                points_.push_back(std::move(img));
                if (points_.size() > point_bound)
                    throw std::runtime_error("MatRep: point orbit bound exceeded");
            }
        }
    }
    point_index_ = std::move(seen);

    // Permutations induced by the generators; requires faithfulness later.
    std::vector<Perm> gen_perms;
    for (const auto& g : gen_mats) gen_perms.push_back(induced_perm(g));
    group_ = Group::closure(gen_perms, group_bound);

    // Align matrices with the group's generator ids and build Schreier words.
    gen_mats_.assign(group_.generator_ids().size(), EisenMat());
    for (std::size_t k = 0; k < gen_mats.size(); k++) {
        int id = group_.index_of(gen_perms[k]);
        for (std::size_t j = 0; j < group_.generator_ids().size(); j++)
            if (group_.generator_ids()[j] == id && gen_mats_[j].rows() == 0)
                gen_mats_[j] = gen_mats[k].proj_canonical();
    }
    for (const auto& m : gen_mats_)
        if (m.rows() == 0) throw std::logic_error("MatRep: generator alignment failed");

    parent_.assign(group_.order(), -1);
    via_.assign(group_.order(), -1);
    std::vector<int> queue{0};
    std::vector<bool> vis((std::size_t)group_.order(), false);
    vis[0] = true;
    for (std::size_t head = 0; head < queue.size(); head++) {
        for (std::size_t j = 0; j < group_.generator_ids().size(); j++) {
            int img = group_.mult(queue[head], group_.generator_ids()[j]);
            if (!vis[img]) {
                vis[img] = true;
                parent_[img] = queue[head];
                via_[img] = (int)j;
                queue.push_back(img);
            }
        }
    }
    matrix_cache_.emplace(0, EisenMat::identity(gen_mats_[0].rows()));
}

int MatRep::point_index(const ProjPoint& p) const {
    auto it = point_index_.find(p.hash());
    if (it != point_index_.end())
        for (int k : it->second)
            if (points_[k] == p) return k;
    return -1;
}

Perm MatRep::induced_perm(const EisenMat& m) const {
    std::vector<int> im(points_.size());
    for (std::size_t i = 0; i < points_.size(); i++) {
        int j = point_index(exactnum::proj_apply_unchecked(m, points_[i]));
        if (j < 0) throw std::runtime_error("MatRep: matrix does not stabilize the point set");
        im[i] = j;
    }
    return Perm::from_images(im);
}

const EisenMat& MatRep::matrix_of(int elem) const {
    auto it = matrix_cache_.find(elem);
    if (it != matrix_cache_.end()) return it->second;
    // Permutations compose left to right while column-action matrices
    // compose right to left, so the generator multiplies on the left.
    const EisenMat& par = matrix_of(parent_[elem]);
    EisenMat m = (gen_mats_[via_[elem]] * par).proj_canonical();
    return matrix_cache_.emplace(elem, std::move(m)).first->second;
}

int MatRep::element_of(const EisenMat& m) const {
    Perm p;
    try {
        p = induced_perm(m);
    } catch (const std::runtime_error&) {
        return -1;
    }
    int id = group_.index_of(p);
    if (id < 0) return -1;
    if (!(matrix_of(id) == m.proj_canonical())) return -1;
    return id;
}

Poly poly_compose(const Poly& f, const EisenMat& m) {
    if (m.rows() != f.nvars() || m.cols() != f.nvars())
        throw std::runtime_error("poly_compose: size mismatch");
    std::vector<Poly> args;
    for (int j = 0; j < m.rows(); j++) {
        Poly lin(f.nvars());
        for (int i = 0; i < m.cols(); i++) {
            if (!m.at(j, i).is_zero())
                lin += Poly::variable(f.nvars(), i).scaled(m.at(j, i));
        }
        args.push_back(lin);
    }
    return f.subst(args);
}

}  // namespace groupcore

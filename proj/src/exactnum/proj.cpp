#include "exactnum/proj.hpp"

#include <sstream>
#include <stdexcept>

namespace exactnum {

ProjPoint::ProjPoint(std::vector<Eisen> coords) : c_(std::move(coords)) {
    const Eisen* lead = nullptr;
    for (const auto& x : c_)
        if (!x.is_zero()) { lead = &x; break; }
    if (!lead) throw std::domain_error("ProjPoint: zero vector");
    Eisen inv = lead->inv();
    for (auto& x : c_) x *= inv;
}

ProjPoint ProjPoint::parse(const std::vector<std::string>& coords) {
    std::vector<Eisen> v;
    v.reserve(coords.size());
    for (const auto& s : coords) v.push_back(eisen_from_string(s));
    return ProjPoint(std::move(v));
}

bool ProjPoint::operator<(const ProjPoint& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = 0; i < c_.size(); i++)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

std::uint64_t ProjPoint::hash() const {
    std::uint64_t h = 0x51ed270b;
    for (const auto& x : c_) h = hash_combine(h, x.hash());
    return h;
}

std::string ProjPoint::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); i++) os << (i ? ":" : "") << eisen_to_string(c_[i]);
    os << "]";
    return os.str();
}

ProjPoint proj_apply(const EisenMat& m, const ProjPoint& p) {
    if (m.rows() != m.cols() || m.rows() != (int)p.coords().size())
        throw std::domain_error("proj_apply: size mismatch");
    if (det(m).is_zero()) throw std::domain_error("proj_apply: singular matrix");
    return ProjPoint(m.apply(p.coords()));
}

ProjPoint proj_apply_unchecked(const EisenMat& m, const ProjPoint& p) {
    return ProjPoint(m.apply(p.coords()));
}

ProjSubspace::ProjSubspace(int ambient_dim, const EisenMat& spanning_rows) : ambient_(ambient_dim) {
    if (spanning_rows.cols() != ambient_dim + 1)
        throw std::runtime_error("ProjSubspace: ambient dimension mismatch");
    RrefResult r = rref(spanning_rows);
    basis_ = EisenMat(r.rank, spanning_rows.cols());
    for (int i = 0; i < r.rank; i++)
        for (int j = 0; j < spanning_rows.cols(); j++) basis_.at(i, j) = r.mat.at(i, j);
}

ProjSubspace ProjSubspace::span_of(const std::vector<ProjPoint>& pts) {
    if (pts.empty()) throw std::runtime_error("ProjSubspace::span_of: empty");
    EisenMat m((int)pts.size(), (int)pts[0].coords().size());
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++) m.at(i, j) = pts[i].coords()[j];
    return ProjSubspace(m.cols() - 1, m);
}

ProjSubspace ProjSubspace::from_forms(int ambient_dim, const EisenMat& forms) {
    if (forms.cols() != ambient_dim + 1)
        throw std::runtime_error("ProjSubspace::from_forms: ambient dimension mismatch");
    return ProjSubspace(ambient_dim, kernel(forms));
}

EisenMat ProjSubspace::forms() const {
    RrefResult r = rref(kernel(basis_));
    EisenMat out(r.rank, basis_.cols());
    for (int i = 0; i < r.rank; i++)
        for (int j = 0; j < basis_.cols(); j++) out.at(i, j) = r.mat.at(i, j);
    return out;
}

bool ProjSubspace::contains(const ProjPoint& p) const {
    EisenMat m(basis_.rows() + 1, basis_.cols());
    for (int i = 0; i < basis_.rows(); i++)
        for (int j = 0; j < basis_.cols(); j++) m.at(i, j) = basis_.at(i, j);
    for (int j = 0; j < basis_.cols(); j++) m.at(basis_.rows(), j) = p.coords()[j];
    return rank(m) == basis_.rows();
}

bool ProjSubspace::contains(const ProjSubspace& o) const {
    return join(o).basis().rows() == basis_.rows();
}

ProjPoint ProjSubspace::basis_point(int i) const {
    std::vector<Eisen> v(basis_.cols());
    for (int j = 0; j < basis_.cols(); j++) v[j] = basis_.at(i, j);
    return ProjPoint(std::move(v));
}

ProjSubspace ProjSubspace::join(const ProjSubspace& o) const {
    EisenMat m(basis_.rows() + o.basis_.rows(), basis_.cols());
    for (int i = 0; i < basis_.rows(); i++)
        for (int j = 0; j < basis_.cols(); j++) m.at(i, j) = basis_.at(i, j);
    for (int i = 0; i < o.basis_.rows(); i++)
        for (int j = 0; j < basis_.cols(); j++) m.at(basis_.rows() + i, j) = o.basis_.at(i, j);
    return ProjSubspace(ambient_, m);
}

ProjSubspace ProjSubspace::meet(const ProjSubspace& o) const {
    EisenMat f1 = forms(), f2 = o.forms();
    EisenMat m(f1.rows() + f2.rows(), f1.cols());
    for (int i = 0; i < f1.rows(); i++)
        for (int j = 0; j < f1.cols(); j++) m.at(i, j) = f1.at(i, j);
    for (int i = 0; i < f2.rows(); i++)
        for (int j = 0; j < f2.cols(); j++) m.at(f1.rows() + i, j) = f2.at(i, j);
    return ProjSubspace(ambient_, kernel(m));
}

ProjSubspace ProjSubspace::apply(const EisenMat& m) const {
    return ProjSubspace(ambient_, basis_ * m.transpose());
}

}  // namespace exactnum

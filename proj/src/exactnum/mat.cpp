#include "exactnum/mat.hpp"

#include <sstream>
#include <stdexcept>

namespace exactnum {

EisenMat EisenMat::identity(int n) {
    EisenMat m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = Eisen(1);
    return m;
}

EisenMat EisenMat::from_rows(const std::vector<std::vector<Eisen>>& rows) {
    if (rows.empty()) return EisenMat(0, 0);
    EisenMat m((int)rows.size(), (int)rows[0].size());
    for (int i = 0; i < m.rows(); i++) {
        if ((int)rows[i].size() != m.cols()) throw std::runtime_error("EisenMat: ragged rows");
        for (int j = 0; j < m.cols(); j++) m.at(i, j) = rows[i][j];
    }
    return m;
}

EisenMat EisenMat::parse(int rows, int cols, const std::vector<std::string>& entries) {
    if ((int)entries.size() != rows * cols) throw std::runtime_error("EisenMat::parse: entry count");
    EisenMat m(rows, cols);
    for (int i = 0; i < rows * cols; i++) m.data()[i] = eisen_from_string(entries[i]);
    return m;
}

EisenMat EisenMat::operator*(const EisenMat& o) const {
    if (c_ != o.r_) throw std::runtime_error("EisenMat: dimension mismatch in product");
    EisenMat out(r_, o.c_);
    for (int i = 0; i < r_; i++)
        for (int k = 0; k < c_; k++) {
            const Eisen& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.c_; j++) {
                const Eisen& b = o.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    return out;
}

EisenMat EisenMat::operator+(const EisenMat& o) const {
    EisenMat out(r_, c_);
    for (size_t i = 0; i < e_.size(); i++) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

EisenMat EisenMat::operator-(const EisenMat& o) const {
    EisenMat out(r_, c_);
    for (size_t i = 0; i < e_.size(); i++) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

EisenMat EisenMat::scaled(const Eisen& c) const {
    EisenMat out(r_, c_);
    for (size_t i = 0; i < e_.size(); i++) out.e_[i] = e_[i] * c;
    return out;
}

EisenMat EisenMat::transpose() const {
    EisenMat out(c_, r_);
    for (int i = 0; i < r_; i++)
        for (int j = 0; j < c_; j++) out.at(j, i) = at(i, j);
    return out;
}

bool EisenMat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Eisen> EisenMat::apply(const std::vector<Eisen>& v) const {
    if ((int)v.size() != c_) throw std::runtime_error("EisenMat::apply: dimension mismatch");
    std::vector<Eisen> out(r_, Eisen(0));
    for (int i = 0; i < r_; i++)
        for (int j = 0; j < c_; j++)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

std::vector<Eisen> EisenMat::apply_left(const std::vector<Eisen>& v) const {
    if ((int)v.size() != r_) throw std::runtime_error("EisenMat::apply_left: dimension mismatch");
    std::vector<Eisen> out(c_, Eisen(0));
    for (int i = 0; i < r_; i++)
        if (!v[i].is_zero())
            for (int j = 0; j < c_; j++)
                if (!at(i, j).is_zero()) out[j] += v[i] * at(i, j);
    return out;
}

EisenMat EisenMat::proj_canonical() const {
    for (const auto& x : e_) {
        if (!x.is_zero()) {
            Eisen inv = x.inv();
            EisenMat out(r_, c_);
            for (size_t i = 0; i < e_.size(); i++) out.e_[i] = e_[i] * inv;
            return out;
        }
    }
    return *this;
}

std::uint64_t EisenMat::hash() const {
    std::uint64_t h = hash_combine(r_, c_);
    for (const auto& x : e_) h = hash_combine(h, x.hash());
    return h;
}

bool EisenMat::lex_less(const EisenMat& o) const {
    if (r_ != o.r_) return r_ < o.r_;
    if (c_ != o.c_) return c_ < o.c_;
    for (size_t i = 0; i < e_.size(); i++) {
        if (e_[i] != o.e_[i]) return e_[i] < o.e_[i];
    }
    return false;
}

std::string EisenMat::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < r_; i++) {
        os << (i ? "; " : "[");
        for (int j = 0; j < c_; j++) os << (j ? "," : "") << eisen_to_string(at(i, j));
    }
    os << "]";
    return os.str();
}

RrefResult rref(const EisenMat& m) {
    RrefResult res;
    res.mat = m;
    EisenMat& a = res.mat;
    int pr = 0;
    for (int col = 0; col < a.cols() && pr < a.rows(); col++) {
        int piv = -1;
        for (int i = pr; i < a.rows(); i++)
            if (!a.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != pr)
            for (int j = 0; j < a.cols(); j++) std::swap(a.at(piv, j), a.at(pr, j));
        Eisen inv = a.at(pr, col).inv();
        for (int j = col; j < a.cols(); j++) a.at(pr, j) *= inv;
        for (int i = 0; i < a.rows(); i++) {
            if (i == pr || a.at(i, col).is_zero()) continue;
            Eisen f = a.at(i, col);
            for (int j = col; j < a.cols(); j++) a.at(i, j) -= f * a.at(pr, j);
        }
        res.pivots.push_back(col);
        pr++;
    }
    res.rank = pr;
    return res;
}

EisenMat kernel(const EisenMat& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : r.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols(); j++)
        if (!is_pivot[j]) free_cols.push_back(j);
    EisenMat out((int)free_cols.size(), m.cols());
    for (int k = 0; k < (int)free_cols.size(); k++) {
        int f = free_cols[k];
        out.at(k, f) = Eisen(1);
        for (int i = 0; i < r.rank; i++) out.at(k, r.pivots[i]) = -r.mat.at(i, f);
    }
    return out;
}

int rank(const EisenMat& m) { return rref(m).rank; }

Eisen det(const EisenMat& m) {
    if (m.rows() != m.cols()) throw std::runtime_error("det: matrix not square");
    EisenMat a = m;
    Eisen d(1);
    int n = a.rows();
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int i = col; i < n; i++)
            if (!a.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return Eisen(0);
        if (piv != col) {
            for (int j = 0; j < n; j++) std::swap(a.at(piv, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        Eisen inv = a.at(col, col).inv();
        for (int i = col + 1; i < n; i++) {
            if (a.at(i, col).is_zero()) continue;
            Eisen f = a.at(i, col) * inv;
            for (int j = col; j < n; j++) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return d;
}

EisenMat inverse(const EisenMat& m) {
    if (m.rows() != m.cols()) throw std::domain_error("inverse: matrix not square");
    int n = m.rows();
    EisenMat aug(n, 2 * n);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Eisen(1);
    }
    RrefResult r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
    EisenMat out(n, n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) out.at(i, j) = r.mat.at(i, n + j);
    return out;
}

}  // namespace exactnum

#include "glattice/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace glattice {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return IntMat(0, 0);
    IntMat m((int)rows.size(), (int)rows[0].size());
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++) m.at(i, j) = rows[i][j];
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (c_ != o.r_) throw std::runtime_error("IntMat: product size mismatch");
    IntMat out(r_, o.c_);
    for (int i = 0; i < r_; i++)
        for (int k = 0; k < c_; k++) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.c_; j++)
                if (o.at(k, j) != 0) out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

IntMat IntMat::operator+(const IntMat& o) const {
    IntMat out(r_, c_);
    for (std::size_t i = 0; i < e_.size(); i++) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

IntMat IntMat::operator-(const IntMat& o) const {
    IntMat out(r_, c_);
    for (std::size_t i = 0; i < e_.size(); i++) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

IntMat IntMat::transpose() const {
    IntMat out(c_, r_);
    for (int i = 0; i < r_; i++)
        for (int j = 0; j < c_; j++) out.at(j, i) = at(i, j);
    return out;
}

bool IntMat::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

bool IntMat::is_identity() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; i++)
        for (int j = 0; j < c_; j++)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
    if ((int)v.size() != c_) throw std::runtime_error("IntMat::apply: size mismatch");
    std::vector<Int> out(r_);
    for (int i = 0; i < r_; i++)
        for (int j = 0; j < c_; j++)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < r_; i++) {
        os << (i ? "; " : "[");
        for (int j = 0; j < c_; j++) os << (j ? "," : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

int rank(const IntMat& m) {
    // Fraction-free Gaussian elimination (Bareiss).
    IntMat a = m;
    int rows = a.rows(), cols = a.cols();
    Int prev = 1;
    int r = 0;
    for (int col = 0; col < cols && r < rows; col++) {
        int piv = -1;
        for (int i = r; i < rows; i++)
            if (a.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; j++) std::swap(a.at(piv, j), a.at(r, j));
        for (int i = r + 1; i < rows; i++) {
            for (int j = col + 1; j < cols; j++) {
                Int num = a.at(r, col) * a.at(i, j) - a.at(i, col) * a.at(r, j);
                a.at(i, j) = num / prev;  // exact division, Bareiss invariant
            }
            a.at(i, col) = 0;
        }
        prev = a.at(r, col);
        r++;
    }
    return r;
}

namespace {

struct SnfWork {
    IntMat a, u, v;

    void swap_rows(int i, int j) {
        for (int k = 0; k < a.cols(); k++) std::swap(a.at(i, k), a.at(j, k));
        for (int k = 0; k < u.cols(); k++) std::swap(u.at(i, k), u.at(j, k));
    }
    void swap_cols(int i, int j) {
        for (int k = 0; k < a.rows(); k++) std::swap(a.at(k, i), a.at(k, j));
        for (int k = 0; k < v.rows(); k++) std::swap(v.at(k, i), v.at(k, j));
    }
    void addmul_row(int dst, int src, const Int& f) {
        for (int k = 0; k < a.cols(); k++) a.at(dst, k) += f * a.at(src, k);
        for (int k = 0; k < u.cols(); k++) u.at(dst, k) += f * u.at(src, k);
    }
    void addmul_col(int dst, int src, const Int& f) {
        for (int k = 0; k < a.rows(); k++) a.at(k, dst) += f * a.at(k, src);
        for (int k = 0; k < v.rows(); k++) v.at(k, dst) += f * v.at(k, src);
    }
    void negate_row(int i) {
        for (int k = 0; k < a.cols(); k++) a.at(i, k) = -a.at(i, k);
        for (int k = 0; k < u.cols(); k++) u.at(i, k) = -u.at(i, k);
    }

    void diagonalize() {
        int n = a.rows(), m = a.cols();
        for (int t = 0; t < n && t < m; t++) {
            int pi = -1, pj = -1;
            for (int i = t; i < n; i++)
                for (int j = t; j < m; j++) {
                    if (a.at(i, j) == 0) continue;
                    if (pi < 0 || abs(a.at(i, j)) < abs(a.at(pi, pj))) { pi = i; pj = j; }
                }
            if (pi < 0) return;
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                bool cleared = true;
                for (int i = t + 1; i < n; i++) {
                    if (a.at(i, t) == 0) continue;
                    Int q = a.at(i, t) / a.at(t, t);
                    addmul_row(i, t, -q);
                    if (a.at(i, t) != 0) { swap_rows(t, i); cleared = false; }
                }
                for (int j = t + 1; j < m; j++) {
                    if (a.at(t, j) == 0) continue;
                    Int q = a.at(t, j) / a.at(t, t);
                    addmul_col(j, t, -q);
                    if (a.at(t, j) != 0) { swap_cols(t, j); cleared = false; }
                }
                if (cleared) break;
            }
            if (a.at(t, t) < 0) negate_row(t);
        }
    }

    void run() {
        diagonalize();
        // Enforce the divisibility chain; each pass strictly reduces the
        // product of leading divisors, so this terminates.
        for (;;) {
            bool ok = true;
            int d = std::min(a.rows(), a.cols());
            for (int i = 0; i + 1 < d; i++) {
                if (a.at(i, i) == 0) continue;
                if (a.at(i + 1, i + 1) % a.at(i, i) != 0) {
                    addmul_col(i, i + 1, 1);
                    diagonalize();
                    ok = false;
                    break;
                }
            }
            if (ok) break;
        }
    }
};

}  // namespace

SNFResult smith_normal_form(const IntMat& a) {
    SnfWork w{a, IntMat::identity(a.rows()), IntMat::identity(a.cols())};
    w.run();
    SNFResult res;
    res.left = std::move(w.u);
    res.right = std::move(w.v);
    for (int i = 0; i < std::min(a.rows(), a.cols()); i++)
        if (w.a.at(i, i) != 0) res.divisors.push_back(w.a.at(i, i));
    return res;
}

IntMat kernel_lattice(const IntMat& a) {
    // Incremental: keep a column basis of the lattice satisfying the row
    // constraints seen so far; each new independent constraint removes one
    // column after a gcd reduction.
    int n = a.cols();
    IntMat k = IntMat::identity(n);
    int kc = n;
    std::vector<Int> w;
    for (int row = 0; row < a.rows(); row++) {
        w.assign(kc, 0);
        bool zero = true;
        for (int j = 0; j < kc; j++) {
            Int s = 0;
            for (int i = 0; i < n; i++)
                if (a.at(row, i) != 0 && k.at(i, j) != 0) s += a.at(row, i) * k.at(i, j);
            w[j] = s;
            if (s != 0) zero = false;
        }
        if (zero) continue;
        auto addmul_col = [&](int dst, int src, const Int& f) {
            w[dst] += f * w[src];
            for (int i = 0; i < n; i++) k.at(i, dst) += f * k.at(i, src);
        };
        auto swap_col = [&](int x, int y) {
            if (x == y) return;
            std::swap(w[x], w[y]);
            for (int i = 0; i < n; i++) std::swap(k.at(i, x), k.at(i, y));
        };
        for (;;) {
            int piv = -1;
            for (int j = 0; j < kc; j++)
                if (w[j] != 0 && (piv < 0 || abs(w[j]) < abs(w[piv]))) piv = j;
            bool done = true;
            for (int j = 0; j < kc; j++) {
                if (j == piv || w[j] == 0) continue;
                Int q = w[j] / w[piv];
                addmul_col(j, piv, -q);
                if (w[j] != 0) done = false;
            }
            if (done) {
                swap_col(piv, 0);
                break;
            }
        }
        // Column 0 now carries the only nonzero pairing; drop it.
        for (int j = 1; j < kc; j++)
            for (int i = 0; i < n; i++) k.at(i, j - 1) = k.at(i, j);
        kc--;
    }
    IntMat out(kc, n);
    for (int j = 0; j < kc; j++)
        for (int i = 0; i < n; i++) out.at(j, i) = k.at(i, j);
    return out;
}

bool solve_integer(const IntMat& a, const std::vector<Int>& b, std::vector<Int>* x) {
    if ((int)b.size() != a.rows()) throw std::runtime_error("solve_integer: size mismatch");
    SNFResult s = smith_normal_form(a);
    std::vector<Int> ub((std::size_t)a.rows());
    for (int i = 0; i < a.rows(); i++) {
        Int acc = 0;
        for (int j = 0; j < a.rows(); j++)
            if (s.left.at(i, j) != 0 && b[j] != 0) acc += s.left.at(i, j) * b[j];
        ub[i] = acc;
    }
    int k = (int)s.divisors.size();
    std::vector<Int> z((std::size_t)a.cols());
    for (int i = 0; i < a.rows(); i++) {
        if (i < k) {
            if (ub[i] % s.divisors[i] != 0) return false;
            z[i] = ub[i] / s.divisors[i];
        } else if (ub[i] != 0) {
            return false;
        }
    }
    x->assign((std::size_t)a.cols(), 0);
    for (int i = 0; i < a.cols(); i++) {
        Int acc = 0;
        for (int j = 0; j < a.cols(); j++)
            if (s.right.at(i, j) != 0 && z[j] != 0) acc += s.right.at(i, j) * z[j];
        (*x)[i] = acc;
    }
    return true;
}

IntMat unimodular_inverse(const IntMat& a) {
    if (a.rows() != a.cols()) throw std::runtime_error("unimodular_inverse: not square");
    SNFResult s = smith_normal_form(a);
    if ((int)s.divisors.size() != a.rows())
        throw std::runtime_error("unimodular_inverse: singular");
    for (const Int& d : s.divisors)
        if (d != 1) throw std::runtime_error("unimodular_inverse: not unimodular");
    return s.right * s.left;
}

bool solve_full_column_rank(const IntMat& a, const std::vector<Int>& b, std::vector<Int>* x) {
    return solve_integer(a, b, x);
}

}  // namespace glattice

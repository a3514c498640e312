#include "toric/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace toric {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& cols) {
    if (cols.empty()) return IntMat();
    int n = static_cast<int>(cols[0].size());
    IntMat m(n, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != n) throw std::invalid_argument("ragged column list");
        for (int i = 0; i < n; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

IntVec IntMat::operator*(const IntVec& v) const {
    if (cols_ != static_cast<int>(v.size())) throw std::invalid_argument("matrix/vector shape mismatch");
    IntVec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

IntMat IntMat::transpose() const {
    IntMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Int IntMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    IntMat a = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

IntMat IntMat::unimodular_inverse() const {
    // Gauss-Jordan over the rationals; result must come out integral.
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = (*this)(i, j);
        a[i][n + i] = 1;
    }
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) { p = i; break; }
        if (p < 0) throw std::invalid_argument("singular matrix");
        std::swap(a[k], a[p]);
        Rat piv = a[k][k];
        for (int j = 0; j < 2 * n; ++j) a[k][j] /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k];
            for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    IntMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& r = a[i][n + j];
            if (denominator(r) != 1) throw std::invalid_argument("matrix is not unimodular");
            inv(i, j) = numerator(r);
        }
    return inv;
}

IntVec primitive(const IntVec& v) {
    Int g = 0;
    for (const Int& c : v) g = gcd(g, c);
    if (g == 0) throw std::invalid_argument("zero ray");
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

namespace {

// Elementary row/column operations on S with mirrored updates of U / V.
struct SmithWork {
    IntMat S, U, V;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < S.cols(); ++j) std::swap(S(a, j), S(b, j));
        for (int j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < S.rows(); ++i) std::swap(S(i, a), S(i, b));
        for (int i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
    }
    void add_row(int dst, int src, const Int& f) {  // row dst += f * row src
        for (int j = 0; j < S.cols(); ++j) S(dst, j) += f * S(src, j);
        for (int j = 0; j < U.cols(); ++j) U(dst, j) += f * U(src, j);
    }
    void add_col(int dst, int src, const Int& f) {
        for (int i = 0; i < S.rows(); ++i) S(i, dst) += f * S(i, src);
        for (int i = 0; i < V.rows(); ++i) V(i, dst) += f * V(i, src);
    }
    void negate_row(int a) {
        for (int j = 0; j < S.cols(); ++j) S(a, j) = -S(a, j);
        for (int j = 0; j < U.cols(); ++j) U(a, j) = -U(a, j);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& A) {
    int m = A.rows(), n = A.cols();
    SmithWork w{A, IntMat::identity(m), IntMat::identity(n)};
    int t = 0;
    int lim = std::min(m, n);
    while (t < lim) {
        // Pivot: smallest nonzero magnitude in the trailing block.
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (w.S(i, j) == 0) continue;
                if (pi < 0 || abs(w.S(i, j)) < abs(w.S(pi, pj))) { pi = i; pj = j; }
            }
        if (pi < 0) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (w.S(i, t) == 0) continue;
                Int q = w.S(i, t) / w.S(t, t);
                w.add_row(i, t, -q);
                if (w.S(i, t) != 0) { w.swap_rows(t, i); clean = false; }
            }
            for (int j = t + 1; j < n; ++j) {
                if (w.S(t, j) == 0) continue;
                Int q = w.S(t, j) / w.S(t, t);
                w.add_col(j, t, -q);
                if (w.S(t, j) != 0) { w.swap_cols(t, j); clean = false; }
            }
        }
        // Divisibility: fold any non-multiple into the pivot row and redo.
        bool redo = false;
        for (int i = t + 1; i < m && !redo; ++i)
            for (int j = t + 1; j < n && !redo; ++j)
                if (w.S(i, j) % w.S(t, t) != 0) {
                    w.add_row(t, i, 1);
                    redo = true;
                }
        if (redo) continue;
        if (w.S(t, t) < 0) w.negate_row(t);
        ++t;
    }
    return {w.U, w.S, w.V};
}

int rank(const IntMat& A) {
    SmithResult s = smith_normal_form(A);
    int r = 0;
    for (int i = 0; i < std::min(A.rows(), A.cols()); ++i)
        if (s.S(i, i) != 0) ++r;
    return r;
}

std::vector<RatVec> rational_kernel(const IntMat& A) {
    SmithResult s = smith_normal_form(A);
    int n = A.cols();
    int r = 0;
    for (int i = 0; i < std::min(A.rows(), n); ++i)
        if (s.S(i, i) != 0) ++r;
    std::vector<RatVec> basis;
    for (int j = r; j < n; ++j) {
        RatVec b(n);
        for (int i = 0; i < n; ++i) b[i] = s.V(i, j);
        basis.push_back(std::move(b));
    }
    return basis;
}

std::vector<RatVec> fixed_subspace(const std::vector<UnimodularMap>& maps) {
    if (maps.empty()) throw std::invalid_argument("empty map set");
    int n = maps[0].rows();
    // Intersect ker(g - id) incrementally; the working basis stays n x k with
    // k <= n, so large map sets never blow up the kernel computation.
    IntMat basis = IntMat::identity(n);
    for (const auto& g : maps) {
        if (g.rows() != n || g.cols() != n) throw std::invalid_argument("dimension mismatch");
        if (basis.cols() == 0) break;
        IntMat gmi(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) gmi(i, j) = g(i, j) - (i == j ? 1 : 0);
        auto ker = rational_kernel(gmi * basis);
        std::vector<IntVec> cols;
        for (const auto& c : ker) {
            Int l = 1;
            for (const Rat& ci : c) l = lcm(l, denominator(ci));
            IntVec ic(c.size());
            for (size_t i = 0; i < c.size(); ++i)
                ic[i] = numerator(c[i]) * (l / denominator(c[i]));
            cols.push_back(basis * ic);
        }
        basis = cols.empty() ? IntMat(n, 0) : IntMat::from_columns(cols);
    }
    std::vector<RatVec> out;
    for (int j = 0; j < basis.cols(); ++j) {
        RatVec b(n);
        for (int i = 0; i < n; ++i) b[i] = basis(i, j);
        out.push_back(std::move(b));
    }
    return out;
}

UnimodularMap dual_map(const UnimodularMap& g) {
    return g.unimodular_inverse().transpose();
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec neg(const IntVec& v) {
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string to_string(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

RatVec solve_rational(const IntMat& B, const RatVec& y) {
    int n = B.rows();
    if (B.cols() != n || static_cast<int>(y.size()) != n)
        throw std::invalid_argument("solve_rational: shape mismatch");
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = B(i, j);
        a[i][n] = y[i];
    }
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) { p = i; break; }
        if (p < 0) throw std::invalid_argument("singular matrix");
        std::swap(a[k], a[p]);
        Rat piv = a[k][k];
        for (int j = k; j <= n; ++j) a[k][j] /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k];
            for (int j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

}  // namespace toric

#include "nccurv/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nccurv {

namespace {

// One cyclic Jacobi pass over the strict upper triangle. Returns the sum of
// |off-diagonal| entries before the pass.
double jacobi_sweep(Matrix& a, Matrix* v) {
    const int n = a.rows();
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) off += std::abs(a(p, q));
    if (off == 0.0) return 0.0;

    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const double apq = a(p, q);
            if (apq == 0.0) continue;
            const double scale = 100.0 * std::abs(apq);
            if (std::abs(a(p, p)) + scale == std::abs(a(p, p)) &&
                std::abs(a(q, q)) + scale == std::abs(a(q, q))) {
                a(p, q) = a(q, p) = 0.0;
                continue;
            }
            const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
            double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
            if (theta < 0.0) t = -t;
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            const double tau = s / (1.0 + c);

            const double app = a(p, p), aqq = a(q, q);
            a(p, p) = app - t * apq;
            a(q, q) = aqq + t * apq;
            a(p, q) = a(q, p) = 0.0;
            for (int k = 0; k < n; ++k) {
                if (k == p || k == q) continue;
                const double akp = a(k, p), akq = a(k, q);
                a(k, p) = a(p, k) = akp - s * (akq + tau * akp);
                a(k, q) = a(q, k) = akq + s * (akp - tau * akq);
            }
            if (v) {
                for (int k = 0; k < n; ++k) {
                    const double vkp = (*v)(k, p), vkq = (*v)(k, q);
                    (*v)(k, p) = vkp - s * (vkq + tau * vkp);
                    (*v)(k, q) = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }
    return off;
}

void jacobi(Matrix& a, Matrix* v) {
    if (!a.is_finite()) throw std::invalid_argument("sym_eig: non-finite entries");
    if (a.rows() != a.cols()) throw std::invalid_argument("sym_eig: matrix not square");
    a.symmetrize();
    if (v) *v = Matrix::identity(a.rows());
    for (int sweep = 0; sweep < 60; ++sweep) {
        if (jacobi_sweep(a, v) == 0.0) return;
    }
    throw std::runtime_error("sym_eig: Jacobi iteration failed to converge");
}

void sort_eig(std::vector<double>& vals, Matrix* v) {
    const int n = static_cast<int>(vals.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return vals[i] < vals[j]; });
    std::vector<double> sv(n);
    for (int k = 0; k < n; ++k) sv[k] = vals[idx[k]];
    vals = std::move(sv);
    if (v) {
        Matrix w(n, n);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) w(i, k) = (*v)(i, idx[k]);
        *v = std::move(w);
    }
}

}  // namespace

EigResult sym_eig(Matrix a) {
    EigResult r;
    jacobi(a, &r.vectors);
    const int n = a.rows();
    r.values.resize(n);
    for (int i = 0; i < n; ++i) r.values[i] = a(i, i);
    sort_eig(r.values, &r.vectors);
    return r;
}

std::vector<double> sym_eigvals(Matrix a) {
    jacobi(a, nullptr);
    const int n = a.rows();
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = a(i, i);
    sort_eig(vals, nullptr);
    return vals;
}

Inertia inertia_of_eigvals(const std::vector<double>& vals, double tol) {
    if (tol < 0.0) throw std::invalid_argument("inertia: tol must be >= 0");
    double radius = 0.0;
    for (double v : vals) radius = std::max(radius, std::abs(v));
    const double thr = tol * std::max(1.0, radius);
    Inertia in;
    in.tol = tol;
    for (double v : vals) {
        if (v < -thr)
            ++in.neg;
        else if (v > thr)
            ++in.pos;
        else
            ++in.zero;
    }
    return in;
}

Inertia inertia(const Matrix& a, double tol) { return inertia_of_eigvals(sym_eigvals(a), tol); }

std::vector<std::vector<double>> orthonormal_span(const std::vector<std::vector<double>>& vecs,
                                                  double tol) {
    std::vector<std::vector<double>> work = vecs;
    std::vector<std::vector<double>> q;
    double max_norm = 0.0;
    for (const auto& w : work) max_norm = std::max(max_norm, norm2(w));
    if (max_norm == 0.0) return q;
    const double thr = tol * max_norm;

    // Modified Gram-Schmidt with greedy pivoting on the residual norm.
    std::vector<bool> used(work.size(), false);
    for (;;) {
        int best = -1;
        double best_norm = thr;
        for (size_t i = 0; i < work.size(); ++i) {
            if (used[i]) continue;
            const double nn = norm2(work[i]);
            if (nn > best_norm) {
                best_norm = nn;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) break;
        used[best] = true;
        auto u = work[best];
        // Re-orthogonalize once for stability.
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& e : q) {
                const double c = dot(u, e);
                for (size_t k = 0; k < u.size(); ++k) u[k] -= c * e[k];
            }
        const double un = norm2(u);
        if (un <= thr) continue;
        for (double& x : u) x /= un;
        q.push_back(u);
        for (size_t i = 0; i < work.size(); ++i) {
            if (used[i]) continue;
            const double c = dot(work[i], q.back());
            for (size_t k = 0; k < work[i].size(); ++k) work[i][k] -= c * q.back()[k];
        }
    }
    return q;
}

int rank(const Matrix& m, double tol) {
    std::vector<std::vector<double>> cols;
    cols.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        std::vector<double> c(m.rows());
        for (int i = 0; i < m.rows(); ++i) c[i] = m(i, j);
        cols.push_back(std::move(c));
    }
    return static_cast<int>(orthonormal_span(cols, tol).size());
}

std::vector<std::vector<double>> orthogonal_complement(const std::vector<std::vector<double>>& basis,
                                                       int n, double tol) {
    std::vector<std::vector<double>> cand = basis;
    for (int i = 0; i < n; ++i) {
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        cand.push_back(std::move(e));
    }
    auto full = orthonormal_span(cand, tol);
    // The first dim(basis) elements of `full` span span(basis); the rest are
    // only guaranteed orthogonal to it when the basis itself was orthonormal,
    // so project explicitly.
    auto qb = orthonormal_span(basis, tol);
    std::vector<std::vector<double>> comp;
    for (const auto& f : full) {
        auto u = f;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& e : qb) {
                const double c = dot(u, e);
                for (size_t k = 0; k < u.size(); ++k) u[k] -= c * e[k];
            }
        const double un = norm2(u);
        if (un > 0.5) {  // surviving directions keep norm ~1
            for (double& x : u) x /= un;
            comp.push_back(u);
        }
    }
    return orthonormal_span(comp, tol);
}

std::vector<std::vector<double>> nullspace_orthonormal(const Matrix& m, double tol) {
    std::vector<std::vector<double>> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<double> r(m.cols());
        for (int j = 0; j < m.cols(); ++j) r[j] = m(i, j);
        rows.push_back(std::move(r));
    }
    auto row_basis = orthonormal_span(rows, tol);
    return orthogonal_complement(row_basis, m.cols(), tol);
}

std::vector<std::vector<double>> complementary_nonneg_subspace(
    const Matrix& a, const std::vector<std::vector<double>>& u_basis, double tol) {
    const int n = a.rows();
    const auto eig = sym_eig(a);
    const auto in = inertia_of_eigvals(eig.values, tol);
    const int k1 = in.neg;
    if (static_cast<int>(u_basis.size()) != k1)
        throw std::invalid_argument(
            "complementary_nonneg_subspace: U is not a maximal strictly negative subspace");

    // M11 = U1^T [u_1 ... u_k1] where U1 spans the strictly negative eigenspace.
    Matrix m11(k1, k1);
    for (int i = 0; i < k1; ++i)
        for (int j = 0; j < k1; ++j) {
            double s = 0.0;
            for (int r = 0; r < n; ++r) s += eig.vectors(r, i) * u_basis[j][r];
            m11(i, j) = s;
        }
    if (k1 > 0 && rank(m11, tol) < k1)
        throw std::invalid_argument("complementary_nonneg_subspace: U was not strictly negative");

    std::vector<std::vector<double>> v;
    for (int k = k1; k < n; ++k) {
        std::vector<double> col(n);
        for (int r = 0; r < n; ++r) col[r] = eig.vectors(r, k);
        v.push_back(std::move(col));
    }
    return v;
}

}  // namespace nccurv

#include "nccurv/variety.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nccurv/calculus.hpp"
#include "nccurv/curvature.hpp"
#include "nccurv/middlematrix.hpp"

namespace nccurv {

namespace {

// Words |w| <= N in the canonical order (matches word_vectors).
std::vector<Word> words_upto(int g, int N) {
    std::vector<Word> out;
    for (int k = 0; k <= N; ++k)
        for (auto& w : x_words(g, k)) out.push_back(std::move(w));
    return out;
}

Matrix word_matrix(const MatrixPoint& pt, int N) {
    auto cols = word_vectors(pt.X, pt.v, N);
    Matrix m(pt.n, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (int i = 0; i < pt.n; ++i) m(i, static_cast<int>(c)) = cols[c][i];
    return m;
}

Matrix stacked_word_matrix(const std::vector<MatrixPoint>& points, int N) {
    int rows = 0;
    for (const auto& p : points) rows += p.n;
    const long long cols = alpha(points[0].g, N);
    Matrix m(rows, static_cast<int>(cols));
    int off = 0;
    for (const auto& p : points) {
        auto wv = word_vectors(p.X, p.v, N);
        for (size_t c = 0; c < wv.size(); ++c)
            for (int i = 0; i < p.n; ++i) m(off + i, static_cast<int>(c)) = wv[c][i];
        off += p.n;
    }
    return m;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

int neg_count(const std::vector<double>& vals, double tol) {
    double radius = std::max(std::abs(vals.front()), std::abs(vals.back()));
    double thr = tol * std::max(1.0, radius);
    int c = 0;
    for (double v : vals)
        if (v < -thr) ++c;
    return c;
}

std::vector<Matrix> blend(const std::vector<Matrix>& a, const std::vector<Matrix>& b, double t) {
    std::vector<Matrix> out;
    out.reserve(a.size());
    for (size_t j = 0; j < a.size(); ++j) {
        Matrix m = a[j];
        m *= 1.0 - t;
        Matrix n = b[j];
        n *= t;
        m += n;
        out.push_back(std::move(m));
    }
    return out;
}

// Eigen-nullvector of p(X), if p(X) has an eigenvalue within accept*scale of 0.
std::optional<std::vector<double>> kernel_vector(const NcPoly& p, const std::vector<Matrix>& X,
                                                 double accept) {
    auto eig = sym_eig(eval(p, X));
    const int n = eig.vectors.rows();
    double radius = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
    double thr = accept * std::max(1.0, radius);
    int best = 0;
    for (int k = 1; k < n; ++k)
        if (std::abs(eig.values[k]) < std::abs(eig.values[best])) best = k;
    if (std::abs(eig.values[best]) > thr) return std::nullopt;
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = eig.vectors(i, best);
    return v;
}

// Gauss-Newton polish toward p(X)v = 0: v is the eigen-nullvector candidate
// and X moves along symmetric directions by least squares on the linearized
// residual p(X)v + p'(X)[H]v. Near multiple roots (x^3 style points) the step
// converges only linearly, hence the generous iteration cap.
void polish_variety_point(const NcPoly& p, std::vector<Matrix>& X, std::vector<double>& v) {
    const int g = static_cast<int>(X.size());
    const int n = X[0].rows();
    NcPoly dp = directional_derivative(p);
    auto basis = sym_tuple_basis(g, n);
    const int m = static_cast<int>(basis.size());
    for (int iter = 0; iter < 90; ++iter) {
        auto eig = sym_eig(eval(p, X));
        int best = 0;
        for (int k = 1; k < n; ++k)
            if (std::abs(eig.values[k]) < std::abs(eig.values[best])) best = k;
        for (int i = 0; i < n; ++i) v[i] = eig.vectors(i, best);
        double radius = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
        if (std::abs(eig.values[best]) <= 1e-14 * std::max(1.0, radius)) return;
        std::vector<double> r(n);
        for (int i = 0; i < n; ++i) r[i] = eig.values[best] * v[i];
        Matrix jac(n, m);
        for (int a = 0; a < m; ++a) {
            auto col = eval(dp, X, &basis[a]).apply(v);
            for (int i = 0; i < n; ++i) jac(i, a) = col[i];
        }
        // ridge-regularized normal equations
        Matrix jtj = jac.transposed() * jac;
        double ridge = 1e-13 * std::max(1.0, jtj.max_abs());
        for (int a = 0; a < m; ++a) jtj(a, a) += ridge;
        std::vector<double> jtr(m, 0.0);
        for (int a = 0; a < m; ++a)
            for (int i = 0; i < n; ++i) jtr[a] += jac(i, a) * r[i];
        auto sol = sym_eig(jtj);
        std::vector<double> c(m, 0.0);
        for (int k = 0; k < m; ++k) {
            double proj = 0.0;
            for (int a = 0; a < m; ++a) proj += sol.vectors(a, k) * jtr[a];
            proj /= sol.values[k];
            for (int a = 0; a < m; ++a) c[a] -= sol.vectors(a, k) * proj;
        }
        for (int j = 0; j < g; ++j)
            for (int a = 0; a < m; ++a)
                if (c[a] != 0.0) {
                    Matrix add = basis[a][j];
                    add *= c[a];
                    X[j] += add;
                }
    }
}

}  // namespace

IndependenceCertificate word_independence(const MatrixPoint& pt, int N, double tol) {
    if (!pt.has_v()) throw std::invalid_argument("word_independence: point has no vector v");
    IndependenceCertificate c;
    c.N = N;
    c.alpha_N = alpha(pt.g, N);
    c.tol = tol;
    c.rank = rank(word_matrix(pt, N), tol);
    c.independent = (c.rank == c.alpha_N);
    return c;
}

std::optional<AnnihilatorResult> minimal_annihilator(const std::vector<MatrixPoint>& points,
                                                     int max_degree, double tol) {
    if (points.empty()) throw std::invalid_argument("minimal_annihilator: no points");
    const int g = points[0].g;
    for (const auto& p : points) {
        if (p.g != g) throw std::invalid_argument("minimal_annihilator: mismatched g");
        if (!p.has_v()) throw std::invalid_argument("minimal_annihilator: point has no vector v");
    }
    for (int D = 0; D <= max_degree; ++D) {
        Matrix m = stacked_word_matrix(points, D);
        auto null_basis = nullspace_orthonormal(m, tol);
        if (null_basis.empty()) continue;
        const auto& q_coeffs = null_basis.front();
        auto words = words_upto(g, D);
        AnnihilatorResult r;
        r.q = NcPoly(g);
        for (size_t c = 0; c < words.size(); ++c)
            if (std::abs(q_coeffs[c]) > 0.0) r.q.add_term(words[c], q_coeffs[c]);
        r.degree = r.q.degree();
        for (const auto& p : points) {
            auto y = eval(r.q, p.X).apply(p.v);
            r.residual = std::max(r.residual, std::sqrt(dot(y, y)));
        }
        return r;
    }
    return std::nullopt;
}

ChsyReport chsy_codim(int g, int n, int r, int s, const MatrixPoint* pt, double tol) {
    if (r < 0 || s < r) throw std::invalid_argument("chsy_codim: need s >= r >= 0");
    ChsyReport rep;
    const long long ar = alpha(g, r), as = alpha(g, s);
    rep.formula_bound = static_cast<long long>(n) * g * (as - ar) + g * ar * (ar - 1) / 2;
    rep.exact = (s == r);
    if (!pt) return rep;
    if (!pt->has_v()) throw std::invalid_argument("chsy_codim: point has no vector v");
    rep.independence_ok = word_independence(*pt, r, tol).independent;
    if (!rep.independence_ok) return rep;
    auto basis = sym_tuple_basis(pt->g, pt->n);
    const long long height = static_cast<long long>(pt->n) * pt->g * as;
    Matrix m(static_cast<int>(height), static_cast<int>(basis.size()));
    for (size_t a = 0; a < basis.size(); ++a) {
        auto col = border_vector(pt->X, basis[a], pt->v, s);
        for (long long i = 0; i < height; ++i) m(static_cast<int>(i), static_cast<int>(a)) = col[i];
    }
    rep.has_numeric = true;
    rep.numeric_codim = height - rank(m, tol);
    return rep;
}

std::vector<Matrix> goe_tuple(int g, int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Matrix> out;
    out.reserve(g);
    for (int j = 0; j < g; ++j) {
        Matrix a(n, n);
        for (int i = 0; i < n; ++i) {
            a(i, i) = gauss(rng) * scale * std::sqrt(2.0);
            for (int k = i + 1; k < n; ++k) {
                double x = gauss(rng) * scale;
                a(i, k) = x;
                a(k, i) = x;
            }
        }
        out.push_back(std::move(a));
    }
    return out;
}

std::optional<MatrixPoint> sample_variety_point(const NcPoly& p, int n, std::mt19937_64& rng,
                                                int budget, double tol) {
    const int g = p.g();
    auto make_point = [&](std::vector<Matrix> X,
                          std::vector<double> v) -> std::optional<MatrixPoint> {
        polish_variety_point(p, X, v);
        double nv = std::sqrt(dot(v, v));
        for (double& x : v) x /= nv;
        auto res = eval(p, X).apply(v);
        double scale = 1.0;
        for (const auto& a : X) scale = std::max(scale, a.max_abs());
        if (std::sqrt(dot(res, res)) > 1e-10 * scale) return std::nullopt;
        MatrixPoint pt;
        pt.g = g;
        pt.n = n;
        pt.X = std::move(X);
        pt.v = std::move(v);
        return pt;
    };

    // Bisection on the negative-eigenvalue count along X(t); a jump in the
    // count forces an eigenvalue of p(X(t)) through zero.
    auto bisect = [&](auto path, int c0, int c1) -> std::optional<MatrixPoint> {
        (void)c1;
        double t0 = 0.0, t1 = 1.0;
        for (int it = 0; it < 80; ++it) {
            double tm = 0.5 * (t0 + t1);
            auto Xm = path(tm);
            int cm = neg_count(sym_eigvals(eval(p, Xm)), tol);
            if (cm == c0)
                t0 = tm;
            else
                t1 = tm;
        }
        auto Xf = path(0.5 * (t0 + t1));
        // the polish inside make_point tightens (or rejects) loose hits
        if (auto v = kernel_vector(p, Xf, 1e-5)) return make_point(std::move(Xf), *v);
        return std::nullopt;
    };

    for (int attempt = 0; attempt < budget; ++attempt) {
        auto X0 = goe_tuple(g, n, rng);
        if (auto v = kernel_vector(p, X0, tol))
            if (auto pt = make_point(X0, *v)) return pt;
        int c0 = neg_count(sym_eigvals(eval(p, X0)), tol);

        // Segment from the origin: p(0) = c I pins the count at t = 0.
        const double cst = p.coefficient({});
        if (cst != 0.0) {
            int czero = cst < 0.0 ? n : 0;
            if (czero != c0) {
                auto path = [&](double t) {
                    std::vector<Matrix> out;
                    out.reserve(g);
                    for (const auto& a : X0) {
                        Matrix b = a;
                        b *= t;
                        out.push_back(std::move(b));
                    }
                    return out;
                };
                if (auto pt = bisect(path, czero, c0)) return pt;
            }
        }

        auto X1 = goe_tuple(g, n, rng);
        if (auto v = kernel_vector(p, X1, tol))
            if (auto pt = make_point(X1, *v)) return pt;
        int c1 = neg_count(sym_eigvals(eval(p, X1)), tol);
        if (c0 != c1) {
            auto path = [&](double t) { return blend(X0, X1, t); };
            if (auto pt = bisect(path, c0, c1)) return pt;
        }
    }
    return std::nullopt;
}

namespace {

int ceil_div(int a, int n) { return (a + n - 1) / n; }

}  // namespace

VarietySignatureReport variety_signature(const NcPoly& p, const VarietySignatureConfig& cfg) {
    if (!p.is_symmetric()) throw std::invalid_argument("variety_signature: p must be symmetric");
    VarietySignatureReport rep;
    rep.tol = cfg.tol;
    rep.seed = cfg.seed;
    const int g = p.g();
    const int d = p.degree();
    if (d <= 1) {
        rep.method = "scalar-middle";
        rep.note = "degree <= 1: zero Hessian, zero signature";
        rep.certified = true;
        return rep;
    }
    const long long a_dm1 = alpha(g, d - 1);
    const long long threshold = g * a_dm1 * (a_dm1 - 1) / 2;

    std::mt19937_64 rng(splitmix64(cfg.seed));

    switch (cfg.mode) {
        case SignatureMode::ScalarMiddle: {
            rep.method = "scalar-middle";
            auto sm = scalar_middle(extract_middle(hessian(p)), cfg.tol);
            rep.C_minus = sm.in.neg;
            rep.C_plus = sm.in.pos;
            // Certification: a direct sum of sampled variety points whose
            // words up to length d-1 are independent. A single point rarely
            // suffices (its v is often an eigenvector of X), but the variety
            // is closed under direct sums, so points are accumulated until
            // the stacked word matrix reaches rank alpha_{d-1}.
            if (a_dm1 > 24) {
                rep.note = "alpha_{d-1} too large for desk-scale certification";
                break;
            }
            const int n_each = cfg.sample_n > 0 ? cfg.sample_n : std::max(2, d);
            std::vector<MatrixPoint> family;
            for (int i = 0; i < cfg.samples; ++i) {
                auto pt = sample_variety_point(p, n_each, rng, 4, cfg.tol);
                if (!pt) continue;
                family.push_back(std::move(*pt));
                auto sum = direct_sum(family);
                if (sum.n < a_dm1) continue;
                auto cert = word_independence(sum, d - 1, cfg.tol);
                rep.certificate = cert;
                if (cert.independent) {
                    rep.certified = true;
                    rep.point = std::move(sum);
                    break;
                }
            }
            if (!rep.certified)
                rep.note = rep.certificate
                               ? "no sampled variety point passed word independence; signature uncertified"
                               : "no variety point found in the sample budget; signature uncertified";
            break;
        }
        case SignatureMode::CeilingAtPoint: {
            rep.method = "ceiling-at-point";
            std::optional<MatrixPoint> pt = cfg.point;
            if (pt && !pt->has_v()) {
                // Derive v as an eigen-nullvector of p(X).
                if (auto v = kernel_vector(p, pt->X, std::max(cfg.tol, 1e-9))) {
                    double nv = std::sqrt(dot(*v, *v));
                    for (double& x : *v) x /= nv;
                    pt->v = *v;
                } else {
                    rep.failed = true;
                    rep.note = "supplied X has no kernel of p(X): not a variety point";
                    return rep;
                }
            }
            if (!pt) {
                const int n_want =
                    cfg.sample_n > 0 ? cfg.sample_n : static_cast<int>(threshold) + 1;
                pt = sample_variety_point(p, n_want, rng, cfg.samples, cfg.tol);
            }
            if (!pt) {
                rep.failed = true;
                rep.note = "no variety point found in the sample budget";
                return rep;
            }
            rep.threshold_ok = pt->n > threshold;
            auto cr = c_pm(p, *pt, cfg.tol);
            rep.C_minus = ceil_div(cr.c_minus, pt->n);
            rep.C_plus = ceil_div(cr.c_plus, pt->n);
            rep.beta_samples.push_back({pt->n, cr.c_minus, cr.c_plus});
            rep.certified = rep.threshold_ok;
            if (!rep.threshold_ok) rep.note = "n at or below the ceiling threshold; value is heuristic";
            rep.point = std::move(pt);
            break;
        }
        case SignatureMode::SampledLowerBound: {
            rep.method = "sampled-lower-bound";
            const int n_want = cfg.sample_n > 0 ? cfg.sample_n : std::max(2, d + 1);
            for (int i = 0; i < cfg.samples; ++i) {
                std::mt19937_64 sub(splitmix64(cfg.seed + 0x51ull * (i + 1)));
                auto pt = sample_variety_point(p, n_want, sub, 4, cfg.tol);
                if (!pt) continue;
                auto cr = c_pm(p, *pt, cfg.tol);
                rep.beta_samples.push_back({pt->n, cr.c_minus, cr.c_plus});
                rep.C_minus = std::max(rep.C_minus, ceil_div(cr.c_minus, pt->n));
                rep.C_plus = std::max(rep.C_plus, ceil_div(cr.c_plus, pt->n));
            }
            if (rep.beta_samples.empty()) {
                rep.failed = true;
                rep.note = "no variety point found in the sample budget";
            } else {
                rep.note = "lower bound from finite samples";
            }
            break;
        }
    }
    return rep;
}

}  // namespace nccurv

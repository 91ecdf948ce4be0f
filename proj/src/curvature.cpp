#include "nccurv/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nccurv/middlematrix.hpp"

namespace nccurv {

NcPoly polarize(const NcPoly& f) {
    NcPoly out(f.g());
    for (const auto& [w, c] : f.terms()) {
        std::vector<size_t> hpos;
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i].cls == LetterClass::H) hpos.push_back(i);
        if (hpos.size() != 2)
            throw std::invalid_argument("polarize: input must be homogeneous of degree 2 in h");
        for (size_t p : hpos) {
            Word m = w;
            m[p].cls = LetterClass::K;
            out.add_term(m, 0.5 * c);
        }
    }
    return out;
}

namespace {

// Columns p'(X)[H_a] v over the coordinate basis of (S^n)^g.
Matrix derivative_map(const NcPoly& dp, const MatrixPoint& pt, const std::vector<SymTuple>& basis) {
    const int n = pt.n;
    Matrix m(n, static_cast<int>(basis.size()));
    for (size_t a = 0; a < basis.size(); ++a) {
        auto col = eval(dp, pt.X, &basis[a]).apply(pt.v);
        for (int i = 0; i < n; ++i) m(i, static_cast<int>(a)) = col[i];
    }
    return m;
}

std::vector<SymTuple> coords_to_tuples(const std::vector<SymTuple>& basis,
                                       const std::vector<std::vector<double>>& coords) {
    std::vector<SymTuple> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(tuple_combine(basis, c));
    return out;
}

}  // namespace

TangentSpace clamped_tangent(const NcPoly& p, const MatrixPoint& pt, double tol) {
    if (!pt.has_v()) throw std::invalid_argument("clamped_tangent: point has no vector v");
    auto basis = sym_tuple_basis(pt.g, pt.n);
    Matrix m = derivative_map(directional_derivative(p), pt, basis);
    TangentSpace t;
    t.tol = tol;
    t.coords = nullspace_orthonormal(m, tol);
    t.basis = coords_to_tuples(basis, t.coords);
    t.dim = static_cast<int>(t.coords.size());
    t.codim = static_cast<int>(basis.size()) - t.dim;
    return t;
}

bool full_rank_point(const NcPoly& p, const MatrixPoint& pt, double tol) {
    if (!pt.has_v()) throw std::invalid_argument("full_rank_point: point has no vector v");
    auto basis = sym_tuple_basis(pt.g, pt.n);
    Matrix m = derivative_map(directional_derivative(p), pt, basis);
    return rank(m, tol) == pt.n;
}

Matrix form_gram(const NcPoly& f, const MatrixPoint& pt, const std::vector<SymTuple>& basis) {
    if (!pt.has_v()) throw std::invalid_argument("form_gram: point has no vector v");
    NcPoly bil = polarize(f);
    const int m = static_cast<int>(basis.size());
    Matrix gram(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            auto y = eval(bil, pt.X, &basis[a], &basis[b]).apply(pt.v);
            double s = dot(y, pt.v);
            gram(a, b) = s;
            gram(b, a) = s;
        }
    return gram;
}

CurvatureReport c_pm(const NcPoly& p, const MatrixPoint& pt, double tol) {
    TangentSpace t = clamped_tangent(p, pt, tol);
    CurvatureReport r;
    r.tol = tol;
    r.tangent_dim = t.dim;
    r.full_rank = (t.codim == pt.n);
    if (t.dim == 0) return r;
    Inertia in = inertia(form_gram(hessian(p), pt, t.basis), tol);
    r.c_minus = in.neg;
    r.c_plus = in.pos;
    r.form_zero_dim = in.zero;
    return r;
}

Inertia e_pm(const NcPoly& f, const MatrixPoint& pt, const std::vector<SymTuple>& subspace,
             double tol) {
    if (subspace.empty()) return Inertia{0, 0, 0, tol};
    return inertia(form_gram(f, pt, subspace), tol);
}

RelaxedSignatureResult relaxed_signature(const NcPoly& p, const MatrixPoint& pt,
                                         const RelaxedSearchConfig& cfg, bool negative_variant) {
    if (!pt.has_v()) throw std::invalid_argument("relaxed_signature: point has no vector v");
    CurvatureReport base = c_pm(p, pt, cfg.tol);
    RelaxedSignatureResult out;
    out.negative_variant = negative_variant;
    out.target = negative_variant ? base.c_plus : base.c_minus;

    auto basis = sym_tuple_basis(pt.g, pt.n);
    const int m = static_cast<int>(basis.size());
    Matrix a_gram = form_gram(hessian(p), pt, basis);

    // Q_ab = <p'(X)[H_a]v, p'(X)[H_b]v> is the Gram of lambda p'^T p'.
    Matrix dmap = derivative_map(directional_derivative(p), pt, basis);
    Matrix q_gram = dmap.transposed() * dmap;

    // E_ab = <Vt[H_a]v, Vt[H_b]v>, the Gram of the delta Vt^T Vt term; the
    // extended border runs to word length d-1.
    const int s = std::max(p.degree() - 1, 0);
    std::vector<std::vector<double>> borders;
    borders.reserve(m);
    for (const auto& h : basis) borders.push_back(border_vector(pt.X, h, pt.v, s));
    Matrix e_gram(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            double sdot = dot(borders[a], borders[b]);
            e_gram(a, b) = sdot;
            e_gram(b, a) = sdot;
        }

    const double sgn = negative_variant ? -1.0 : 1.0;
    // The zero band is pinned to the scale of the Hessian form alone: the
    // lambda term is a penalty whose magnitude must not widen the band, or
    // growing lambda would swallow the very eigenvalues being counted.
    double a_scale = 1.0;
    {
        auto avals = sym_eigvals(a_gram);
        if (!avals.empty())
            a_scale = std::max(1.0, std::max(std::abs(avals.front()), std::abs(avals.back())));
    }
    const double band = cfg.tol * a_scale;
    auto count_at = [&](double delta, double lambda) {
        Matrix g = a_gram;
        Matrix t1 = q_gram;
        t1 *= lambda;
        Matrix t2 = e_gram;
        t2 *= delta;
        g += t1;
        g += t2;
        Inertia in;
        in.tol = cfg.tol;
        for (double v : sym_eigvals(g)) {
            if (v < -band)
                ++in.neg;
            else if (v > band)
                ++in.pos;
            else
                ++in.zero;
        }
        return in;
    };

    for (double d : cfg.delta_grid) {
        double delta = sgn * d;
        Inertia prev = count_at(delta, sgn * cfg.lambda_grid[0]);
        for (size_t li = 1; li < cfg.lambda_grid.size(); ++li) {
            Inertia cur = count_at(delta, sgn * cfg.lambda_grid[li]);
            int prev_count = negative_variant ? prev.pos : prev.neg;
            int cur_count = negative_variant ? cur.pos : cur.neg;
            if (prev_count == cur_count && cur_count == out.target) {
                out.matched = true;
                out.delta = delta;
                out.lambda = sgn * cfg.lambda_grid[li - 1];
                out.e_minus = prev.neg;
                out.e_plus = prev.pos;
                return out;
            }
            prev = cur;
        }
    }
    std::ostringstream os;
    os << "no (delta,lambda) pair on the grid stabilized at "
       << (negative_variant ? "c_plus=" : "c_minus=") << out.target;
    out.diagnostics = os.str();
    return out;
}

DecompositionReport subspace_decomposition(const NcPoly& p, const MatrixPoint& pt, double tol) {
    if (!pt.has_v()) throw std::invalid_argument("subspace_decomposition: point has no vector v");
    auto basis = sym_tuple_basis(pt.g, pt.n);
    const int m = static_cast<int>(basis.size());
    DecompositionReport r;
    r.tol = tol;
    r.dim_full = m;

    // N = kernel of H -> Vt(X)[H]v over the extended border.
    const int s = std::max(p.degree() - 1, 0);
    std::vector<std::vector<double>> borders;
    borders.reserve(m);
    for (const auto& h : basis) borders.push_back(border_vector(pt.X, h, pt.v, s));
    const int bh = static_cast<int>(borders[0].size());
    Matrix bmap(bh, m);
    for (int a = 0; a < m; ++a)
        for (int i = 0; i < bh; ++i) bmap(i, a) = borders[a][i];
    r.n_coords = nullspace_orthonormal(bmap, tol);
    r.dim_n = static_cast<int>(r.n_coords.size());

    auto perp = orthogonal_complement(r.n_coords, m, tol);
    r.dim_n_perp = static_cast<int>(perp.size());

    // M = clamped tangent directions inside N-perp: kernel of p'(X)[.]v
    // restricted to N-perp, lifted back to full coordinates.
    NcPoly dp = directional_derivative(p);
    Matrix dmap = derivative_map(dp, pt, basis);
    Matrix dmap_restr(pt.n, r.dim_n_perp);
    for (int a = 0; a < r.dim_n_perp; ++a) {
        std::vector<double> col(pt.n, 0.0);
        for (int t = 0; t < m; ++t) {
            const double c = perp[a][t];
            if (c == 0.0) continue;
            for (int i = 0; i < pt.n; ++i) col[i] += c * dmap(i, t);
        }
        for (int i = 0; i < pt.n; ++i) dmap_restr(i, a) = col[i];
    }
    auto m_sub = nullspace_orthonormal(dmap_restr, tol);
    for (const auto& c : m_sub) {
        std::vector<double> full(m, 0.0);
        for (int a = 0; a < r.dim_n_perp; ++a)
            for (int t = 0; t < m; ++t) full[t] += c[a] * perp[a][t];
        r.m_coords.push_back(std::move(full));
    }
    r.dim_m = static_cast<int>(r.m_coords.size());

    // L = complement of M inside N-perp.
    auto l_sub = orthogonal_complement(m_sub, r.dim_n_perp, tol);
    for (const auto& c : l_sub) {
        std::vector<double> full(m, 0.0);
        for (int a = 0; a < r.dim_n_perp; ++a)
            for (int t = 0; t < m; ++t) full[t] += c[a] * perp[a][t];
        r.l_coords.push_back(std::move(full));
    }
    r.dim_l = static_cast<int>(r.l_coords.size());

    // Operator Grams on the N-perp basis.
    auto perp_tuples = coords_to_tuples(basis, perp);
    r.a_gram = form_gram(hessian(p), pt, perp_tuples);
    Matrix dmap_r2 = dmap_restr;
    r.q_gram = dmap_r2.transposed() * dmap_r2;
    r.e_gram = Matrix(r.dim_n_perp, r.dim_n_perp);
    for (int a = 0; a < r.dim_n_perp; ++a) {
        std::vector<double> ba(bh, 0.0);
        for (int t = 0; t < m; ++t) {
            const double c = perp[a][t];
            if (c == 0.0) continue;
            for (int i = 0; i < bh; ++i) ba[i] += c * borders[t][i];
        }
        for (int b = a; b < r.dim_n_perp; ++b) {
            std::vector<double> bb(bh, 0.0);
            for (int t = 0; t < m; ++t) {
                const double c = perp[b][t];
                if (c == 0.0) continue;
                for (int i = 0; i < bh; ++i) bb[i] += c * borders[t][i];
            }
            double sdot = dot(ba, bb);
            r.e_gram(a, b) = sdot;
            r.e_gram(b, a) = sdot;
        }
    }

    // Split M by the sign of the Hessian form.
    if (r.dim_m > 0) {
        auto m_tuples = coords_to_tuples(basis, r.m_coords);
        Inertia in = inertia(form_gram(hessian(p), pt, m_tuples), tol);
        r.dim_m_minus = in.neg;
        r.dim_m_plus = r.dim_m - in.neg;
    }
    return r;
}

MembershipReport positivity_membership(const NcPoly& p, const std::vector<Matrix>& X,
                                       int path_steps, double tol) {
    if (path_steps < 1) throw std::invalid_argument("positivity_membership: path_steps must be >= 1");
    if (p.coefficient({}) <= 0.0)
        throw std::invalid_argument("positivity_membership: p(0) is not positive definite");
    MembershipReport r;
    r.path_steps = path_steps;
    r.tol = tol;

    auto eig = sym_eig(eval(p, X));
    const int n = eig.vectors.rows();
    double radius = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
    double thr = tol * std::max(1.0, radius);
    r.min_eig = eig.values.front();
    if (r.min_eig < -thr) {
        r.kind = Membership::Exterior;
        return r;
    }
    if (r.min_eig <= thr) {
        r.kind = Membership::Boundary;
        for (int k = 0; k < n; ++k) {
            if (std::abs(eig.values[k]) > thr) continue;
            std::vector<double> vec(n);
            for (int i = 0; i < n; ++i) vec[i] = eig.vectors(i, k);
            r.kernel.push_back(std::move(vec));
        }
        return r;
    }

    // p(X) > 0; interior of the principal component iff p(tX) > 0 along the
    // segment from the origin.
    for (int step = 1; step < path_steps; ++step) {
        const double t = static_cast<double>(step) / path_steps;
        std::vector<Matrix> tx;
        tx.reserve(X.size());
        for (const auto& a : X) {
            Matrix b = a;
            b *= t;
            tx.push_back(std::move(b));
        }
        auto vals = sym_eigvals(eval(p, tx));
        double rad = std::max(std::abs(vals.front()), std::abs(vals.back()));
        if (vals.front() <= tol * std::max(1.0, rad)) {
            r.kind = Membership::DisconnectedPositive;
            return r;
        }
    }
    r.kind = Membership::Interior;
    return r;
}

}  // namespace nccurv

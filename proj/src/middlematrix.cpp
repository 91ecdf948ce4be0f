#include "nccurv/middlematrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace nccurv {

namespace {

long long pow_ll(int g, int e) {
    long long p = 1;
    for (int i = 0; i < e; ++i) p *= g;
    return p;
}

long long word_lex_rank(int g, const Word& w) {
    long long r = 0;
    for (const Letter& l : w) r = r * g + (l.index - 1);
    return r;
}

}  // namespace

long long border_index(int g, int j, const Word& w) {
    const int k = static_cast<int>(w.size());
    const long long before = k == 0 ? 0 : g * alpha(g, k - 1);
    return before + (static_cast<long long>(j) - 1) * pow_ll(g, k) + word_lex_rank(g, w);
}

NcPoly border_poly(int g, int j, const Word& w) {
    NcPoly p(g);
    Word full{Letter{LetterClass::H, j}};
    full.insert(full.end(), w.begin(), w.end());
    p.add_term(full, 1.0);
    return p;
}

std::vector<Word> x_words(int g, int len) {
    std::vector<Word> out{Word{}};
    for (int k = 0; k < len; ++k) {
        std::vector<Word> next;
        next.reserve(out.size() * g);
        for (int i = 1; i <= g; ++i)
            for (const Word& w : out) {
                Word nw{Letter{LetterClass::X, i}};
                nw.insert(nw.end(), w.begin(), w.end());
                next.push_back(std::move(nw));
            }
        out = std::move(next);
    }
    return out;
}

namespace {

// Enumerate the border (j, w) pairs in index order.
std::vector<std::pair<int, Word>> border_entries(int g, int ell) {
    std::vector<std::pair<int, Word>> out;
    for (int k = 0; k <= ell; ++k) {
        auto words = x_words(g, k);
        for (int j = 1; j <= g; ++j)
            for (const Word& w : words) out.emplace_back(j, w);
    }
    return out;
}

}  // namespace

bool MiddleMatrix::is_constant() const {
    for (const NcPoly& e : entries)
        for (const auto& [w, c] : e.terms())
            if (!w.empty() && std::abs(c) > 1e-12) return false;
    return true;
}

Matrix MiddleMatrix::at_zero() const {
    Matrix z(static_cast<int>(size), static_cast<int>(size));
    for (long long r = 0; r < size; ++r)
        for (long long c = 0; c < size; ++c) z(static_cast<int>(r), static_cast<int>(c)) = at(r, c).coefficient(Word{});
    return z;
}

Matrix MiddleMatrix::eval_at(const std::vector<Matrix>& X) const {
    const int n = X.at(0).rows();
    Matrix out(static_cast<int>(size) * n, static_cast<int>(size) * n);
    for (long long r = 0; r < size; ++r)
        for (long long c = 0; c < size; ++c) {
            if (at(r, c).is_zero()) continue;
            Matrix b = eval(at(r, c), X);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) out(static_cast<int>(r) * n + i, static_cast<int>(c) * n + k) = b(i, k);
        }
    return out;
}

NcPoly MiddleMatrix::expand() const {
    NcPoly acc(g);
    auto idx = border_entries(g, ell);
    for (long long r = 0; r < size; ++r) {
        // row entry transposed: (h_i w)^T = w^T h_i
        const auto& [i, wr] = idx[r];
        Word left = word_transpose(wr);
        left.push_back(Letter{LetterClass::H, i});
        for (long long c = 0; c < size; ++c) {
            const NcPoly& m = at(r, c);
            if (m.is_zero()) continue;
            const auto& [j, wc] = idx[c];
            for (const auto& [mw, coeff] : m.terms()) {
                Word full = left;
                full.insert(full.end(), mw.begin(), mw.end());
                full.push_back(Letter{LetterClass::H, j});
                full.insert(full.end(), wc.begin(), wc.end());
                acc.add_term(full, coeff);
            }
        }
    }
    return acc;
}

std::string MiddleMatrix::to_json() const {
    nlohmann::json blocks = nlohmann::json::object();
    for (int bi = 0; bi <= ell; ++bi)
        for (int bj = 0; bj <= ell; ++bj) {
            const long long r0 = bi == 0 ? 0 : g * alpha(g, bi - 1);
            const long long c0 = bj == 0 ? 0 : g * alpha(g, bj - 1);
            const long long nr = g * pow_ll(g, bi), nc = g * pow_ll(g, bj);
            auto rows = nlohmann::json::array();
            bool nonzero = false;
            for (long long r = 0; r < nr; ++r) {
                auto row = nlohmann::json::array();
                for (long long c = 0; c < nc; ++c) {
                    const NcPoly& e = at(r0 + r, c0 + c);
                    nonzero = nonzero || !e.is_zero();
                    row.push_back(e.to_string());
                }
                rows.push_back(row);
            }
            if (nonzero) blocks[std::to_string(bi) + "," + std::to_string(bj)] = rows;
        }
    nlohmann::json j;
    j["g"] = g;
    j["ell"] = ell;
    j["size"] = size;
    j["blocks"] = blocks;
    return j.dump();
}

MiddleMatrix extract_middle(const NcPoly& f, int ell) {
    const int g = f.g();
    const auto prof = f.profile();
    if (!f.is_zero() && (prof.h_degree != 2 || !prof.h_homogeneous || prof.k_degree > 0))
        throw std::invalid_argument("extract_middle: input not homogeneous of degree two in h");
    if (!prof.symmetric) throw std::invalid_argument("extract_middle: input not symmetric");

    // Split each word at its two h-letters.
    struct Placement {
        Word u, m, b;
        int i, j;
        double c;
    };
    std::vector<Placement> placements;
    int need_ell = 0;
    for (const auto& [w, c] : f.terms()) {
        Placement pl;
        pl.c = c;
        int seen = 0;
        Word* cur = &pl.u;
        for (const Letter& l : w) {
            if (l.cls == LetterClass::H) {
                if (seen == 0)
                    pl.i = l.index;
                else
                    pl.j = l.index;
                ++seen;
                cur = seen == 1 ? &pl.m : &pl.b;
            } else {
                cur->push_back(l);
            }
        }
        need_ell = std::max({need_ell, static_cast<int>(pl.u.size()), static_cast<int>(pl.b.size())});
        placements.push_back(std::move(pl));
    }
    if (ell < 0) ell = need_ell;
    if (need_ell > ell) throw std::invalid_argument("extract_middle: border too small for input");

    MiddleMatrix z;
    z.g = g;
    z.ell = ell;
    z.size = g * alpha(g, ell);
    z.entries.assign(static_cast<size_t>(z.size) * z.size, NcPoly(g));
    for (const auto& pl : placements) {
        const long long r = border_index(g, pl.i, word_transpose(pl.u));
        const long long c = border_index(g, pl.j, pl.b);
        z.at(r, c).add_term(pl.m, pl.c);
    }
    return z;
}

ScalarMiddle scalar_middle(const MiddleMatrix& z, double tol) {
    ScalarMiddle s;
    s.z = z.at_zero();
    s.in = inertia(s.z, tol);
    return s;
}

std::vector<NcPoly> derivative_prefix_vector(const NcPoly& p) {
    const int g = p.g();
    const NcPoly dp = directional_derivative(p, 1);
    const int ell = std::max(p.degree() - 1, 0);
    std::vector<NcPoly> a(static_cast<size_t>(g) * alpha(g, ell), NcPoly(g));
    for (const auto& [w, c] : dp.terms()) {
        Word u, b;
        int j = 0;
        Word* cur = &u;
        for (const Letter& l : w) {
            if (l.cls == LetterClass::H) {
                j = l.index;
                cur = &b;
            } else {
                cur->push_back(l);
            }
        }
        a[border_index(g, j, b)].add_term(u, c);
    }
    return a;
}

RelaxedMiddle relaxed_middle(const NcPoly& p, double lambda, double delta) {
    const int g = p.g();
    const int d = p.degree();
    const int ell = std::max(d - 1, 0);

    RelaxedMiddle out;
    out.lambda = lambda;
    out.delta = delta;

    const NcPoly dp = directional_derivative(p, 1);
    // the product is symmetric in exact arithmetic; the two accumulation
    // orders for a word and its reverse can round differently, so resymmetrize
    NcPoly sq = dp.transpose() * dp;
    sq = 0.5 * (sq + sq.transpose());
    out.w = extract_middle(sq, ell);

    // Rank-one structure: W should equal the outer product of the prefix vector.
    auto a = derivative_prefix_vector(p);
    out.rank1_verified = true;
    for (long long r = 0; r < out.w.size && out.rank1_verified; ++r)
        for (long long c = 0; c < out.w.size; ++c) {
            NcPoly prod = a[r].transpose() * a[c];
            if (prod.max_coeff_diff(out.w.at(r, c)) > 1e-12) {
                out.rank1_verified = false;
                break;
            }
        }

    MiddleMatrix z = extract_middle(hessian(p), ell);
    for (long long r = 0; r < z.size; ++r)
        for (long long c = 0; c < z.size; ++c) z.at(r, c) += lambda * out.w.at(r, c);
    if (delta != 0.0)
        for (long long r = 0; r < z.size; ++r) z.at(r, r) += NcPoly::constant(g, delta);
    out.z = std::move(z);
    return out;
}

DegreeBoundReport degree_bound_report(const NcPoly& p, double tol) {
    if (!p.is_symmetric()) throw std::invalid_argument("degree_bound_report: p must be symmetric");
    DegreeBoundReport r{};
    r.d = p.degree();
    r.tol = tol;
    if (r.d <= 1) {
        r.trivial = true;
        r.holds = true;
        r.mu_minus = r.mu_plus = 0;
        r.bound_minus = r.bound_plus = 2;
        return r;
    }
    r.trivial = false;
    const auto sm = scalar_middle(extract_middle(hessian(p), r.d - 2), tol);
    r.mu_minus = sm.in.neg;
    r.mu_plus = sm.in.pos;
    r.bound_minus = 2 * r.mu_minus + 2;
    r.bound_plus = 2 * r.mu_plus + 2;
    r.holds = r.d <= r.bound_minus && r.d <= r.bound_plus;
    return r;
}

ConvexityReport classify_convexity(const NcPoly& p, double tol) {
    if (!p.is_symmetric()) throw std::invalid_argument("classify_convexity: p must be symmetric");
    ConvexityReport r{};
    r.degree = p.degree();
    const NcPoly h = hessian(p);
    if (h.is_zero()) {
        // Affine: both convex and concave; report convex.
        r.kind = Convexity::Convex;
        r.z_constant = true;
        r.in.tol = tol;
        return r;
    }
    const auto z = extract_middle(h, p.degree() - 2);
    r.z_constant = z.is_constant();
    const auto sm = scalar_middle(z, tol);
    r.in = sm.in;
    if (sm.in.neg == 0 && r.z_constant) {
        r.kind = Convexity::Convex;
    } else if (sm.in.pos == 0 && r.z_constant) {
        r.kind = Convexity::Concave;
    } else {
        r.kind = Convexity::Indefinite;
        // Witness: eigenvector for the smaller-signature side.
        const auto eig = sym_eig(sm.z);
        const int col = sm.in.neg > 0 ? 0 : sm.z.rows() - 1;
        r.witness.resize(sm.z.rows());
        for (int i = 0; i < sm.z.rows(); ++i) r.witness[i] = eig.vectors(i, col);
    }
    if (r.kind != Convexity::Indefinite && r.degree > 2)
        throw std::runtime_error("classify_convexity: semidefinite middle matrix with degree > 2");
    return r;
}

SdsCertificate sds_certificate(const NcPoly& p, double tol) {
    if (!p.is_symmetric()) throw std::invalid_argument("sds_certificate: p must be symmetric");
    SdsCertificate cert{};
    const NcPoly h = hessian(p);
    if (h.is_zero()) {
        cert.supported = true;
        cert.residual = 0.0;
        return cert;
    }
    const int g = p.g();
    const int ell = p.degree() - 2;
    const auto z = extract_middle(h, ell);
    const auto sm = scalar_middle(z, tol);
    cert.sigma_minus = sm.in.neg;
    cert.sigma_plus = sm.in.pos;
    if (!z.is_constant()) {
        cert.supported = false;
        return cert;
    }
    cert.supported = true;

    // Z = U D U^T; f_t = sqrt|d_t| (U^T V)_t split by the sign of d_t.
    const auto eig = sym_eig(sm.z);
    const auto entries_list = border_entries(g, ell);
    const double thr = sm.in.tol * std::max(1.0, std::abs(eig.values.empty() ? 0.0 : std::max(std::abs(eig.values.front()), std::abs(eig.values.back()))));
    for (int t = 0; t < static_cast<int>(eig.values.size()); ++t) {
        const double d = eig.values[t];
        if (std::abs(d) <= thr) continue;
        NcPoly f(g);
        const double s = std::sqrt(std::abs(d));
        for (long long r = 0; r < sm.z.rows(); ++r) {
            const double u = eig.vectors(static_cast<int>(r), t);
            if (u == 0.0) continue;
            f += (s * u) * border_poly(g, entries_list[r].first, entries_list[r].second);
        }
        if (d > 0)
            cert.plus_terms.push_back(std::move(f));
        else
            cert.minus_terms.push_back(std::move(f));
    }
    NcPoly recon(g);
    for (const NcPoly& f : cert.plus_terms) recon += f.transpose() * f;
    for (const NcPoly& f : cert.minus_terms) recon -= f.transpose() * f;
    cert.residual = recon.max_coeff_diff(h);
    return cert;
}

}  // namespace nccurv

#ifndef NCCURV_MIDDLEMATRIX_HPP
#define NCCURV_MIDDLEMATRIX_HPP

#include <string>
#include <vector>

#include "nccurv/calculus.hpp"
#include "nccurv/freealg.hpp"
#include "nccurv/mateval.hpp"
#include "nccurv/numerics.hpp"

namespace nccurv {

/// Index of the border entry h_j w(x) (j 1-based, w an x-word) in the
/// canonical order: blocks by |w|, then j major, then w graded-lex minor.
long long border_index(int g, int j, const Word& w);

/// The border entry h_j w(x) as a polynomial.
NcPoly border_poly(int g, int j, const Word& w);

/// All x-words of the given length, lex order.
std::vector<Word> x_words(int g, int len);

/// Square matrix of polynomials Z with V^T Z V equal to a quadratic-in-h
/// polynomial, stored dense over the border of word lengths 0..ell.
struct MiddleMatrix {
    int g = 1;
    int ell = 0;                  // max border word length
    long long size = 0;           // g * alpha(g, ell)
    std::vector<NcPoly> entries;  // row-major

    const NcPoly& at(long long r, long long c) const { return entries[r * size + c]; }
    NcPoly& at(long long r, long long c) { return entries[r * size + c]; }

    /// True when every entry is a constant (non-constant coefficients below
    /// 1e-12 in absolute value).
    bool is_constant() const;

    /// Constant-term specialization Z(0).
    Matrix at_zero() const;

    /// Z(X): every entry evaluated at X, blocks of size n x n.
    Matrix eval_at(const std::vector<Matrix>& X) const;

    /// Re-expansion V(x)[h]^T Z(x) V(x)[h].
    NcPoly expand() const;

    std::string to_json() const;
};

/// Extracts the middle matrix of a symmetric polynomial homogeneous of degree
/// two in h: the monomial a(x) h_i m(x) h_j b(x) with coefficient c places
/// c*m(x) at row (i, reverse(a)) and column (j, b). With ell < 0 the border is
/// sized to fit. Throws std::invalid_argument on non-h-homogeneous-2 or
/// asymmetric input.
MiddleMatrix extract_middle(const NcPoly& f, int ell = -1);

struct ScalarMiddle {
    Matrix z;  // Z(0)
    Inertia in;
};

/// Scalar middle matrix and its inertia; sigma_min_pm = (in.pos, in.neg).
ScalarMiddle scalar_middle(const MiddleMatrix& z, double tol = kDefaultTol);

/// Coefficient vector a with p'(x)[h] = sum a_(j,w)(x) h_j w(x) over the
/// border of word lengths 0..d-1.
std::vector<NcPoly> derivative_prefix_vector(const NcPoly& p);

struct RelaxedMiddle {
    MiddleMatrix z;        // Z(x) + lambda * W(x) + delta * I over the extended border
    MiddleMatrix w;        // middle matrix of p'(x)[h]^T p'(x)[h]
    bool rank1_verified;   // W matched the outer product of the prefix vector exactly
    double lambda, delta;
};

/// Middle matrix of the relaxed Hessian p'' + delta Vt^T Vt + lambda p'^T p'
/// over the extended border (word lengths 0..d-1).
RelaxedMiddle relaxed_middle(const NcPoly& p, double lambda, double delta);

struct DegreeBoundReport {
    int d;
    int mu_minus, mu_plus;
    int bound_minus, bound_plus;
    bool holds;
    bool trivial;  // degree <= 1, nothing to check
    double tol;
};

DegreeBoundReport degree_bound_report(const NcPoly& p, double tol = kDefaultTol);

enum class Convexity { Convex, Concave, Indefinite };

struct ConvexityReport {
    Convexity kind;
    int degree;
    Inertia in;       // of the scalar middle matrix
    bool z_constant;
    std::vector<double> witness;  // offending eigenvector of the scalar middle, if indefinite
};

ConvexityReport classify_convexity(const NcPoly& p, double tol = kDefaultTol);

struct SdsCertificate {
    bool supported;  // false when Z(x) is non-constant
    int sigma_minus, sigma_plus;
    std::vector<NcPoly> plus_terms, minus_terms;  // degree-1-homogeneous in h
    double residual;
};

/// Sum/difference-of-squares decomposition of p'' when the middle matrix is
/// constant; otherwise reports the signature only.
SdsCertificate sds_certificate(const NcPoly& p, double tol = kDefaultTol);

}  // namespace nccurv

#endif

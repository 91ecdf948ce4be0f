#ifndef NCCURV_CURVATURE_HPP
#define NCCURV_CURVATURE_HPP

#include <string>
#include <vector>

#include "nccurv/calculus.hpp"
#include "nccurv/freealg.hpp"
#include "nccurv/mateval.hpp"
#include "nccurv/numerics.hpp"

namespace nccurv {

/// Polarization f(x)[h][k] of a quadratic-in-h polynomial: bilinear in (h,k),
/// symmetric under the swap, and f(x)[h][h] recovers f. For a Hessian this is
/// the mixed Hessian.
NcPoly polarize(const NcPoly& f);

/// Clamped tangent plane {H : p'(X)[H]v = 0} in coordinates over
/// sym_tuple_basis(g, n).
struct TangentSpace {
    std::vector<std::vector<double>> coords;  // orthonormal coordinate vectors
    std::vector<SymTuple> basis;              // the same elements as tuples
    int dim = 0;
    int codim = 0;  // g n(n+1)/2 - dim
    double tol = kDefaultTol;
};

TangentSpace clamped_tangent(const NcPoly& p, const MatrixPoint& pt, double tol = kDefaultTol);

/// True iff H -> p'(X)[H]v is onto R^n.
bool full_rank_point(const NcPoly& p, const MatrixPoint& pt, double tol = kDefaultTol);

/// Gram matrix G_ab = <f(X)[H_a][H_b] v, v> of a quadratic-in-h polynomial on
/// the given (orthonormal) subspace basis, via the symbolic polarization.
Matrix form_gram(const NcPoly& f, const MatrixPoint& pt, const std::vector<SymTuple>& basis);

struct CurvatureReport {
    int c_minus = 0, c_plus = 0;
    int form_zero_dim = 0;
    int tangent_dim = 0;
    bool full_rank = false;
    double tol = kDefaultTol;
};

/// Inertia of the Hessian form on the clamped tangent plane; c_plus counts the
/// strictly positive directions of H -> <p''(X)[H]v, v>.
CurvatureReport c_pm(const NcPoly& p, const MatrixPoint& pt, double tol = kDefaultTol);

/// Inertia (e_-, e_0, e_+) of the form of f on an arbitrary subspace.
Inertia e_pm(const NcPoly& f, const MatrixPoint& pt, const std::vector<SymTuple>& subspace,
             double tol = kDefaultTol);

struct RelaxedSearchConfig {
    std::vector<double> delta_grid{1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
    std::vector<double> lambda_grid{1e1, 1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8};
    double tol = kDefaultTol;
};

struct RelaxedSignatureResult {
    bool matched = false;
    double delta = 0.0, lambda = 0.0;
    int e_minus = 0, e_plus = 0;
    int target = 0;  // c_- (positive variant) or c_+ (negative variant)
    bool negative_variant = false;
    std::string diagnostics;
};

/// Scans the (delta, lambda) grids for the first pair where the inertia of the
/// relaxed Hessian form over all of (S^n)^g stabilizes across two consecutive
/// lambda decades and matches c_- (positive variant; delta > 0, lambda > 0) or
/// c_+ (negative variant; delta < 0, lambda < 0). Exhausting the grid is a
/// reported state, not an error.
RelaxedSignatureResult relaxed_signature(const NcPoly& p, const MatrixPoint& pt,
                                         const RelaxedSearchConfig& cfg = {},
                                         bool negative_variant = false);

struct DecompositionReport {
    int dim_full = 0;
    int dim_n = 0, dim_n_perp = 0;
    int dim_m = 0, dim_l = 0;
    int dim_m_minus = 0, dim_m_plus = 0;
    Matrix a_gram, q_gram, e_gram;  // operators on the N-perp basis
    std::vector<std::vector<double>> n_coords, m_coords, l_coords;  // over sym_tuple_basis
    double tol = kDefaultTol;
};

/// The orthogonal decomposition (S^n)^g = N + M + L used to compare the
/// clamped and relaxed signatures: N kills the extended border, M is the
/// clamped tangent directions inside N-perp, L the rest; M splits into
/// M_- / M_+ by the sign of the Hessian form.
DecompositionReport subspace_decomposition(const NcPoly& p, const MatrixPoint& pt,
                                           double tol = kDefaultTol);

enum class Membership { Interior, Boundary, Exterior, DisconnectedPositive };

struct MembershipReport {
    Membership kind;
    double min_eig = 0.0;
    std::vector<std::vector<double>> kernel;  // of p(X), when on the boundary
    int path_steps = 64;
    double tol = kDefaultTol;
};

/// Semidecision for membership of X in the positivity domain of p: p(X) must
/// be positive definite and the straight-line path t*X must stay so. Requires
/// p(0) positive definite (positive constant term).
MembershipReport positivity_membership(const NcPoly& p, const std::vector<Matrix>& X,
                                       int path_steps = 64, double tol = kDefaultTol);

}  // namespace nccurv

#endif

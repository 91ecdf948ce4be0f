#ifndef NCCURV_NUMERICS_HPP
#define NCCURV_NUMERICS_HPP

#include <vector>

#include "nccurv/matrix.hpp"

namespace nccurv {

/// Shared relative zero threshold. Every report records the tol it used.
inline constexpr double kDefaultTol = 1e-8;

struct EigResult {
    std::vector<double> values;  // ascending
    Matrix vectors;              // orthonormal columns, vectors.col(k) <-> values[k]
};

/// Eigenvalue counts of a symmetric matrix relative to a threshold.
struct Inertia {
    int neg = 0;
    int zero = 0;
    int pos = 0;
    double tol = kDefaultTol;

    bool operator==(const Inertia& o) const { return neg == o.neg && zero == o.zero && pos == o.pos; }
};

/// Full symmetric eigendecomposition by cyclic Jacobi rotations.
/// Input is symmetrized; throws std::invalid_argument on non-finite entries.
EigResult sym_eig(Matrix a);

/// Eigenvalues only (skips accumulating rotations).
std::vector<double> sym_eigvals(Matrix a);

/// Counts eigenvalues below -tol*s, within tol*s and above tol*s,
/// where s = max(1, spectral radius).
Inertia inertia(const Matrix& a, double tol = kDefaultTol);
Inertia inertia_of_eigvals(const std::vector<double>& vals, double tol = kDefaultTol);

/// Orthonormal basis of the span of the given vectors via modified
/// Gram-Schmidt with pivoting; vectors with residual below tol times the
/// largest input norm are dropped.
std::vector<std::vector<double>> orthonormal_span(const std::vector<std::vector<double>>& vecs,
                                                  double tol = kDefaultTol);

int rank(const Matrix& m, double tol = kDefaultTol);

/// Orthonormal basis (as columns) of {c : M c = 0}, of size cols - rank(M).
std::vector<std::vector<double>> nullspace_orthonormal(const Matrix& m, double tol = kDefaultTol);

/// Orthonormal basis of the orthogonal complement of span(basis) inside R^n.
std::vector<std::vector<double>> orthogonal_complement(const std::vector<std::vector<double>>& basis,
                                                       int n, double tol = kDefaultTol);

/// Given a maximal strictly negative subspace U for <Au,u>, returns a
/// complementary subspace V on which the form is >= -tol. The eigenbasis of A
/// is split into strictly negative / positive / null parts and V is spanned by
/// the non-negative part; the compatibility matrix M11 must be invertible,
/// otherwise U was not strictly negative and std::invalid_argument is thrown.
std::vector<std::vector<double>> complementary_nonneg_subspace(
    const Matrix& a, const std::vector<std::vector<double>>& u_basis, double tol = kDefaultTol);

}  // namespace nccurv

#endif

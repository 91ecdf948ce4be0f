#ifndef NCCURV_MATEVAL_HPP
#define NCCURV_MATEVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "nccurv/freealg.hpp"
#include "nccurv/matrix.hpp"

namespace nccurv {

/// alpha_t = 1 + g + ... + g^t, the number of words of length <= t.
long long alpha(int g, int t);

/// g-tuple of symmetric matrices used as a derivative direction.
using SymTuple = std::vector<Matrix>;

/// A g-tuple X of real symmetric n x n matrices, optionally with a vector v.
struct MatrixPoint {
    int g = 0;
    int n = 0;
    std::vector<Matrix> X;
    std::vector<double> v;

    bool has_v() const { return !v.empty(); }
};

/// Parses the point file schema {"g","n","X","v"}; matrices must be symmetric
/// to 1e-12 or the file is rejected with std::invalid_argument.
MatrixPoint point_from_json(const std::string& json_text);
std::string point_to_json(const MatrixPoint& pt);

/// Block-diagonal direct sum with stacked v's; all points must share g.
MatrixPoint direct_sum(const std::vector<MatrixPoint>& points);

/// Evaluates p at X (and H, K for the h/k letter classes). The constant term
/// becomes c * I_n. Throws if a letter class used by p has no assignment.
Matrix eval(const NcPoly& p, const std::vector<Matrix>& X,
            const SymTuple* H = nullptr, const SymTuple* K = nullptr);

/// w(X)v for every word |w| <= max_len, in canonical order (graded, lex within
/// a length). Prefix products are shared across words.
std::vector<std::vector<double>> word_vectors(const std::vector<Matrix>& X,
                                              const std::vector<double>& v, int max_len);

/// The stacked border vector R_s(H): blocks k = 0..s, each block listing
/// H_j * w(X) * v with j major and w (|w| = k) lex minor.
std::vector<double> border_vector(const std::vector<Matrix>& X, const SymTuple& H,
                                  const std::vector<double>& v, int s);

/// Orthonormal basis of (S^n)^g under the trace inner product, built from the
/// normalized symmetrized elementary matrices; g * n(n+1)/2 elements.
std::vector<SymTuple> sym_tuple_basis(int g, int n);

double tuple_inner(const SymTuple& a, const SymTuple& b);

/// Linear combination sum_a coeffs[a] * basis[a].
SymTuple tuple_combine(const std::vector<SymTuple>& basis, const std::vector<double>& coeffs);

}  // namespace nccurv

#endif

#ifndef NCCURV_VARIETY_HPP
#define NCCURV_VARIETY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nccurv/freealg.hpp"
#include "nccurv/mateval.hpp"
#include "nccurv/numerics.hpp"

namespace nccurv {

struct IndependenceCertificate {
    int N = 0;            // word length bound
    long long alpha_N = 0;
    int rank = 0;         // of the n x alpha_N matrix [w(X)v]
    bool independent = false;  // rank == alpha_N; needs n >= alpha_N
    double tol = kDefaultTol;
};

IndependenceCertificate word_independence(const MatrixPoint& pt, int N, double tol = kDefaultTol);

struct AnnihilatorResult {
    int degree = 0;
    NcPoly q{1};      // unit-norm coefficient vector over words |w| <= degree
    double residual = 0.0;  // max ||q(X)v|| over the supplied points
};

/// Smallest D <= max_degree whose stacked word-evaluation matrix over all
/// points has a nontrivial nullspace; nullopt when every rank is full.
std::optional<AnnihilatorResult> minimal_annihilator(const std::vector<MatrixPoint>& points,
                                                     int max_degree, double tol = kDefaultTol);

struct ChsyReport {
    long long formula_bound = 0;     // n g (alpha_s - alpha_r) + g alpha_r (alpha_r - 1)/2
    bool exact = false;              // s == r, where the bound is an equality
    bool has_numeric = false;
    long long numeric_codim = 0;     // n g alpha_s - rank of the stacked border map
    bool independence_ok = false;    // the supplied point passed word_independence at r
};

/// Codimension of the range of H -> V_s(X)[H]v inside R^{n g alpha_s}. The
/// numeric value is computed only when a point is supplied and passes the
/// length-r word-independence test.
ChsyReport chsy_codim(int g, int n, int r, int s, const MatrixPoint* pt = nullptr,
                      double tol = kDefaultTol);

/// One random g-tuple from the scaled Gaussian orthogonal ensemble.
std::vector<Matrix> goe_tuple(int g, int n, std::mt19937_64& rng);

/// Tries to land on the variety {(X, v) : p(X)v = 0}: random X, take an
/// eigen-nullvector of p(X) if one is present, otherwise bisect along a random
/// line (and the segment from the origin) until the negative-eigenvalue count
/// of p jumps, which pins an eigenvalue crossing. Returns nullopt when the
/// budget runs out.
std::optional<MatrixPoint> sample_variety_point(const NcPoly& p, int n, std::mt19937_64& rng,
                                                int budget = 32, double tol = kDefaultTol);

enum class SignatureMode { ScalarMiddle, CeilingAtPoint, SampledLowerBound };

struct VarietySignatureConfig {
    SignatureMode mode = SignatureMode::ScalarMiddle;
    int samples = 32;
    std::uint64_t seed = 1;
    double tol = kDefaultTol;
    std::optional<MatrixPoint> point;  // ceiling mode accepts a user point
    int sample_n = 0;                  // matrix size for sampling; 0 picks a default
};

struct BetaSample {
    int n = 0;
    int c_minus = 0, c_plus = 0;
};

struct VarietySignatureReport {
    int C_minus = 0, C_plus = 0;
    std::string method;  // scalar-middle | ceiling-at-point | sampled-lower-bound
    bool certified = false;
    bool threshold_ok = false;  // ceiling mode: n > g alpha_{d-1}(alpha_{d-1}-1)/2
    std::optional<IndependenceCertificate> certificate;
    std::vector<BetaSample> beta_samples;
    std::optional<MatrixPoint> point;
    bool failed = false;  // no variety point found within the budget
    std::string note;
    double tol = kDefaultTol;
    std::uint64_t seed = 1;
};

VarietySignatureReport variety_signature(const NcPoly& p, const VarietySignatureConfig& cfg = {});

}  // namespace nccurv

#endif

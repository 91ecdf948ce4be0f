#include <cmath>
#include <random>

#include "doctest.h"
#include "nccurv/calculus.hpp"
#include "nccurv/curvature.hpp"
#include "nccurv/middlematrix.hpp"
#include "nccurv/variety.hpp"

using namespace nccurv;

namespace {

Matrix diag(std::vector<double> d) {
    Matrix a(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) a(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return a;
}

MatrixPoint vandermonde_point() {
    MatrixPoint pt;
    pt.g = 1;
    pt.n = 3;
    pt.X = {diag({1.0, 2.0, 3.0})};
    pt.v = {1.0, 1.0, 1.0};
    return pt;
}

}  // namespace

TEST_CASE("word independence at a Vandermonde point") {
    auto c = word_independence(vandermonde_point(), 2);
    CHECK(c.alpha_N == 3);
    CHECK(c.rank == 3);
    CHECK(c.independent);
}

TEST_CASE("word independence fails when Xv vanishes") {
    MatrixPoint pt;
    pt.g = 1;
    pt.n = 2;
    pt.X = {diag({0.0, 1.0})};
    pt.v = {1.0, 0.0};
    auto c = word_independence(pt, 1);
    CHECK_FALSE(c.independent);
    CHECK(c.rank == 1);
}

TEST_CASE("word independence at the degree-two variety point") {
    MatrixPoint pt;
    pt.g = 1;
    pt.n = 2;
    pt.X = {diag({1.0, -1.0})};
    double s = 1.0 / std::sqrt(2.0);
    pt.v = {s, s};
    auto c = word_independence(pt, 1);
    CHECK(c.independent);  // v and Xv are orthogonal
}

TEST_CASE("minimal annihilator of a kernel point is x") {
    MatrixPoint pt;
    pt.g = 1;
    pt.n = 2;
    pt.X = {diag({0.0, 2.0})};
    pt.v = {1.0, 0.0};
    auto r = minimal_annihilator({pt}, 3);
    REQUIRE(r.has_value());
    CHECK(r->degree == 1);
    CHECK(r->residual < 1e-10);
    // q is a multiple of x1: the constant coefficient vanishes
    CHECK(std::abs(r->q.coefficient({})) < 1e-10);
    CHECK(std::abs(r->q.coefficient({{LetterClass::X, 1}})) == doctest::Approx(1.0));
}

TEST_CASE("minimal annihilator of the 1x1 identity point is 1 - x") {
    MatrixPoint pt;
    pt.g = 1;
    pt.n = 1;
    pt.X = {diag({1.0})};
    pt.v = {1.0};
    auto r = minimal_annihilator({pt}, 1);
    REQUIRE(r.has_value());
    CHECK(r->degree == 1);
    double c0 = r->q.coefficient({});
    double c1 = r->q.coefficient({{LetterClass::X, 1}});
    CHECK(c0 == doctest::Approx(-c1));
    CHECK(r->residual < 1e-12);
}

TEST_CASE("independent point has no annihilator") {
    CHECK_FALSE(minimal_annihilator({vandermonde_point()}, 2).has_value());
}

TEST_CASE("dichotomy: independence or annihilator, never both") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        std::mt19937_64 sub(rng());
        NcPoly p = parse_poly("1 - x1^2", 1);
        auto pt = sample_variety_point(p, 3, sub);
        if (!pt) continue;
        int N = 2;  // alpha_2 = 3 == n, so both outcomes are possible a priori
        auto cert = word_independence(*pt, N);
        auto ann = minimal_annihilator({*pt}, N);
        CHECK(cert.independent != ann.has_value());
    }
}

TEST_CASE("chsy codimension formulas") {
    auto r11 = chsy_codim(1, 3, 1, 1);
    CHECK(r11.formula_bound == 1);
    CHECK(r11.exact);
    auto r21 = chsy_codim(2, 3, 1, 1);
    CHECK(r21.formula_bound == 6);
    auto bound = chsy_codim(1, 3, 0, 1);
    CHECK(bound.formula_bound == 3);  // n g (alpha_1 - alpha_0) + 0
    CHECK_FALSE(bound.exact);
    CHECK_THROWS_AS(chsy_codim(1, 3, 2, 1), std::invalid_argument);
}

TEST_CASE("chsy numeric codimension at the Vandermonde point") {
    auto pt = vandermonde_point();
    auto r = chsy_codim(1, 3, 1, 1, &pt);
    CHECK(r.independence_ok);
    REQUIRE(r.has_numeric);
    CHECK(r.numeric_codim == 1);
    CHECK(r.numeric_codim == r.formula_bound);
}

TEST_CASE("chsy numeric codimension for g = 2 at a random certified point") {
    std::mt19937_64 rng(23);
    auto X = goe_tuple(2, 3, rng);
    MatrixPoint pt;
    pt.g = 2;
    pt.n = 3;
    pt.X = X;
    pt.v = {1.0, 0.5, -0.25};
    REQUIRE(word_independence(pt, 1).independent);
    auto r = chsy_codim(2, 3, 1, 1, &pt);
    REQUIRE(r.has_numeric);
    CHECK(r.numeric_codim == r.formula_bound);  // 6
}

TEST_CASE("variety sampling lands on the variety deterministically") {
    NcPoly p = parse_poly("1 - x1^2", 1);
    std::mt19937_64 rng(31);
    auto pt = sample_variety_point(p, 3, rng);
    REQUIRE(pt.has_value());
    auto y = eval(p, pt->X).apply(pt->v);
    CHECK(std::sqrt(dot(y, y)) < 1e-6);
    CHECK(std::sqrt(dot(pt->v, pt->v)) == doctest::Approx(1.0));
    // determinism: same seed, same point
    std::mt19937_64 rng2(31);
    auto pt2 = sample_variety_point(p, 3, rng2);
    REQUIRE(pt2.has_value());
    CHECK(pt->X[0].max_abs() == pt2->X[0].max_abs());
    CHECK(pt->v == pt2->v);
}

TEST_CASE("variety sampling gives up on a positive definite polynomial") {
    NcPoly p = parse_poly("1 + x1^2", 1);
    std::mt19937_64 rng(37);
    CHECK_FALSE(sample_variety_point(p, 3, rng, 6).has_value());
}

TEST_CASE("variety signature of 1 - x^2 in both modes") {
    NcPoly p = parse_poly("1 - x1^2", 1);

    VarietySignatureConfig scalar_cfg;
    scalar_cfg.mode = SignatureMode::ScalarMiddle;
    scalar_cfg.seed = 5;
    auto sm = variety_signature(p, scalar_cfg);
    CHECK(sm.C_minus == 1);
    CHECK(sm.C_plus == 0);
    CHECK(sm.certified);

    VarietySignatureConfig ceil_cfg;
    ceil_cfg.mode = SignatureMode::CeilingAtPoint;
    ceil_cfg.seed = 5;
    MatrixPoint pt;
    pt.g = 1;
    pt.n = 2;
    pt.X = {diag({1.0, -1.0})};
    double s = 1.0 / std::sqrt(2.0);
    pt.v = {s, s};
    ceil_cfg.point = pt;
    auto cm = variety_signature(p, ceil_cfg);
    CHECK(cm.threshold_ok);  // n = 2 > 1
    CHECK(cm.C_minus == 1);
    CHECK(cm.C_plus == 0);
    REQUIRE(cm.beta_samples.size() == 1);
    CHECK(cm.beta_samples[0].c_minus == 1);
}

TEST_CASE("variety signature of x^3 is uncertified in scalar-middle mode") {
    NcPoly p = parse_poly("x1^3", 1);
    VarietySignatureConfig cfg;
    cfg.mode = SignatureMode::ScalarMiddle;
    cfg.seed = 7;
    cfg.samples = 6;
    auto r = variety_signature(p, cfg);
    CHECK(r.C_minus == 1);
    CHECK(r.C_plus == 1);
    CHECK_FALSE(r.certified);  // every variety point of x^3 has Xv = 0
}

TEST_CASE("sampled mode reports a lower bound") {
    NcPoly p = parse_poly("1 - x1^2", 1);
    VarietySignatureConfig cfg;
    cfg.mode = SignatureMode::SampledLowerBound;
    cfg.seed = 11;
    cfg.samples = 6;
    cfg.sample_n = 2;
    auto r = variety_signature(p, cfg);
    REQUIRE_FALSE(r.failed);
    CHECK_FALSE(r.beta_samples.empty());
    CHECK(r.C_minus <= 1);
    CHECK(r.C_plus == 0);
    // the lower bound never exceeds the scalar-middle value here
    VarietySignatureConfig sc;
    auto truth = variety_signature(p, sc);
    CHECK(r.C_minus <= truth.C_minus);
}

TEST_CASE("variety signature fails gracefully with no variety points") {
    NcPoly p = parse_poly("1 + x1^2", 1);
    VarietySignatureConfig cfg;
    cfg.mode = SignatureMode::CeilingAtPoint;
    cfg.samples = 4;
    auto r = variety_signature(p, cfg);
    CHECK(r.failed);
}

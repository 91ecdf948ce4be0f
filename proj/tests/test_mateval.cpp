#include <cmath>
#include <random>

#include "doctest.h"
#include "nccurv/mateval.hpp"

using namespace nccurv;

namespace {

Matrix diag(std::vector<double> d) {
    Matrix a(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) a(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return a;
}

}  // namespace

TEST_CASE("alpha") {
    CHECK(alpha(1, 2) == 3);
    CHECK(alpha(2, 2) == 7);
    CHECK(alpha(3, 0) == 1);
    CHECK(alpha(2, 3) == 15);
}

TEST_CASE("point json round trip and validation") {
    MatrixPoint pt;
    pt.g = 1;
    pt.n = 2;
    pt.X = {diag({1.0, -1.0})};
    pt.v = {1.0, 1.0};
    auto text = point_to_json(pt);
    auto back = point_from_json(text);
    CHECK(back.g == 1);
    CHECK(back.n == 2);
    CHECK(back.X[0](1, 1) == -1.0);
    CHECK(back.v[1] == 1.0);

    CHECK_THROWS_AS(point_from_json(R"({"g":1,"n":2,"X":[[[0,1],[0,0]]]})"),
                    std::invalid_argument);  // not symmetric
    CHECK_THROWS_AS(point_from_json(R"({"g":2,"n":1,"X":[[[1]]]})"),
                    std::invalid_argument);  // wrong tuple length
    CHECK_THROWS_AS(point_from_json(R"({"g":1,"n":1,"X":[[[1]]],"v":[0]})"),
                    std::invalid_argument);  // zero v
    // asymmetry within 1e-12 is accepted and symmetrized
    auto ok = point_from_json(R"({"g":1,"n":2,"X":[[[0,1.0000000000001],[1,0]]]})");
    CHECK(ok.X[0](0, 1) == ok.X[0](1, 0));
}

TEST_CASE("eval basics") {
    NcPoly p = parse_poly("1 - x1^2", 1);
    std::vector<Matrix> X{diag({2.0})};
    CHECK(eval(p, X)(0, 0) == doctest::Approx(-3.0));
    // word order matters
    NcPoly comm = parse_poly("x1*x2 - x2*x1", 2);
    Matrix a(2, 2), b(2, 2);
    a(0, 0) = 1.0;
    b(0, 1) = b(1, 0) = 1.0;
    Matrix c = eval(comm, {a, b});
    CHECK(c(0, 1) == doctest::Approx(1.0));
    CHECK(c(1, 0) == doctest::Approx(-1.0));
}

TEST_CASE("eval respects the involution") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss;
    auto rand_sym = [&](int n) {
        Matrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double x = gauss(rng);
                a(i, j) = x;
                a(j, i) = x;
            }
        return a;
    };
    NcPoly p = parse_poly("x1*x2^2 + 3*x2*x1", 2);
    std::vector<Matrix> X{rand_sym(3), rand_sym(3)};
    Matrix lhs = eval(p.transpose(), X);
    Matrix rhs = eval(p, X).transposed();
    lhs -= rhs;
    CHECK(lhs.max_abs() < 1e-12);
}

TEST_CASE("eval requires assignments for every letter class used") {
    NcPoly p = parse_poly("h1*x1", 1, true);
    std::vector<Matrix> X{diag({1.0})};
    CHECK_THROWS_AS(eval(p, X), std::invalid_argument);
}

TEST_CASE("word vectors enumerate in canonical order") {
    // g=2, diagonal X so products are easy to check by hand
    std::vector<Matrix> X{diag({2.0, 3.0}), diag({5.0, 7.0})};
    std::vector<double> v{1.0, 1.0};
    auto wv = word_vectors(X, v, 2);
    // order: e; x1, x2; x1x1, x1x2, x2x1, x2x2
    REQUIRE(wv.size() == 7);
    CHECK(wv[0] == std::vector<double>{1.0, 1.0});
    CHECK(wv[1] == std::vector<double>{2.0, 3.0});
    CHECK(wv[2] == std::vector<double>{5.0, 7.0});
    CHECK(wv[3] == std::vector<double>{4.0, 9.0});    // x1 x1
    CHECK(wv[4] == std::vector<double>{10.0, 21.0});  // x1 x2 -> X1 X2 v
    CHECK(wv[5] == std::vector<double>{10.0, 21.0});  // x2 x1 -> X2 X1 v (diagonal commutes)
    CHECK(wv[6] == std::vector<double>{25.0, 49.0});  // x2 x2
}

TEST_CASE("border vector layout") {
    std::vector<Matrix> X{diag({2.0, 3.0})};
    SymTuple H{diag({1.0, 1.0})};
    std::vector<double> v{1.0, 1.0};
    auto b = border_vector(X, H, v, 1);
    // blocks: h1 * v, then h1 * X v
    REQUIRE(b.size() == 4);
    CHECK(b[0] == 1.0);
    CHECK(b[1] == 1.0);
    CHECK(b[2] == 2.0);
    CHECK(b[3] == 3.0);
}

TEST_CASE("sym tuple basis is orthonormal and complete") {
    int g = 2, n = 3;
    auto basis = sym_tuple_basis(g, n);
    CHECK(static_cast<int>(basis.size()) == g * n * (n + 1) / 2);
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = 0; b < basis.size(); ++b) {
            double want = a == b ? 1.0 : 0.0;
            CHECK(tuple_inner(basis[a], basis[b]) == doctest::Approx(want));
        }
}

TEST_CASE("direct sum evaluates blockwise") {
    MatrixPoint p1, p2;
    p1.g = p2.g = 1;
    p1.n = 1;
    p1.X = {diag({2.0})};
    p1.v = {1.0};
    p2.n = 2;
    p2.X = {diag({3.0, 4.0})};
    p2.v = {1.0, 2.0};
    auto s = direct_sum({p1, p2});
    CHECK(s.n == 3);
    NcPoly q = parse_poly("x1^2", 1);
    auto y = eval(q, s.X).apply(s.v);
    CHECK(y[0] == doctest::Approx(4.0));
    CHECK(y[1] == doctest::Approx(9.0));
    CHECK(y[2] == doctest::Approx(32.0));
    CHECK_THROWS_AS(direct_sum(std::vector<MatrixPoint>{}), std::invalid_argument);
}

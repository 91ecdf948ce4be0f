#include <random>

#include "doctest.h"
#include "nccurv/calculus.hpp"
#include "nccurv/mateval.hpp"

using namespace nccurv;

TEST_CASE("derivative table for x^4") {
    NcPoly p = parse_poly("x1^4", 1);
    CHECK(directional_derivative(p) ==
          parse_poly("h1*x1^3 + x1*h1*x1^2 + x1^2*h1*x1 + x1^3*h1", 1, true));
    NcPoly p2 = hessian(p);
    CHECK(p2 == parse_poly(
                    "2*(h1*h1*x1*x1 + h1*x1*h1*x1 + h1*x1*x1*h1 + x1*h1*h1*x1 + x1*h1*x1*h1 + x1*x1*h1*h1)",
                    1, true));
    CHECK(directional_derivative(p, 3).term_count() == 4);  // 3! * 4 words? see count check below
    CHECK(directional_derivative(p, 4).coefficient(Word(4, Letter{LetterClass::H, 1})) == 24.0);
    CHECK(directional_derivative(p, 5).is_zero());
}

TEST_CASE("third derivative of x^4 has coefficient 6 on each word") {
    NcPoly p3 = directional_derivative(parse_poly("x1^4", 1), 3);
    // words: one x, three h, all positions
    CHECK(p3.term_count() == 4);
    for (const auto& [w, c] : p3.terms()) {
        (void)w;
        CHECK(c == 6.0);
    }
}

TEST_CASE("derivative of x2 x1 x2") {
    NcPoly p = parse_poly("x2*x1*x2", 2);
    CHECK(directional_derivative(p) ==
          parse_poly("h2*x1*x2 + x2*h1*x2 + x2*x1*h2", 2, true));
}

TEST_CASE("derivative of x1^2 x2") {
    NcPoly p = parse_poly("x1^2*x2", 2);
    CHECK(hessian(p) == parse_poly("2*(h1*h1*x2 + h1*x1*h2 + x1*h1*h2)", 2, true));
}

TEST_CASE("hessian of x^3") {
    CHECK(hessian(parse_poly("x1^3", 1)) ==
          parse_poly("2*(h1*h1*x1 + h1*x1*h1 + x1*h1*h1)", 1, true));
}

TEST_CASE("derivative is linear and respects the involution") {
    NcPoly p = parse_poly("x1*x2*x1", 2);
    NcPoly q = parse_poly("x2^3", 2);
    CHECK(directional_derivative(p + q) ==
          directional_derivative(p) + directional_derivative(q));
    CHECK(directional_derivative(p.transpose()) == directional_derivative(p).transpose());
}

TEST_CASE("hessian is h-homogeneous of degree two and symmetric for symmetric p") {
    NcPoly p = parse_poly("x1^2*x2 + x2*x1^2 + x1^4", 2);
    auto prof = hessian(p).profile();
    CHECK(prof.h_degree == 2);
    CHECK(prof.h_homogeneous);
    CHECK(prof.symmetric);
}

TEST_CASE("finite difference oracle for the first derivative") {
    // p(X + tH) differentiated at t=0 must match p'(X)[H].
    std::mt19937_64 rng(5);
    std::normal_distribution<double> gauss;
    int g = 2, n = 3;
    NcPoly p = parse_poly("x1*x2*x1 + x2^2 + x1^3", g);
    NcPoly dp = directional_derivative(p);
    auto rand_sym = [&]() {
        Matrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double x = gauss(rng);
                a(i, j) = x;
                a(j, i) = x;
            }
        return a;
    };
    std::vector<Matrix> X{rand_sym(), rand_sym()};
    SymTuple H{rand_sym(), rand_sym()};
    const double t = 1e-6;
    std::vector<Matrix> Xp, Xm;
    for (int j = 0; j < g; ++j) {
        Matrix hp = H[j];
        hp *= t;
        Matrix a = X[j];
        a += hp;
        Xp.push_back(a);
        Matrix b = X[j];
        b -= hp;
        Xm.push_back(b);
    }
    Matrix fd = eval(p, Xp);
    fd -= eval(p, Xm);
    fd *= 1.0 / (2.0 * t);
    Matrix exact = eval(dp, X, &H);
    fd -= exact;
    CHECK(fd.max_abs() < 1e-7);
}

TEST_CASE("mixed hessian of x^3") {
    NcPoly m = mixed_hessian(parse_poly("x1^3", 1));
    // all six orderings of {h,k,x}, coefficient 1
    CHECK(m.term_count() == 6);
    for (const auto& [w, c] : m.terms()) {
        (void)w;
        CHECK(c == 1.0);
    }
    // setting k = h recovers the hessian
    CHECK(rename_class(m, LetterClass::K, LetterClass::H) ==
          hessian(parse_poly("x1^3", 1)));
}

import math

import nccurv


def test_parse_and_arithmetic():
    p = nccurv.Poly.parse("x1^3", 1)
    assert p.degree == 3
    assert p.symmetric
    q = nccurv.Poly.parse("x1*x2", 2)
    assert not q.symmetric
    assert (q + q.transpose()).symmetric
    assert str(nccurv.Poly.parse("x1*x1", 2)) == "x1^2"


def test_derivative_and_hessian():
    p = nccurv.Poly.parse("x1^3", 1)
    d = nccurv.derivative(p)
    assert d.degree == 3
    h = nccurv.hessian(p)
    assert h == nccurv.derivative(p, 2)


def test_eval():
    p = nccurv.Poly.parse("1 - x1^2", 1)
    out = nccurv.eval(p, [[[2.0]]])
    assert out == [[-3.0]]


def test_middle_matrix_inertia():
    assert nccurv.middle_matrix_inertia(nccurv.Poly.parse("x1^3", 1)) == (1, 0, 1)
    assert nccurv.middle_matrix_inertia(nccurv.Poly.parse("x1^4", 1)) == (1, 0, 2)


def test_degree_bound():
    r = nccurv.degree_bound(nccurv.Poly.parse("x1^4", 1))
    assert r["d"] == 4
    assert r["holds"]


def test_convexity():
    assert nccurv.convexity(nccurv.Poly.parse("x1^2 + x2^2", 2)) == "convex"
    assert nccurv.convexity(nccurv.Poly.parse("x1^2 - 1", 1)) == "convex"
    assert nccurv.convexity(nccurv.Poly.parse("1 - x1^2", 1)) == "concave"


def test_curvature_on_the_quintic_example():
    X = [[[1, 0, 0, 0, 0],
          [0, 1, 0, 0, 0],
          [0, 0, -1, 0, 0],
          [0, 0, 0, -1, 0],
          [0, 0, 0, 0, -1]]]
    v = [2, 0, 0, 0, 1]
    r = nccurv.curvature(nccurv.Poly.parse("x1^3", 1), 1, X, v)
    assert r["c_minus"] == 1
    assert r["c_plus"] == 3


def test_variety_signature():
    r = nccurv.variety_signature(nccurv.Poly.parse("1 - x1^2", 1), "scalar", 16, 3)
    assert (r["C_minus"], r["C_plus"]) == (1, 0)
    assert r["certified"]


def test_version():
    assert nccurv.__version__ == "0.1.0"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nccurv/calculus.hpp"
#include "nccurv/curvature.hpp"
#include "nccurv/freealg.hpp"
#include "nccurv/mateval.hpp"
#include "nccurv/middlematrix.hpp"
#include "nccurv/numerics.hpp"
#include "nccurv/variety.hpp"

namespace py = pybind11;
using namespace nccurv;

namespace {

Matrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    const int m = n ? static_cast<int>(rows[0].size()) : 0;
    Matrix a(n, m);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != m)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < m; ++j) a(i, j) = rows[i][j];
    }
    return a;
}

std::vector<std::vector<double>> matrix_to_rows(const Matrix& a) {
    std::vector<std::vector<double>> rows(a.rows(), std::vector<double>(a.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
    return rows;
}

MatrixPoint point_from_py(int g, const std::vector<std::vector<std::vector<double>>>& xs,
                          const std::vector<double>& v) {
    MatrixPoint pt;
    pt.g = g;
    if (static_cast<int>(xs.size()) != g) throw std::invalid_argument("expected g matrices");
    for (const auto& rows : xs) {
        Matrix a = matrix_from_rows(rows);
        if (a.rows() != a.cols()) throw std::invalid_argument("matrices must be square");
        if (a.asymmetry() > 1e-12) throw std::invalid_argument("matrices must be symmetric");
        a.symmetrize();
        pt.n = a.rows();
        pt.X.push_back(std::move(a));
    }
    pt.v = v;
    return pt;
}

}  // namespace

PYBIND11_MODULE(_nccurv, m) {
    m.doc() = "curvature and signature analysis of noncommutative polynomials";

    py::class_<NcPoly>(m, "Poly")
        .def_static("parse", [](const std::string& text, int g) { return parse_poly(text, g); },
                    py::arg("text"), py::arg("g") = 1)
        .def_property_readonly("g", &NcPoly::g)
        .def_property_readonly("degree", &NcPoly::degree)
        .def_property_readonly("symmetric", &NcPoly::is_symmetric)
        .def("transpose", &NcPoly::transpose)
        .def("__add__", [](const NcPoly& a, const NcPoly& b) { return a + b; })
        .def("__sub__", [](const NcPoly& a, const NcPoly& b) { return a - b; })
        .def("__mul__", [](const NcPoly& a, const NcPoly& b) { return a * b; })
        .def("__rmul__", [](const NcPoly& a, double s) { return a * s; })
        .def("__pow__", &NcPoly::pow)
        .def("__eq__", [](const NcPoly& a, const NcPoly& b) { return a == b; })
        .def("__str__", &NcPoly::to_string)
        .def("__repr__", [](const NcPoly& p) { return "Poly(\"" + p.to_string() + "\")"; });

    m.def("derivative", &directional_derivative, py::arg("p"), py::arg("order") = 1);
    m.def("hessian", &hessian);

    m.def("eval",
          [](const NcPoly& p, const std::vector<std::vector<std::vector<double>>>& xs) {
              std::vector<Matrix> X;
              for (const auto& rows : xs) X.push_back(matrix_from_rows(rows));
              return matrix_to_rows(eval(p, X));
          },
          py::arg("p"), py::arg("X"));

    m.def("middle_matrix_inertia",
          [](const NcPoly& p, double tol) {
              auto sm = scalar_middle(extract_middle(hessian(p)), tol);
              return py::make_tuple(sm.in.neg, sm.in.zero, sm.in.pos);
          },
          py::arg("p"), py::arg("tol") = kDefaultTol);

    m.def("degree_bound",
          [](const NcPoly& p) {
              auto r = degree_bound_report(p);
              py::dict d;
              d["d"] = r.d;
              d["mu_minus"] = r.mu_minus;
              d["mu_plus"] = r.mu_plus;
              d["holds"] = r.holds;
              d["trivial"] = r.trivial;
              return d;
          },
          py::arg("p"));

    m.def("convexity",
          [](const NcPoly& p) {
              auto r = classify_convexity(p);
              return r.kind == Convexity::Convex     ? "convex"
                     : r.kind == Convexity::Concave ? "concave"
                                                    : "indefinite";
          },
          py::arg("p"));

    m.def("curvature",
          [](const NcPoly& p, int g, const std::vector<std::vector<std::vector<double>>>& xs,
             const std::vector<double>& v, double tol) {
              auto rep = c_pm(p, point_from_py(g, xs, v), tol);
              py::dict d;
              d["c_minus"] = rep.c_minus;
              d["c_plus"] = rep.c_plus;
              d["tangent_dim"] = rep.tangent_dim;
              d["full_rank"] = rep.full_rank;
              return d;
          },
          py::arg("p"), py::arg("g"), py::arg("X"), py::arg("v"), py::arg("tol") = kDefaultTol);

    m.def("variety_signature",
          [](const NcPoly& p, const std::string& mode, int samples, std::uint64_t seed) {
              VarietySignatureConfig cfg;
              cfg.samples = samples;
              cfg.seed = seed;
              cfg.mode = mode == "scalar"    ? SignatureMode::ScalarMiddle
                         : mode == "ceiling" ? SignatureMode::CeilingAtPoint
                                             : SignatureMode::SampledLowerBound;
              auto r = variety_signature(p, cfg);
              py::dict d;
              d["C_minus"] = r.C_minus;
              d["C_plus"] = r.C_plus;
              d["method"] = r.method;
              d["certified"] = r.certified;
              d["failed"] = r.failed;
              return d;
          },
          py::arg("p"), py::arg("mode") = "scalar", py::arg("samples") = 32, py::arg("seed") = 1);

    m.attr("__version__") = "0.1.0";
}

#include "nccurv/mateval.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace nccurv {

long long alpha(int g, int t) {
    long long a = 0, p = 1;
    for (int k = 0; k <= t; ++k) {
        a += p;
        p *= g;
    }
    return a;
}

MatrixPoint point_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    MatrixPoint pt;
    pt.g = j.at("g").get<int>();
    pt.n = j.at("n").get<int>();
    if (pt.g < 1 || pt.n < 1) throw std::invalid_argument("point: g and n must be >= 1");
    const auto& xs = j.at("X");
    if (static_cast<int>(xs.size()) != pt.g)
        throw std::invalid_argument("point: expected g matrices in X");
    for (const auto& m : xs) {
        Matrix a(pt.n, pt.n);
        if (static_cast<int>(m.size()) != pt.n) throw std::invalid_argument("point: bad matrix size");
        for (int i = 0; i < pt.n; ++i) {
            const auto& row = m.at(i);
            if (static_cast<int>(row.size()) != pt.n)
                throw std::invalid_argument("point: bad matrix row size");
            for (int k = 0; k < pt.n; ++k) a(i, k) = row.at(k).get<double>();
        }
        if (!a.is_finite()) throw std::invalid_argument("point: non-finite matrix entry");
        if (a.asymmetry() > 1e-12) throw std::invalid_argument("point: matrix not symmetric to 1e-12");
        a.symmetrize();
        pt.X.push_back(std::move(a));
    }
    if (j.contains("v")) {
        for (const auto& x : j.at("v")) pt.v.push_back(x.get<double>());
        if (static_cast<int>(pt.v.size()) != pt.n)
            throw std::invalid_argument("point: v has wrong length");
        if (norm2(pt.v) == 0.0) throw std::invalid_argument("point: v must be nonzero");
    }
    return pt;
}

std::string point_to_json(const MatrixPoint& pt) {
    nlohmann::json j;
    j["g"] = pt.g;
    j["n"] = pt.n;
    auto xs = nlohmann::json::array();
    for (const Matrix& a : pt.X) {
        auto m = nlohmann::json::array();
        for (int i = 0; i < pt.n; ++i) {
            auto row = nlohmann::json::array();
            for (int k = 0; k < pt.n; ++k) row.push_back(a(i, k));
            m.push_back(row);
        }
        xs.push_back(m);
    }
    j["X"] = xs;
    if (pt.has_v()) j["v"] = pt.v;
    return j.dump();
}

MatrixPoint direct_sum(const std::vector<MatrixPoint>& points) {
    if (points.empty()) throw std::invalid_argument("direct_sum: no points");
    MatrixPoint out;
    out.g = points[0].g;
    out.n = 0;
    bool all_v = true;
    for (const auto& p : points) {
        if (p.g != out.g) throw std::invalid_argument("direct_sum: mismatched g");
        out.n += p.n;
        all_v = all_v && p.has_v();
    }
    for (int j = 0; j < out.g; ++j) {
        Matrix a(out.n, out.n);
        int off = 0;
        for (const auto& p : points) {
            for (int i = 0; i < p.n; ++i)
                for (int k = 0; k < p.n; ++k) a(off + i, off + k) = p.X[j](i, k);
            off += p.n;
        }
        out.X.push_back(std::move(a));
    }
    if (all_v)
        for (const auto& p : points) out.v.insert(out.v.end(), p.v.begin(), p.v.end());
    return out;
}

Matrix eval(const NcPoly& p, const std::vector<Matrix>& X, const SymTuple* H, const SymTuple* K) {
    if (X.empty()) throw std::invalid_argument("eval: empty X tuple");
    const int n = X[0].rows();
    auto pick = [&](const Letter& l) -> const Matrix& {
        const std::vector<Matrix>* tup = nullptr;
        switch (l.cls) {
            case LetterClass::X: tup = &X; break;
            case LetterClass::H: tup = H; break;
            case LetterClass::K: tup = K; break;
        }
        if (!tup || static_cast<int>(tup->size()) < l.index)
            throw std::invalid_argument("eval: missing assignment for a letter");
        const Matrix& m = (*tup)[l.index - 1];
        if (m.rows() != n || m.cols() != n) throw std::invalid_argument("eval: dimension mismatch");
        return m;
    };

    Matrix acc(n, n);
    std::map<Word, Matrix, WordLess> cache;
    for (const auto& [w, c] : p.terms()) {
        if (w.empty()) {
            for (int i = 0; i < n; ++i) acc(i, i) += c;
            continue;
        }
        auto it = cache.find(w);
        if (it == cache.end()) {
            // Reuse the longest cached prefix of w.
            Word prefix = w;
            Matrix m;
            while (true) {
                prefix.pop_back();
                if (prefix.empty()) {
                    m = pick(w[0]);
                    for (size_t i = 1; i < w.size(); ++i) m = m * pick(w[i]);
                    break;
                }
                auto pit = cache.find(prefix);
                if (pit != cache.end()) {
                    m = pit->second;
                    for (size_t i = prefix.size(); i < w.size(); ++i) m = m * pick(w[i]);
                    break;
                }
            }
            it = cache.emplace(w, std::move(m)).first;
        }
        acc += it->second * c;
    }
    return acc;
}

std::vector<std::vector<double>> word_vectors(const std::vector<Matrix>& X,
                                              const std::vector<double>& v, int max_len) {
    const int g = static_cast<int>(X.size());
    std::vector<std::vector<double>> out;
    out.push_back(v);  // empty word
    // level = list of w(X)v for |w| = k, lex order; w = x_i * w' extends by
    // prepending, which preserves lex order when i is the outer loop.
    std::vector<std::vector<double>> level{v};
    for (int k = 1; k <= max_len; ++k) {
        std::vector<std::vector<double>> next;
        next.reserve(level.size() * g);
        for (int i = 0; i < g; ++i)
            for (const auto& wv : level) next.push_back(X[i].apply(wv));
        for (const auto& wv : next) out.push_back(wv);
        level = std::move(next);
    }
    return out;
}

std::vector<double> border_vector(const std::vector<Matrix>& X, const SymTuple& H,
                                  const std::vector<double>& v, int s) {
    const int g = static_cast<int>(X.size());
    if (static_cast<int>(H.size()) != g) throw std::invalid_argument("border_vector: H tuple size");
    const int n = X.empty() ? 0 : X[0].rows();
    auto wv = word_vectors(X, v, s);
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n) * g * alpha(g, s));
    size_t word_off = 0;
    long long len_count = 1;
    for (int k = 0; k <= s; ++k) {
        for (int j = 0; j < g; ++j)
            for (long long t = 0; t < len_count; ++t) {
                auto y = H[j].apply(wv[word_off + t]);
                out.insert(out.end(), y.begin(), y.end());
            }
        word_off += len_count;
        len_count *= g;
    }
    return out;
}

std::vector<SymTuple> sym_tuple_basis(int g, int n) {
    if (g < 1 || n < 1) throw std::invalid_argument("sym_tuple_basis: g,n must be >= 1");
    std::vector<SymTuple> basis;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < g; ++j)
        for (int i = 0; i < n; ++i)
            for (int l = i; l < n; ++l) {
                SymTuple t(g, Matrix(n, n));
                if (i == l) {
                    t[j](i, i) = 1.0;
                } else {
                    t[j](i, l) = inv_sqrt2;
                    t[j](l, i) = inv_sqrt2;
                }
                basis.push_back(std::move(t));
            }
    return basis;
}

double tuple_inner(const SymTuple& a, const SymTuple& b) {
    double s = 0.0;
    for (size_t j = 0; j < a.size(); ++j)
        for (int i = 0; i < a[j].rows(); ++i)
            for (int k = 0; k < a[j].cols(); ++k) s += a[j](i, k) * b[j](i, k);
    return s;
}

SymTuple tuple_combine(const std::vector<SymTuple>& basis, const std::vector<double>& coeffs) {
    if (basis.empty()) throw std::invalid_argument("tuple_combine: empty basis");
    SymTuple out(basis[0].size(), Matrix(basis[0][0].rows(), basis[0][0].cols()));
    for (size_t a = 0; a < basis.size(); ++a) {
        const double c = coeffs[a];
        if (c == 0.0) continue;
        for (size_t j = 0; j < out.size(); ++j) out[j] += basis[a][j] * c;
    }
    return out;
}

}  // namespace nccurv

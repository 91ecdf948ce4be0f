#include "nccurv/calculus.hpp"

#include <stdexcept>

namespace nccurv {

namespace {

NcPoly derive_once(const NcPoly& p, LetterClass target) {
    NcPoly r(p.g());
    for (const auto& [w, c] : p.terms()) {
        for (size_t i = 0; i < w.size(); ++i) {
            if (w[i].cls != LetterClass::X) continue;
            Word dw = w;
            dw[i].cls = target;
            r.add_term(dw, c);
        }
    }
    return r;
}

}  // namespace

NcPoly directional_derivative(const NcPoly& p, int order) {
    if (order < 1) throw std::invalid_argument("directional_derivative: order must be >= 1");
    NcPoly r = p;
    for (int k = 0; k < order; ++k) r = derive_once(r, LetterClass::H);
    return r;
}

NcPoly hessian(const NcPoly& p) { return directional_derivative(p, 2); }

NcPoly mixed_hessian(const NcPoly& p) {
    return derive_once(directional_derivative(p, 1), LetterClass::K);
}

}  // namespace nccurv

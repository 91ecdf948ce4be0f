#ifndef NCCURV_CALCULUS_HPP
#define NCCURV_CALCULUS_HPP

#include "nccurv/freealg.hpp"

namespace nccurv {

/// k-th directional derivative p^(k)(x)[h]. Differentiation replaces one
/// x-letter at a time by the matching h-letter; h-letters already present are
/// treated as constants, so iterating the first derivative yields the higher
/// orders.
NcPoly directional_derivative(const NcPoly& p, int order = 1);

/// p''(x)[h], homogeneous of degree two in h.
NcPoly hessian(const NcPoly& p);

/// p''(x)[h][k]: p'(x)[h] differentiated once more with the x-letters going to
/// k-letters. Bilinear in (h,k) and symmetric under the h<->k swap.
NcPoly mixed_hessian(const NcPoly& p);

}  // namespace nccurv

#endif

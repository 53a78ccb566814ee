#pragma once

#include <stdexcept>

#include "terracini/chern.hpp"
#include "terracini/determinant.hpp"

namespace terracini {

// The expected Terracini count, as a closed-form polynomial in d and g.
struct TerraciniFormula {
    int n;
    Poly t;
};

// The n x n Porteous determinant matrix for the expected class of the locus
// where the evaluation map drops rank: entry (i, j) = c_{1+j-i}, so the first
// row is c_1 ... c_n, the subdiagonal is c_0 = 1, and everything further
// below vanishes.
inline SymClassMatrix porteous_matrix(const ChernVector& cv) {
    SymClassMatrix m(cv.n, cv.n);
    for (int i = 0; i < cv.n; ++i)
        for (int j = 0; j < cv.n; ++j) m(i, j) = cv.chern_or_zero(1 + j - i);
    return m;
}

// Degree-n class of the expected Terracini locus from prepared Chern data.
inline SymClass terracini_class_from(const ChernVector& cv) {
    return det_berkowitz<SymClass>(porteous_matrix(cv));
}

// Same class along the formal-inverse route: (-1)^n [c^{-1}]_n. Agreement of
// the two routes is one of the executable cross-checks in the verify suite.
inline SymClass terracini_class_inverse_route(const ChernVector& cv) {
    SymClass s = inverse_series(cv.c).back();
    return (cv.n % 2 == 0) ? s : -s;
}

// Full pipeline: GRR Chern character -> power sums -> Newton -> Porteous.
inline SymClass terracini_class(const Context& ctx) {
    return terracini_class_from(chern_vector(ch_EC_grr(ctx)));
}

inline TerraciniFormula terracini_formula(const Context& ctx) {
    if (ctx.n < 2)
        throw std::invalid_argument("terracini_formula: n must be >= 2");
    return TerraciniFormula{ctx.n, eval_top(terracini_class(ctx))};
}

} // namespace terracini

#pragma once

#include <stdexcept>
#include <vector>

#include "terracini/eigen_support.hpp"

namespace terracini {

// Determinants over commutative rings with zero divisors (SymClass has
// nilpotents), so no elimination-style algorithm applies: both routes below
// use ring operations only.

// Cofactor expansion along the first row, skipping zero entries. Exponential,
// but the matrices here are tiny (n <= 8) and it is the natural cross-check
// for the Berkowitz route.
template <typename Scalar>
Scalar det_cofactor(const SquareMatrix<Scalar>& m) {
    const auto n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("det_cofactor: non-square matrix");
    if (n == 0) return Scalar(1);
    if (n == 1) return m(0, 0);
    Scalar det = Scalar(0);
    for (Eigen::Index j = 0; j < n; ++j) {
        const Scalar& pivot = m(0, j);
        bool skip = false;
        if constexpr (requires { pivot.is_zero(); }) skip = pivot.is_zero();
        if (skip) continue;
        SquareMatrix<Scalar> sub(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            Eigen::Index cc = 0;
            for (Eigen::Index c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = m(r, c);
            }
        }
        Scalar term = pivot * det_cofactor(sub);
        if (j % 2 == 0)
            det = det + term;
        else
            det = det - term;
    }
    return det;
}

// Berkowitz' division-free characteristic polynomial. Returns the
// coefficients of det(lambda I - A) from the leading power down:
// v[0] = 1, v[k] = coefficient of lambda^{n-k}.
template <typename Scalar>
std::vector<Scalar> charpoly_berkowitz(const SquareMatrix<Scalar>& m) {
    const auto n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("charpoly_berkowitz: non-square matrix");
    std::vector<Scalar> v{Scalar(1)};
    if (n == 0) return v;
    v.push_back(Scalar(0) - m(0, 0));
    for (Eigen::Index i = 1; i < n; ++i) {
        // Toeplitz column for the i-th bordering step:
        // t[0] = 1, t[1] = -A(i,i), t[k] = -(R M^{k-2} C) for the leading
        // principal block M, border row R and border column C.
        std::vector<Scalar> t;
        t.reserve(static_cast<size_t>(i) + 2);
        t.push_back(Scalar(1));
        t.push_back(Scalar(0) - m(i, i));
        std::vector<Scalar> w(static_cast<size_t>(i)); // running M^k C
        for (Eigen::Index r = 0; r < i; ++r) w[static_cast<size_t>(r)] = m(r, i);
        for (Eigen::Index k = 0; k < i; ++k) {
            Scalar dot = Scalar(0);
            for (Eigen::Index r = 0; r < i; ++r) dot = dot + m(i, r) * w[static_cast<size_t>(r)];
            t.push_back(Scalar(0) - dot);
            if (k + 1 < i) {
                std::vector<Scalar> next(static_cast<size_t>(i), Scalar(0));
                for (Eigen::Index r = 0; r < i; ++r) {
                    Scalar acc = Scalar(0);
                    for (Eigen::Index c = 0; c < i; ++c)
                        acc = acc + m(r, c) * w[static_cast<size_t>(c)];
                    next[static_cast<size_t>(r)] = acc;
                }
                w = std::move(next);
            }
        }
        // v <- T v with T lower-triangular Toeplitz, T(r,c) = t[r-c].
        std::vector<Scalar> nv(v.size() + 1, Scalar(0));
        for (size_t r = 0; r < nv.size(); ++r) {
            Scalar acc = Scalar(0);
            for (size_t c = 0; c < v.size() && c <= r; ++c) {
                if (r - c < t.size()) acc = acc + t[r - c] * v[c];
            }
            nv[r] = acc;
        }
        v = std::move(nv);
    }
    return v;
}

// det(A) = (-1)^n * [constant coefficient of the characteristic polynomial].
template <typename Scalar>
Scalar det_berkowitz(const SquareMatrix<Scalar>& m) {
    auto v = charpoly_berkowitz(m);
    Scalar c = v.back();
    return (m.rows() % 2 == 0) ? c : Scalar(0) - c;
}

} // namespace terracini

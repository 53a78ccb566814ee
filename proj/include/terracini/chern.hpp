#pragma once

#include <stdexcept>
#include <vector>

#include "terracini/grr.hpp"

namespace terracini {

// Power sums and Chern classes of E_C, all homogeneous SymClass values.
// p holds p_1 ... p_n (index 0 unused is avoided: p[i-1] = p_i);
// c holds c_0 ... c_n with c_0 = 1.
struct ChernVector {
    int n;
    std::vector<SymClass> p;
    std::vector<SymClass> c;

    const SymClass& power_sum(int i) const { return p.at(static_cast<size_t>(i - 1)); }
    const SymClass& chern(int i) const { return c.at(static_cast<size_t>(i)); }

    // Porteous-style lookup: c_k = 0 outside 0..n.
    SymClass chern_or_zero(int k) const {
        if (k < 0 || k > n) return SymClass::zero(n);
        return c[static_cast<size_t>(k)];
    }
};

// ch(E_C) = rank + sum_i p_i / i!  =>  p_i = i! * ch_i.
inline std::vector<SymClass> power_sums_from_ch(const ChCharacter& ch) {
    std::vector<SymClass> p;
    p.reserve(static_cast<size_t>(ch.n));
    Rational factorial(1);
    for (int i = 1; i <= ch.n; ++i) {
        factorial *= Rational(i);
        p.push_back(factorial * ch.part(i));
    }
    return p;
}

// Newton's identities, solved for the elementary classes:
// p_i - c_1 p_{i-1} + c_2 p_{i-2} - ... + (-1)^{i-1} c_{i-1} p_1 + (-1)^i i c_i = 0.
// The only divisions are by the integers i, exact over Rational coefficients.
inline std::vector<SymClass> chern_newton(const std::vector<SymClass>& p, int level) {
    int n = static_cast<int>(p.size());
    std::vector<SymClass> c;
    c.reserve(static_cast<size_t>(n) + 1);
    c.push_back(SymClass::one(level));
    for (int i = 1; i <= n; ++i) {
        SymClass acc = SymClass::zero(level);
        Rational sign(1);
        for (int j = 0; j < i; ++j) {
            acc += sign * (c[static_cast<size_t>(j)] * p[static_cast<size_t>(i - j - 1)]);
            sign = -sign;
        }
        // acc = sum_{j<i} (-1)^j c_j p_{i-j}; solve (-1)^i i c_i = -acc.
        Rational unit = (i % 2 == 0) ? Rational(-1, i) : Rational(1, i);
        c.push_back(unit * acc);
    }
    return c;
}

// Independent route: total Chern class as the exponential of the logarithm
// series, c = exp( sum_i (-1)^{i-1} p_i / i ), read in the truncated grading.
inline std::vector<SymClass> chern_exp(const std::vector<SymClass>& p, int level) {
    int n = static_cast<int>(p.size());
    SymClass log_c = SymClass::zero(level);
    Rational sign(1);
    for (int i = 1; i <= n; ++i) {
        log_c += (sign / Rational(i)) * p[static_cast<size_t>(i - 1)];
        sign = -sign;
    }
    SymClass total = exp_class(log_c);
    std::vector<SymClass> c;
    c.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c.push_back(total.homogeneous_part(i));
    return c;
}

// Formal inverse s of the total class c, term by term: s_0 = 1 and
// s_k = -sum_{j=1..k} c_j s_{k-j}, so that the graded convolution s*c = 1.
inline std::vector<SymClass> inverse_series(const std::vector<SymClass>& c) {
    if (c.empty() || !(c[0] == SymClass(1)))
        throw std::invalid_argument("inverse_series: c_0 must be 1");
    std::vector<SymClass> s;
    s.reserve(c.size());
    s.push_back(c[0]);
    for (size_t k = 1; k < c.size(); ++k) {
        SymClass acc = c[0] - c[0]; // zero at the right level
        for (size_t j = 1; j <= k; ++j) acc += c[j] * s[k - j];
        s.push_back(-acc);
    }
    return s;
}

// Full pipeline packaging: power sums from a Chern character, Chern classes
// via Newton's identities.
inline ChernVector chern_vector(const ChCharacter& ch) {
    ChernVector cv;
    cv.n = ch.n;
    cv.p = power_sums_from_ch(ch);
    cv.c = chern_newton(cv.p, ch.n);
    return cv;
}

} // namespace terracini

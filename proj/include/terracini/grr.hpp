#pragma once

#include <stdexcept>
#include <vector>

#include "terracini/prod_class.hpp"

namespace terracini {

// Chern character of the rank-2n secant bundle E_C on C_n, split into its
// homogeneous graded pieces ch_0 ... ch_n (ch_0 = 2n, the rank).
struct ChCharacter {
    int n;
    std::vector<SymClass> parts; // parts[i] = ch_i, homogeneous of degree i

    const SymClass& part(int i) const { return parts.at(static_cast<size_t>(i)); }

    SymClass total() const {
        SymClass t = SymClass::zero(n);
        for (const auto& p : parts) t += p;
        return t;
    }

    bool well_formed() const {
        if (static_cast<int>(parts.size()) != n + 1) return false;
        for (int i = 0; i <= n; ++i)
            if (!parts[static_cast<size_t>(i)].is_homogeneous(i)) return false;
        return parts[0] == SymClass(Poly(2 * n));
    }
};

// ch of the hyperplane pullback along the curve factor: e^{d eta} = 1 + d eta.
inline ProdClass ch_line_bundle(const Context& ctx) {
    return exp_class(Context::d() * ProdClass::eta(ctx.n));
}

// ch of the structure sheaf of the doubled universal divisor, twisted:
// ch(O_{2D} (x) pi_1^* L) = e^{d eta} - e^{d eta - 2 delta}.
inline ProdClass ch_twisted_ideal(const Context& ctx) {
    ProdClass delta = universal_divisor_class(ctx);
    ProdClass exponent = Context::d() * ProdClass::eta(ctx.n) - Rational(2) * delta;
    return ch_line_bundle(ctx) - exp_class(exponent);
}

// Todd class of the curve factor, pulled back: 1 + (1 - g) eta.
inline ProdClass todd_curve(const Context& ctx) {
    return ProdClass::one(ctx.n) + (Poly(1) - Context::g()) * ProdClass::eta(ctx.n);
}

inline ProdClass todd_times_ch(const Context& ctx) {
    return todd_curve(ctx) * ch_twisted_ideal(ctx);
}

namespace detail {

inline ChCharacter split_graded(const SymClass& total, int n) {
    ChCharacter ch{n, {}};
    ch.parts.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) ch.parts.push_back(total.homogeneous_part(i));
    return ch;
}

} // namespace detail

// Chern character via the Grothendieck-Riemann-Roch pushforward:
// ch(E_C) = (pi_2)_*( td(C) . ch(O_{2D} (x) pi_1^* L) ).
inline ChCharacter ch_EC_grr(const Context& ctx) {
    return detail::split_graded(pushforward(todd_times_ch(ctx)), ctx.n);
}

// Chern character from the closed form
// ch(E_C) = (d - g + 1) - (d - g - 2n + 1 - 4 theta) e^{-2x},
// expanded directly in the x, theta ring.
inline ChCharacter ch_EC_closed(const Context& ctx) {
    int n = ctx.n;
    Poly lead = Context::d() - Context::g() + Poly(1);           // d - g + 1
    Poly tail = lead - Poly(2 * n);                              // d - g - 2n + 1
    SymClass exp_m2x = exp_class(Rational(-2) * SymClass::x(n));
    SymClass total = SymClass(lead) -
                     (SymClass(tail) - Rational(4) * SymClass::theta(n)) * exp_m2x;
    return detail::split_graded(total, n);
}

} // namespace terracini

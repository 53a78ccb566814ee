#pragma once

#include <optional>
#include <stdexcept>

#include "terracini/polynomial.hpp"

namespace terracini {

// Ambient data for one computation: the number n of points (the curve lives
// in P^{3n-2}), with degree and genus kept symbolic unless a caller pins
// numeric values for evaluation.
//
// n = 1 is accepted for diagnostic use; the Terracini count itself is only
// meaningful for n >= 2.
struct Context {
    int n;
    std::optional<Rational> d_value;
    std::optional<Rational> g_value;

    explicit Context(int n_) : n(n_) {
        if (n_ < 1) throw std::invalid_argument("Context: n must be >= 1");
    }

    Context(int n_, Rational d_, Rational g_) : Context(n_) {
        d_value = std::move(d_);
        g_value = std::move(g_);
    }

    static Poly d() { return Poly::var(Sym::d); }
    static Poly g() { return Poly::var(Sym::g); }

    int ambient_dim() const { return 3 * n - 2; }
    int expected_rank() const { return 2 * n; }

    // Numeric d below 3n-2 violates non-degeneracy; flagged, never fatal.
    bool nondegenerate_range() const {
        if (!d_value) return true;
        return *d_value >= Rational(3 * n - 2);
    }
};

} // namespace terracini

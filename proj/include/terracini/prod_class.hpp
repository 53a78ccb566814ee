#pragma once

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "terracini/context.hpp"
#include "terracini/sym_class.hpp"

namespace terracini {

// Element of the truncated model of the Chow ring of C x C_n, in the normal
// form p0 + p1*eta + p2*gamma with SymClass components. The class relations
//
//     eta^2 = 0,   eta*gamma = 0,   gamma^2 = -2*eta*theta,   gamma^3 = 0
//
// close multiplication on this normal form; eta and gamma both carry degree 1.
class ProdClass {
public:
    ProdClass() = default;
    ProdClass(int c) : p0_(c) {}
    ProdClass(const Rational& c) : p0_(c) {}
    ProdClass(const Poly& c) : p0_(c) {}
    explicit ProdClass(SymClass pullback) : p0_(std::move(pullback)) {}
    ProdClass(SymClass p0, SymClass p1, SymClass p2)
        : p0_(std::move(p0)), p1_(std::move(p1)), p2_(std::move(p2)) {
        level(); // validates component compatibility
    }

    static ProdClass zero(int lvl) { return ProdClass(SymClass::zero(lvl)); }
    static ProdClass one(int lvl) { return ProdClass(SymClass::one(lvl)); }
    static ProdClass eta(int lvl) {
        return ProdClass(SymClass::zero(lvl), SymClass::one(lvl), SymClass::zero(lvl));
    }
    static ProdClass gamma(int lvl) {
        return ProdClass(SymClass::zero(lvl), SymClass::zero(lvl), SymClass::one(lvl));
    }
    static ProdClass x(int lvl) { return ProdClass(SymClass::x(lvl)); }
    static ProdClass theta(int lvl) { return ProdClass(SymClass::theta(lvl)); }

    const SymClass& p0() const { return p0_; }
    const SymClass& p1() const { return p1_; }
    const SymClass& p2() const { return p2_; }

    int level() const {
        int lvl = SymClass::kUnbound;
        for (const SymClass* c : {&p0_, &p1_, &p2_}) {
            if (!c->bound()) continue;
            if (lvl == SymClass::kUnbound) {
                lvl = c->level();
            } else if (lvl != c->level()) {
                throw std::invalid_argument("ProdClass: mismatched truncation levels");
            }
        }
        return lvl;
    }

    bool is_zero() const { return p0_.is_zero() && p1_.is_zero() && p2_.is_zero(); }

    Poly degree0_part() const { return p0_.degree0_part(); }

    ProdClass& operator+=(const ProdClass& o) {
        p0_ += o.p0_;
        p1_ += o.p1_;
        p2_ += o.p2_;
        return *this;
    }
    ProdClass& operator-=(const ProdClass& o) {
        p0_ -= o.p0_;
        p1_ -= o.p1_;
        p2_ -= o.p2_;
        return *this;
    }

    friend ProdClass operator+(ProdClass a, const ProdClass& b) { return a += b; }
    friend ProdClass operator-(ProdClass a, const ProdClass& b) { return a -= b; }

    // (P0 + P1 eta + P2 gamma)(Q0 + Q1 eta + Q2 gamma)
    //   = P0Q0 + (P0Q1 + P1Q0 - 2 theta P2Q2) eta + (P0Q2 + P2Q0) gamma
    friend ProdClass operator*(const ProdClass& a, const ProdClass& b) {
        SymClass r0 = a.p0_ * b.p0_;
        SymClass r1 = a.p0_ * b.p1_ + a.p1_ * b.p0_;
        SymClass cross = a.p2_ * b.p2_;
        if (!cross.is_zero()) {
            int lvl = cross.level();
            if (lvl == SymClass::kUnbound)
                throw std::invalid_argument("ProdClass: gamma product needs a truncation level");
            r1 -= Rational(2) * (SymClass::theta(lvl) * cross);
        }
        SymClass r2 = a.p0_ * b.p2_ + a.p2_ * b.p0_;
        return ProdClass(std::move(r0), std::move(r1), std::move(r2));
    }
    ProdClass& operator*=(const ProdClass& o) { return *this = *this * o; }

    friend ProdClass operator*(const Poly& c, const ProdClass& a) {
        return ProdClass(c * a.p0_, c * a.p1_, c * a.p2_);
    }
    friend ProdClass operator*(const ProdClass& a, const Poly& c) { return c * a; }
    friend ProdClass operator*(const Rational& c, const ProdClass& a) { return Poly(c) * a; }
    friend ProdClass operator*(const ProdClass& a, const Rational& c) { return Poly(c) * a; }

    ProdClass operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const ProdClass& a, const ProdClass& b) {
        return a.p0_ == b.p0_ && a.p1_ == b.p1_ && a.p2_ == b.p2_;
    }
    friend bool operator!=(const ProdClass& a, const ProdClass& b) { return !(a == b); }

    ProdClass truncated(int new_level) const {
        return ProdClass(p0_.truncated(new_level), p1_.truncated(new_level),
                         p2_.truncated(new_level));
    }

    std::string str() const {
        std::ostringstream os;
        bool any = false;
        if (!p0_.is_zero()) {
            os << p0_.str();
            any = true;
        }
        if (!p1_.is_zero()) {
            if (any) os << " + ";
            os << "(" << p1_.str() << ")*eta";
            any = true;
        }
        if (!p2_.is_zero()) {
            if (any) os << " + ";
            os << "(" << p2_.str() << ")*gamma";
            any = true;
        }
        return any ? os.str() : "0";
    }

private:
    SymClass p0_, p1_, p2_;
};

inline std::ostream& operator<<(std::ostream& os, const ProdClass& c) { return os << c.str(); }

inline ProdClass exp_class(const ProdClass& a) {
    if (!a.degree0_part().is_zero())
        throw std::invalid_argument("exp_class: nonzero degree-0 part");
    int lvl = a.level();
    ProdClass acc = lvl == SymClass::kUnbound ? ProdClass(1) : ProdClass::one(lvl);
    ProdClass term = acc;
    for (int k = 1; ; ++k) {
        term = term * a * Rational(1, k);
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

// Pushforward along the projection to C_n. The fiber-point class eta
// integrates to 1 along the curve factor, pure pullbacks push to 0, and
// eta*gamma = 0 forces the gamma component to 0: only p1 survives.
inline SymClass pushforward(const ProdClass& a) { return a.p1(); }

// Class of the universal divisor D on C x C_n: delta = n*eta + gamma + x.
inline ProdClass universal_divisor_class(const Context& ctx) {
    int n = ctx.n;
    return Poly(n) * ProdClass::eta(n) + ProdClass::gamma(n) + ProdClass::x(n);
}

} // namespace terracini

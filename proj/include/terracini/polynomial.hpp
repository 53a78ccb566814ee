#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "terracini/rational.hpp"

namespace terracini {

// The fixed symbol universe. d, g are the curve invariants; t1, t2 are the
// parameters used by the brute-force oracle.
enum class Sym : int { d = 0, g = 1, t1 = 2, t2 = 3 };

inline constexpr int sym_count = 4;
inline constexpr std::array<const char*, sym_count> sym_names{"d", "g", "t1", "t2"};

inline const char* name_of(Sym s) { return sym_names[static_cast<int>(s)]; }

using Exponents = std::array<int, sym_count>;

// Graded lexicographic order: total degree first, ties broken by exponent of
// d, then g, then t1, then t2.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = a[0] + a[1] + a[2] + a[3];
        int db = b[0] + b[1] + b[2] + b[3];
        if (da != db) return da < db;
        for (int i = 0; i < sym_count; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// Sparse multivariate polynomial over Rational in the symbols d, g, t1, t2.
// No zero coefficients are ever stored; equality is syntactic.
class Poly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    Poly() = default;
    Poly(int c) { if (c != 0) terms_[{0, 0, 0, 0}] = Rational(c); }
    Poly(const Rational& c) { if (!c.is_zero()) terms_[{0, 0, 0, 0}] = c; }

    static Poly var(Sym s, int exp = 1) {
        if (exp < 0) throw std::invalid_argument("Poly::var: negative exponent");
        Poly p;
        if (exp == 0) return Poly(1);
        Exponents e{0, 0, 0, 0};
        e[static_cast<int>(s)] = exp;
        p.terms_[e] = Rational(1);
        return p;
    }

    static Poly term(const Rational& c, const Exponents& e) {
        Poly p;
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0, 0});
    }

    // Value of a constant polynomial; throws on non-constants.
    Rational constant_value() const {
        if (is_zero()) return Rational(0);
        if (!is_constant()) throw std::domain_error("Poly: not a constant");
        return terms_.begin()->second;
    }

    const TermMap& terms() const { return terms_; }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly r;
        if (c.is_zero()) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
        return r;
    }
    friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }

    Poly operator-() const { return Rational(-1) * *this; }

    Poly pow(unsigned int e) const {
        Poly acc(1), base(*this);
        unsigned int k = e;
        while (k > 0) {
            if (k & 1u) acc *= base;
            base *= base;
            k >>= 1u;
        }
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    int degree_in(Sym s) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(s)]);
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
        return d;
    }

    // Symbols actually present, in canonical order.
    std::vector<Sym> variables() const {
        std::array<bool, sym_count> used{false, false, false, false};
        for (const auto& [e, c] : terms_)
            for (int i = 0; i < sym_count; ++i)
                if (e[i] > 0) used[i] = true;
        std::vector<Sym> vars;
        for (int i = 0; i < sym_count; ++i)
            if (used[i]) vars.push_back(static_cast<Sym>(i));
        return vars;
    }

    // Exact partial evaluation; unassigned symbols stay symbolic.
    Poly substitute(const std::map<Sym, Rational>& assignment) const {
        Poly r;
        for (const auto& [e, c] : terms_) {
            Rational coeff = c;
            Exponents rest = e;
            for (const auto& [s, v] : assignment) {
                int idx = static_cast<int>(s);
                if (rest[idx] > 0) {
                    coeff *= v.pow(static_cast<unsigned int>(rest[idx]));
                    rest[idx] = 0;
                }
            }
            r.add_term(rest, coeff);
        }
        return r;
    }

    // Full evaluation; throws if any symbol of the polynomial is unassigned.
    Rational evaluate(const std::map<Sym, Rational>& assignment) const {
        Poly r = substitute(assignment);
        if (!r.is_constant()) throw std::domain_error("Poly::evaluate: free symbols remain");
        return r.constant_value();
    }

    // Dense coefficient list in s, ascending; entries are free of s.
    std::vector<Poly> coeffs_in(Sym s) const {
        int idx = static_cast<int>(s);
        std::vector<Poly> cs(static_cast<size_t>(degree_in(s)) + 1);
        for (const auto& [e, c] : terms_) {
            Exponents rest = e;
            int k = rest[idx];
            rest[idx] = 0;
            cs[static_cast<size_t>(k)].add_term(rest, c);
        }
        return cs;
    }

    static Poly from_coeffs(const std::vector<Poly>& cs, Sym s) {
        Poly r;
        for (size_t k = 0; k < cs.size(); ++k)
            r += cs[k] * Poly::var(s, static_cast<int>(k));
        return r;
    }

    // Canonical text rendering: graded-lex descending term order, exact
    // rational coefficients, e.g. "2*d^2 + 4*d*g - 14*d + 24".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            const Exponents& e = it->first;
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            std::string mono = monomial_str(e);
            if (mono.empty()) {
                os << a.str();
            } else if (a.is_one()) {
                os << mono;
            } else {
                os << a.str() << "*" << mono;
            }
        }
        return os.str();
    }

private:
    void add_term(const Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static std::string monomial_str(const Exponents& e) {
        std::ostringstream os;
        bool any = false;
        for (int i = 0; i < sym_count; ++i) {
            if (e[i] == 0) continue;
            if (any) os << "*";
            os << sym_names[i];
            if (e[i] > 1) os << "^" << e[i];
            any = true;
        }
        return any ? os.str() : "";
    }

    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

// Falling factorial g(g-1)...(g-i+1) as a polynomial in g; the Poincare
// evaluation of x^{n-i} theta^i on the n-fold symmetric product.
inline Poly falling_factorial(int i) {
    if (i < 0) throw std::invalid_argument("falling_factorial: negative index");
    Poly r(1);
    for (int k = 0; k < i; ++k) r *= Poly::var(Sym::g) - Poly(k);
    return r;
}

} // namespace terracini

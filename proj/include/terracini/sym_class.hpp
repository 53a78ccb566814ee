#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "terracini/polynomial.hpp"

namespace terracini {

// Element of the truncated graded model of the Chow ring of the n-fold
// symmetric product C_n: a polynomial in the divisor classes x and theta with
// Poly coefficients, truncated above total degree n (the dimension of C_n).
//
// A class is either bound to a truncation level n >= 0 or is an unbound
// scalar (degree-0 only); unbound scalars combine with any level, which is
// what lets generic matrix code use SymClass(0) and SymClass(1) literals.
class SymClass {
public:
    static constexpr int kUnbound = -1;

    using Key = std::pair<int, int>; // (a, b) for x^a * theta^b
    using TermMap = std::map<Key, Poly>;

    SymClass() = default;
    SymClass(int c) { set_scalar(Poly(c)); }
    SymClass(const Rational& c) { set_scalar(Poly(c)); }
    SymClass(const Poly& c) { set_scalar(c); }

    static SymClass zero(int level) {
        SymClass r;
        r.level_ = check_level(level);
        return r;
    }

    static SymClass one(int level) { return monomial(level, Poly(1), 0, 0); }

    static SymClass x(int level, int power = 1) {
        return monomial(level, Poly(1), power, 0);
    }

    static SymClass theta(int level, int power = 1) {
        return monomial(level, Poly(1), 0, power);
    }

    static SymClass monomial(int level, const Poly& coeff, int a, int b) {
        if (a < 0 || b < 0) throw std::invalid_argument("SymClass: negative exponent");
        SymClass r;
        r.level_ = check_level(level);
        if (!coeff.is_zero() && a + b <= level) r.terms_[{a, b}] = coeff;
        return r;
    }

    int level() const { return level_; }
    bool bound() const { return level_ != kUnbound; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Poly coeff(int a, int b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Poly() : it->second;
    }

    SymClass& operator+=(const SymClass& o) {
        level_ = merge_levels(level_, o.level_, is_zero(), o.is_zero());
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        prune();
        return *this;
    }
    SymClass& operator-=(const SymClass& o) {
        level_ = merge_levels(level_, o.level_, is_zero(), o.is_zero());
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        prune();
        return *this;
    }

    friend SymClass operator+(SymClass a, const SymClass& b) { return a += b; }
    friend SymClass operator-(SymClass a, const SymClass& b) { return a -= b; }

    friend SymClass operator*(const SymClass& a, const SymClass& b) {
        SymClass r;
        r.level_ = merge_levels(a.level_, b.level_, a.is_zero(), b.is_zero());
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        r.prune();
        return r;
    }
    SymClass& operator*=(const SymClass& o) { return *this = *this * o; }

    friend SymClass operator*(const Poly& c, const SymClass& a) {
        SymClass r;
        r.level_ = a.level_;
        if (!c.is_zero())
            for (const auto& [k, ac] : a.terms_) r.add_term(k, c * ac);
        return r;
    }
    friend SymClass operator*(const SymClass& a, const Poly& c) { return c * a; }
    friend SymClass operator*(const Rational& c, const SymClass& a) { return Poly(c) * a; }
    friend SymClass operator*(const SymClass& a, const Rational& c) { return Poly(c) * a; }

    SymClass operator-() const { return Rational(-1) * *this; }

    // Levels must be compatible (equal, or either side unbound) for equality;
    // otherwise the classes live in different rings and compare unequal.
    friend bool operator==(const SymClass& a, const SymClass& b) {
        if (a.bound() && b.bound() && a.level_ != b.level_) return false;
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymClass& a, const SymClass& b) { return !(a == b); }

    SymClass truncated(int new_level) const {
        SymClass r;
        r.level_ = check_level(new_level);
        for (const auto& [k, c] : terms_)
            if (k.first + k.second <= new_level) r.terms_[k] = c;
        return r;
    }

    SymClass homogeneous_part(int k) const {
        SymClass r;
        r.level_ = level_;
        for (const auto& [key, c] : terms_)
            if (key.first + key.second == k) r.terms_[key] = c;
        return r;
    }

    bool is_homogeneous(int k) const {
        for (const auto& [key, c] : terms_)
            if (key.first + key.second != k) return false;
        return true;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
        return d;
    }

    // Coefficient of x^0 theta^0: the degree-0 part, as a Poly.
    Poly degree0_part() const { return coeff(0, 0); }

    // The genus-0 specialization at class level: drop every theta term.
    SymClass killed_theta() const {
        SymClass r;
        r.level_ = level_;
        for (const auto& [k, c] : terms_)
            if (k.second == 0) r.terms_[k] = c;
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [a, b] = it->first;
            std::string mono;
            if (a > 0) mono += std::string("x") + (a > 1 ? "^" + std::to_string(a) : "");
            if (b > 0) {
                if (!mono.empty()) mono += "*";
                mono += std::string("theta") + (b > 1 ? "^" + std::to_string(b) : "");
            }
            const Poly& c = it->second;
            bool negative = c.terms().size() == 1 && c.terms().begin()->second.sign() < 0;
            Poly body = negative ? -c : c;
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            if (mono.empty()) {
                if (body.terms().size() > 1) os << "(" << body.str() << ")";
                else os << body.str();
            } else if (body == Poly(1)) {
                os << mono;
            } else if (body.terms().size() == 1) {
                os << body.str() << "*" << mono;
            } else {
                os << "(" << body.str() << ")*" << mono;
            }
        }
        return os.str();
    }

private:
    static int check_level(int level) {
        if (level < 0) throw std::invalid_argument("SymClass: negative truncation level");
        return level;
    }

    static int merge_levels(int a, int b, bool a_zero, bool b_zero) {
        if (a == kUnbound) return b;
        if (b == kUnbound) return a;
        if (a != b && !(a_zero && b_zero))
            throw std::invalid_argument("SymClass: mismatched truncation levels");
        return a != b ? std::max(a, b) : a;
    }

    void set_scalar(const Poly& c) {
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }

    void add_term(const Key& k, const Poly& c) {
        if (c.is_zero()) return;
        if (level_ != kUnbound && k.first + k.second > level_) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Re-truncate after level merges (an unbound operand may have carried
    // only degree-0 terms, but a freshly merged level still bounds them).
    void prune() {
        if (level_ == kUnbound) return;
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first.first + it->first.second > level_)
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    int level_ = kUnbound;
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const SymClass& c) { return os << c.str(); }

// exp(a) = sum a^k / k!, a finite sum because the grading truncates.
// The degree-0 part of a must vanish.
inline SymClass exp_class(const SymClass& a) {
    if (!a.degree0_part().is_zero())
        throw std::invalid_argument("exp_class: nonzero degree-0 part");
    SymClass acc = a.bound() ? SymClass::one(a.level()) : SymClass(1);
    SymClass term = acc;
    for (int k = 1; ; ++k) {
        term = term * a * Rational(1, k);
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

// Intersection number of the degree-n part against the fundamental class:
// x^{n-i} theta^i evaluates to the falling factorial g(g-1)...(g-i+1).
// Parts of degree below the truncation level integrate to zero.
inline Poly eval_top(const SymClass& a) {
    if (!a.bound()) {
        if (a.is_zero()) return Poly();
        throw std::invalid_argument("eval_top: class has no truncation level");
    }
    int n = a.level();
    Poly r;
    for (const auto& [k, c] : a.terms())
        if (k.first + k.second == n) r += c * falling_factorial(k.second);
    return r;
}

} // namespace terracini

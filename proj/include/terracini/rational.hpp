#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace terracini {

// Exact arbitrary-precision rational scalar. Canonical form is maintained at
// all times: lowest terms, positive denominator, zero stored as 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(static_cast<long>(v)) {}
    Rational(long num, long den) : q_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    static Rational from_string(const std::string& s) {
        mpq_t tmp;
        mpq_init(tmp);
        if (mpq_set_str(tmp, s.c_str(), 10) != 0) {
            mpq_clear(tmp);
            throw std::invalid_argument("Rational: malformed number '" + s + "'");
        }
        if (mpz_sgn(mpq_denref(tmp)) == 0) {
            mpq_clear(tmp);
            throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        }
        mpq_class q(tmp);
        mpq_clear(tmp);
        q.canonicalize();
        return Rational(q);
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r(*this); r.q_ = -r.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { Rational r(*this); r.q_ = ::abs(r.q_); return r; }

    Rational pow(unsigned int e) const {
        Rational acc(1), base(*this);
        unsigned int k = e;
        while (k > 0) {
            if (k & 1u) acc *= base;
            base *= base;
            k >>= 1u;
        }
        return acc;
    }

    // "p/q" with q omitted when 1; exact, deterministic.
    std::string str() const { return q_.get_str(); }

    double to_double() const { return q_.get_d(); }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace terracini

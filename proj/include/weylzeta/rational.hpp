#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "weylzeta/errors.hpp"

namespace weylzeta {

// Arbitrary-precision rational, always stored reduced with positive denominator.
// Thin value wrapper around GMP's mpq_class; serializes as "num/den" ("num" when
// the denominator is 1, sign on the numerator only).
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}          // NOLINT(google-explicit-constructor)
    Rational(int n) : q_(n) {}           // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : q_(n, d) { normalize(); }
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) { normalize(); }
    explicit Rational(const mpq_class& q) : q_(q) { normalize(); }

    // Parses "a/b" or "a". Throws input_error on malformed text or b = 0.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    mpz_class floor() const;
    // Fractional part q - floor(q), always in [0,1).
    Rational frac() const;
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational pow(unsigned long e) const;

    double to_double() const { return q_.get_d(); }
    std::string to_string() const;

  private:
    void normalize() { q_.canonicalize(); }
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational frac(const Rational& q) { return q.frac(); }

// C(n,k) for n,k >= 0; 0 when k > n or k < 0.
mpz_class binomial(long n, long k);
mpz_class factorial(unsigned long n);
inline Rational binomial_q(long n, long k) { return Rational(binomial(n, k)); }
inline Rational factorial_q(unsigned long n) { return Rational(factorial(n)); }

// 2^e as an exact rational, e may be negative.
Rational pow2(long e);

} // namespace weylzeta

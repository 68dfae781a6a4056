#include "weylzeta/rational.hpp"

#include <ostream>

namespace weylzeta {

Rational Rational::parse(const std::string& text) {
    if (text.empty())
        throw input_error("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            return Rational(n);
        }
        mpz_class n(text.substr(0, slash));
        mpz_class d(text.substr(slash + 1));
        if (d == 0)
            throw input_error("zero denominator in '" + text + "'");
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw input_error("malformed rational '" + text + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw input_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

mpz_class Rational::floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return f;
}

Rational Rational::frac() const {
    mpq_class r = q_ - mpq_class(floor());
    return Rational(r);
}

Rational Rational::pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
    return Rational(n, d);
}

std::string Rational::to_string() const {
    if (is_integer())
        return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Rational pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

} // namespace weylzeta

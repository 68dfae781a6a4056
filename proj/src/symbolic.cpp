#include "weylzeta/symbolic.hpp"

#include <algorithm>
#include <sstream>

#include "weylzeta/bernoulli.hpp"
#include "weylzeta/errors.hpp"

namespace weylzeta {

namespace {

// zeta(2m) = (-1)^{m+1} B_{2m} 2^{2m-1} / (2m)! * pi^{2m}
Rational euler_coefficient(int m) {
    Rational c = bernoulli_number(2 * m) * pow2(2 * m) / (Rational(2) * factorial_q(2 * m));
    return (m % 2 == 0) ? -c : c;
}

} // namespace

void SymbolicValue::add_term(SymMonomial m, Rational coeff) {
    if (coeff.is_zero())
        return;
    m.i_pow = ((m.i_pow % 4) + 4) % 4;
    if (m.i_pow >= 2) {
        m.i_pow -= 2;
        coeff = -coeff;
    }
    if (m.sqrt3_pow < 0)
        throw input_error("negative sqrt3 power");
    if (m.sqrt3_pow >= 2) {
        coeff *= Rational(3).pow(m.sqrt3_pow / 2);
        m.sqrt3_pow %= 2;
    }
    std::vector<int> odd;
    for (int z : m.zeta_args) {
        if (z < 2)
            throw divergent_error("zeta argument below 2");
        if (z % 2 == 0) {
            coeff *= euler_coefficient(z / 2);
            m.pi_pow += z;
        } else {
            odd.push_back(z);
        }
    }
    std::sort(odd.begin(), odd.end());
    m.zeta_args = std::move(odd);
    for (int l : m.l3_args)
        if (l < 2)
            throw divergent_error("L(s, chi_3) argument below 2");
    std::sort(m.l3_args.begin(), m.l3_args.end());

    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SymbolicValue SymbolicValue::zeta(int n) {
    SymbolicValue v;
    SymMonomial m;
    m.zeta_args = {n};
    v.add_term(std::move(m), Rational(1));
    return v;
}

SymbolicValue SymbolicValue::l_chi3(int n) {
    SymbolicValue v;
    SymMonomial m;
    m.l3_args = {n};
    v.add_term(std::move(m), Rational(1));
    return v;
}

SymbolicValue SymbolicValue::pi_power(int k) {
    SymbolicValue v;
    SymMonomial m;
    m.pi_pow = k;
    v.add_term(std::move(m), Rational(1));
    return v;
}

SymbolicValue SymbolicValue::i_unit() {
    SymbolicValue v;
    SymMonomial m;
    m.i_pow = 1;
    v.add_term(std::move(m), Rational(1));
    return v;
}

SymbolicValue SymbolicValue::sqrt3() {
    SymbolicValue v;
    SymMonomial m;
    m.sqrt3_pow = 1;
    v.add_term(std::move(m), Rational(1));
    return v;
}

SymbolicValue SymbolicValue::two_pi_i_power(int tau) {
    SymbolicValue v;
    SymMonomial m;
    m.pi_pow = tau;
    m.i_pow = tau;
    v.add_term(std::move(m), pow2(tau));
    return v;
}

bool SymbolicValue::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.i_pow == 0; });
}

SymbolicValue SymbolicValue::operator-() const {
    SymbolicValue r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SymbolicValue& SymbolicValue::operator+=(const SymbolicValue& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SymbolicValue& SymbolicValue::operator-=(const SymbolicValue& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SymbolicValue operator*(const SymbolicValue& a, const SymbolicValue& b) {
    SymbolicValue r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            SymMonomial m;
            m.pi_pow = ma.pi_pow + mb.pi_pow;
            m.i_pow = ma.i_pow + mb.i_pow;
            m.sqrt3_pow = ma.sqrt3_pow + mb.sqrt3_pow;
            m.zeta_args = ma.zeta_args;
            m.zeta_args.insert(m.zeta_args.end(), mb.zeta_args.begin(), mb.zeta_args.end());
            m.l3_args = ma.l3_args;
            m.l3_args.insert(m.l3_args.end(), mb.l3_args.begin(), mb.l3_args.end());
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

SymbolicValue SymbolicValue::scaled(const Rational& c) const {
    SymbolicValue r;
    if (c.is_zero())
        return r;
    for (const auto& [m, t] : terms_) r.terms_.emplace(m, t * c);
    return r;
}

std::string SymbolicValue::to_latex() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string coeff;
        const Rational a = c.abs();
        if (a.is_integer()) {
            coeff = a.num().get_str();
        } else {
            coeff = "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
        }
        const bool bare = m.pi_pow == 0 && m.i_pow == 0 && m.sqrt3_pow == 0 &&
                          m.zeta_args.empty() && m.l3_args.empty();
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        first = false;
        if (bare || a != Rational(1))
            os << coeff;
        if (m.pi_pow == 1)
            os << "\\pi ";
        else if (m.pi_pow > 1)
            os << "\\pi^{" << m.pi_pow << "}";
        if (m.i_pow == 1)
            os << "i ";
        if (m.sqrt3_pow == 1)
            os << "\\sqrt{3} ";
        for (int z : m.zeta_args) os << "\\zeta(" << z << ")";
        for (int l : m.l3_args) os << "L(" << l << ",\\chi_3)";
    }
    return os.str();
}

std::string SymbolicValue::serialize() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << ",";
        first = false;
        os << "{\"coeff\":\"" << c << "\",\"pi\":" << m.pi_pow << ",\"i\":" << m.i_pow
           << ",\"sqrt3\":" << m.sqrt3_pow << ",\"zeta\":[";
        for (size_t j = 0; j < m.zeta_args.size(); ++j)
            os << (j ? "," : "") << m.zeta_args[j];
        os << "],\"L3\":[";
        for (size_t j = 0; j < m.l3_args.size(); ++j) os << (j ? "," : "") << m.l3_args[j];
        os << "]}";
    }
    os << "]";
    return os.str();
}

SymbolicValue zeta_even_reduce(int m) {
    if (m < 1)
        throw input_error("zeta_even_reduce needs m >= 1");
    return SymbolicValue::pi_power(2 * m).scaled(euler_coefficient(m));
}

SymbolicValue phi_to_basis(int n, const Rational& alpha) {
    if (n < 2)
        throw divergent_error("phi(s, alpha) with s < 2 is outside the exact basis");
    const Rational a = alpha.frac();
    if (a.is_zero())
        return SymbolicValue::zeta(n);
    if (a == Rational(1, 2))
        return SymbolicValue::zeta(n).scaled(pow2(1 - n) - Rational(1));
    const Rational third(1, 3);
    if (a == third || a == Rational(2, 3)) {
        SymbolicValue even_part =
            SymbolicValue::zeta(n).scaled((Rational(1, 3).pow(n - 1) - Rational(1)) / Rational(2));
        SymbolicValue odd_part =
            (SymbolicValue::sqrt3() * SymbolicValue::i_unit() * SymbolicValue::l_chi3(n))
                .scaled(Rational(1, 2));
        return (a == third) ? even_part + odd_part : even_part - odd_part;
    }
    throw unsupported_residue_error("phi argument must have denominator 1, 2 or 3");
}

} // namespace weylzeta

#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "weylzeta/rational.hpp"

namespace weylzeta {

// Monomial pi^a i^b sqrt(3)^c prod zeta(n_j) prod L(m_j, chi_3). Canonical form
// keeps b, c in {0,1} (i^2 and 3 absorbed into the coefficient), zeta arguments
// odd and >= 3 (even zetas reduced to pi powers), L arguments >= 2.
struct SymMonomial {
    int pi_pow = 0;
    int i_pow = 0;
    int sqrt3_pow = 0;
    std::vector<int> zeta_args;
    std::vector<int> l3_args;

    auto operator<=>(const SymMonomial&) const = default;
};

// Exact Q-linear combination of canonical monomials.
class SymbolicValue {
  public:
    SymbolicValue() = default;
    explicit SymbolicValue(const Rational& c) { add_term({}, c); }
    explicit SymbolicValue(long c) { add_term({}, Rational(c)); }

    static SymbolicValue zeta(int n);    // even n collapses to a pi power
    static SymbolicValue l_chi3(int n);
    static SymbolicValue pi_power(int k);
    static SymbolicValue i_unit();
    static SymbolicValue sqrt3();
    static SymbolicValue two_pi_i_power(int tau); // (2 pi i)^tau

    // Adds coeff * monomial after canonicalization.
    void add_term(SymMonomial m, Rational coeff);

    bool is_zero() const { return terms_.empty(); }
    // Canonical basis terms are R-linearly independent, so real means no i term.
    bool is_real() const;
    const std::map<SymMonomial, Rational>& terms() const { return terms_; }

    SymbolicValue operator-() const;
    SymbolicValue& operator+=(const SymbolicValue& o);
    SymbolicValue& operator-=(const SymbolicValue& o);
    friend SymbolicValue operator+(SymbolicValue a, const SymbolicValue& b) { return a += b; }
    friend SymbolicValue operator-(SymbolicValue a, const SymbolicValue& b) { return a -= b; }
    friend SymbolicValue operator*(const SymbolicValue& a, const SymbolicValue& b);
    SymbolicValue scaled(const Rational& c) const;

    friend bool operator==(const SymbolicValue& a, const SymbolicValue& b) {
        return a.terms_ == b.terms_;
    }

    std::string to_latex() const;
    std::string serialize() const; // JSON array, sorted terms

  private:
    std::map<SymMonomial, Rational> terms_;
};

// zeta(2m) as an exact rational times pi^{2m} (Euler).
SymbolicValue zeta_even_reduce(int m);

// Lerch phi(n, alpha) for alpha with denominator 1, 2 or 3, in the
// {zeta(odd), L(n,chi_3)} basis:
//   phi(n, 0)   = zeta(n)
//   phi(n, 1/2) = (2^{1-n} - 1) zeta(n)
//   phi(n, 1/3) = ((3^{1-n} - 1) zeta(n) + sqrt(3) i L(n, chi_3)) / 2
//   phi(n, 2/3) = ((3^{1-n} - 1) zeta(n) - sqrt(3) i L(n, chi_3)) / 2
SymbolicValue phi_to_basis(int n, const Rational& alpha);

} // namespace weylzeta

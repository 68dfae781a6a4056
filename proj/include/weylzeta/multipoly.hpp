#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weylzeta/rational.hpp"

namespace weylzeta {

// Multivariate polynomial with exact rational coefficients over a fixed number
// of variables (at most 4: up to 3 integration variables plus one spare).
// Exponent vectors are dense tuples; zero coefficients are never stored.
class MultiPoly {
  public:
    static constexpr int kMaxVars = 4;
    using Expo = std::array<uint16_t, kMaxVars>;

    explicit MultiPoly(int nvars = 1);
    MultiPoly(int nvars, const Rational& constant);

    static MultiPoly variable(int nvars, int index);
    static MultiPoly constant(int nvars, const Rational& c) { return MultiPoly(nvars, c); }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    const std::map<Expo, Rational>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const Rational& c) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // Exact evaluation; point.size() must equal nvars().
    Rational eval(const std::vector<Rational>& point) const;

    // Substitutes variable j by forms[j], an affine or polynomial expression in
    // the forms' own variable space. All forms must share a variable count.
    MultiPoly compose(const std::vector<MultiPoly>& forms) const;

    // Univariate helpers (nvars() == 1).
    Rational coeff(int k) const;
    MultiPoly antiderivative() const;   // F with F' = this and F(0) = 0
    Rational integral01() const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

  private:
    int nvars_;
    std::map<Expo, Rational> terms_;
};

// Integral of the monomial u^e over the standard d-simplex {u_j >= 0, sum u_j <= 1}:
// e_1! ... e_d! / (e_1 + ... + e_d + d)!.
Rational simplex_monomial_integral(const MultiPoly::Expo& e, int dim);

// Integral of p over the standard simplex of dimension p.nvars().
Rational integrate_standard_simplex(const MultiPoly& p);

} // namespace weylzeta

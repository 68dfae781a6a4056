#pragma once

#include <utility>

#include "weylzeta/multipoly.hpp"
#include "weylzeta/rational.hpp"

namespace weylzeta {

// Classical Bernoulli polynomial B_k(x) with exact rational coefficients,
// from the zero-mean recurrence B_0 = 1, B_k' = k B_{k-1}, int_0^1 B_k = 0.
// Results are cached process-wide; returned by value (univariate MultiPoly).
MultiPoly bernoulli_polynomial(int k);

// B_k = B_k(0).
Rational bernoulli_number(int k);

// Exact evaluation B_k(x) at a rational point.
Rational bernoulli_at(int k, const Rational& x);

// sum_{a=0}^{2} rho^{l a} B_tau(a/3) with rho = e^{2 pi i / 3}, returned as
// (r, s) meaning r + s*sqrt(3)*i.
std::pair<Rational, Rational> twisted_bernoulli_sum(long l, int tau);

} // namespace weylzeta

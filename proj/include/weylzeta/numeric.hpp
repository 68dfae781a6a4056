#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "weylzeta/lattice.hpp"
#include "weylzeta/root_system.hpp"
#include "weylzeta/symbolic.hpp"

namespace weylzeta {

using Float128 = __float128;

template <typename Real>
Real pi_value();

struct NumericResult {
    std::complex<double> value{0.0, 0.0};
    double tail_bound = 0.0;
    long terms_used = 0;
};

struct SumOptions {
    long long term_cap = 30'000'000'000LL;
    int threads = 0;       // 0 keeps the current OpenMP setting
    bool use_parallel = true;
};

// zeta_r(s, y; L; Delta): sum of e^{2 pi i <y,lambda>} prod <alpha^vee,lambda>^{-s_alpha}
// over the congruence-filtered strongly dominant cone, shell-ordered with a
// closed-form integral-comparison tail bound. Rejects exponent vectors whose
// convergence cannot be certified by the conservative subset test.
NumericResult zeta_numeric(const RootSystemData& rs, const SubLattice& lattice,
                           const std::vector<double>& s, const CoweightVector& y, double tol,
                           const SumOptions& opts = {});

// Same sum with general complex exponents (slow path).
NumericResult zeta_numeric_complex(const RootSystemData& rs, const SubLattice& lattice,
                                   const std::vector<std::complex<double>>& s,
                                   const CoweightVector& y, double tol,
                                   const SumOptions& opts = {});

// S(k, y, iota_{L+rho}; Delta) as the signed sum of Weyl-transformed zeta sums.
NumericResult s_sum_numeric(const RootSystemData& rs, const MultiIndex& k,
                            const CoweightVector& y, const SubLattice& lattice, double tol,
                            const SumOptions& opts = {});

// Straight single-accumulator reference kernel (kept for testing the
// OpenMP-blocked kernel against; same shells, same term order).
NumericResult zeta_numeric_reference(const RootSystemData& rs, const SubLattice& lattice,
                                     const std::vector<double>& s, const CoweightVector& y,
                                     double tol, const SumOptions& opts = {});

// Euler-Maclaurin Hurwitz zeta for s > 1, a in (0, 1].
template <typename Real>
Real hurwitz_zeta(Real s, Real a, int terms = 48, int correction_order = 10);

double zeta_const(int n);
double l_chi3(int n);
std::complex<double> phi_numeric(int n, const Rational& alpha);

Float128 zeta_const_q(int n);
Float128 l_chi3_q(int n);

// Deterministic numeric substitution of a symbolic value (sorted monomials,
// compensated summation).
std::complex<double> eval_symbolic(const SymbolicValue& v);
// Real part in ~33-digit precision; the extended mode behind --precision quad.
Float128 eval_symbolic_real_q(const SymbolicValue& v);

// Continued-fraction reconstruction of v / pi^kappa as a rational with
// denominator <= max_den; empty when no convergent lands within 10x the
// reported error bound.
std::optional<Rational> rationalize(double v, int kappa, long long max_den,
                                    double err_bound = 1e-13);
std::optional<Rational> rationalize_q(Float128 v, int kappa, long long max_den,
                                      Float128 err_bound);

// K(g)^s * zeta_r(s, ..., s; L; Delta) (equals the dimension-series zeta).
NumericResult witten_zeta_numeric(const GroupData& g, double s, double tol,
                                  const SumOptions& opts = {});

// Exact binary rational of a quad float (helper for rationalize_q; exposed
// for tests).
Rational exact_rational_from_q(Float128 x);

} // namespace weylzeta

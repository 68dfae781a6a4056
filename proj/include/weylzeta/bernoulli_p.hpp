#pragma once

#include <vector>

#include "weylzeta/lattice.hpp"
#include "weylzeta/polytope.hpp"
#include "weylzeta/root_system.hpp"

namespace weylzeta {

// The exact value q * pi^kappa.
struct VolumeValue {
    Rational q;
    int kappa = 0;
};

// Generalized periodic Bernoulli function: the iterated integral over the
// unit cube in the non-simple-root variables, with B_{k_i} evaluated on the
// fractional parts of y_i - sum x_alpha <alpha^vee, lambda_i>. Exact.
// Supported for n - rank <= 3 (A2, B2, C2, A3); B3/C3 need the numeric route.
Rational p_function(const RootSystemData& rs, const MultiIndex& k, const CoweightVector& y);

// Lattice average: sum over dual representatives mu of
// fourier_coefficient(L, mu) * p_function(k, y + mu).
Rational p_function_lattice(const RootSystemData& rs, const SubLattice& lattice,
                            const MultiIndex& k, const CoweightVector& y);

// zeta_r(2k, nu; L; Delta) = q * pi^kappa with
// q = ((-1)^n / |W|) * prod_alpha (-1)^{k_alpha} 2^{2 k_alpha} / (2 k_alpha)! * P(2k, nu; L)
// and kappa = sum 2 k_alpha. `half_k` holds the k_alpha (the zeta arguments are 2k).
VolumeValue volume_value(const RootSystemData& rs, const SubLattice& lattice,
                         const MultiIndex& half_k, const CoweightVector& nu);

// Validates a full exponent vector (all even, >= 2, constant on length
// classes) and dispatches to volume_value.
VolumeValue volume_from_exponents(const RootSystemData& rs, const SubLattice& lattice,
                                  const std::vector<int>& exponents, const CoweightVector& nu);

struct PNumericResult {
    double value = 0;
    double bound = 0;
    long terms = 0;
};

// P(k, y; Delta) evaluated numerically through the truncated S-sum divided by
// the (-1)^n prod (2 pi i)^{k_alpha}/k_alpha! prefactor. Requires k >= 2
// componentwise; works for every supported type including B3/C3.
PNumericResult p_function_numeric(const RootSystemData& rs, const MultiIndex& k,
                                  const CoweightVector& y, double precision_target);

// Build the forms y_i - sum_alpha x_alpha <alpha^vee, lambda_i> used by the
// exact integral (exposed for tests).
std::vector<LinearForm> p_integral_forms(const RootSystemData& rs, const CoweightVector& y);

} // namespace weylzeta

#include "weylzeta/bernoulli_p.hpp"

#include <algorithm>

#include "weylzeta/bernoulli.hpp"
#include "weylzeta/errors.hpp"
#include "weylzeta/numeric.hpp"

namespace weylzeta {

std::vector<LinearForm> p_integral_forms(const RootSystemData& rs, const CoweightVector& y) {
    const int d = rs.n - rs.rank;
    std::vector<LinearForm> forms;
    for (int i = 0; i < rs.rank; ++i) {
        LinearForm f;
        f.offset = y.coords[i];
        for (int a = rs.rank; a < rs.n; ++a) f.coeffs.push_back(-rs.positive_coroots[a][i]);
        forms.push_back(std::move(f));
    }
    (void)d;
    return forms;
}

Rational p_function(const RootSystemData& rs, const MultiIndex& k, const CoweightVector& y) {
    if (static_cast<int>(k.size()) != rs.n)
        throw input_error("exponent vector length must be " + std::to_string(rs.n));
    for (int ka : k)
        if (ka < 0)
            throw input_error("exponents must be nonnegative");
    const int d = rs.n - rs.rank;
    if (d > 3)
        throw dimension_error(rs.name + " needs a 6-fold integral; use p_function_numeric");

    const CoweightVector yr = y.reduced_mod_coroot();
    const auto forms = p_integral_forms(rs, yr);
    const CellComplex cx = cut_unit_cube(d, forms);

    return integrate_factored_over_complex(cx, [&](const Cell& cell) {
        std::vector<ComposedFactor> factors;
        for (int a = rs.rank; a < rs.n; ++a) {
            ComposedFactor f;
            f.poly = bernoulli_polynomial(k[a]);
            f.coeffs.assign(d, Rational(0));
            f.coeffs[a - rs.rank] = Rational(1);
            f.offset = Rational(0);
            factors.push_back(std::move(f));
        }
        for (int i = 0; i < rs.rank; ++i) {
            ComposedFactor f;
            f.poly = bernoulli_polynomial(k[i]);
            f.coeffs.assign(d, Rational(0));
            for (int j = 0; j < d; ++j) f.coeffs[j] = Rational(forms[i].coeffs[j]);
            f.offset = forms[i].offset - Rational(cell.shifts[i]);
            factors.push_back(std::move(f));
        }
        return factors;
    });
}

Rational p_function_lattice(const RootSystemData& rs, const SubLattice& lattice,
                            const MultiIndex& k, const CoweightVector& y) {
    Rational total(0);
    for (const auto& mu : lattice.dual_reps) {
        const Rational c = fourier_coefficient(rs, lattice, mu);
        if (c.is_zero())
            continue;
        total += c * p_function(rs, k, y + mu);
    }
    return total;
}

VolumeValue volume_value(const RootSystemData& rs, const SubLattice& lattice,
                         const MultiIndex& half_k, const CoweightVector& nu) {
    if (static_cast<int>(half_k.size()) != rs.n)
        throw input_error("exponent vector length must be " + std::to_string(rs.n));
    for (int ka : half_k)
        if (ka < 1)
            throw input_error("volume values need every k_alpha >= 1");
    for (int a = 0; a < rs.n; ++a)
        for (int b = 0; b < rs.n; ++b)
            if (rs.length_class[a] == rs.length_class[b] && half_k[a] != half_k[b])
                throw length_class_error("k must be constant on each root length class");
    const auto reps = minuscule_representatives(rs);
    const CoweightVector nur = nu.reduced_mod_coroot();
    if (std::none_of(reps.begin(), reps.end(), [&](const CoweightVector& v) {
            return v.reduced_mod_coroot() == nur;
        }))
        throw input_error("twist must be a minuscule representative of P^vee/Q^vee");

    MultiIndex doubled(rs.n);
    VolumeValue out;
    Rational factor = Rational(rs.n % 2 == 0 ? 1 : -1, rs.weyl_order());
    for (int a = 0; a < rs.n; ++a) {
        doubled[a] = 2 * half_k[a];
        out.kappa += 2 * half_k[a];
        Rational piece = pow2(2 * half_k[a]) / factorial_q(2 * half_k[a]);
        factor *= (half_k[a] % 2 == 0) ? piece : -piece;
    }
    out.q = factor * p_function_lattice(rs, lattice, doubled, nu);
    return out;
}

VolumeValue volume_from_exponents(const RootSystemData& rs, const SubLattice& lattice,
                                  const std::vector<int>& exponents, const CoweightVector& nu) {
    MultiIndex half;
    for (int s : exponents) {
        if (s < 2 || s % 2 != 0)
            throw odd_component_error("volume formula needs even exponents >= 2");
        half.push_back(s / 2);
    }
    return volume_value(rs, lattice, half, nu);
}

PNumericResult p_function_numeric(const RootSystemData& rs, const MultiIndex& k,
                                  const CoweightVector& y, double precision_target) {
    if (static_cast<int>(k.size()) != rs.n)
        throw input_error("exponent vector length must be " + std::to_string(rs.n));
    for (int ka : k)
        if (ka < 2)
            throw input_error("p_function_numeric needs every k_alpha >= 2");

    // prefactor (-1)^n prod (2 pi i)^{k_alpha} / k_alpha!
    int ipow = 0;
    double mag = (rs.n % 2 == 0) ? 1.0 : -1.0;
    for (int a = 0; a < rs.n; ++a) {
        ipow = (ipow + k[a]) % 4;
        mag *= std::pow(2.0 * pi_value<double>(), k[a]) / factorial(k[a]).get_d();
    }
    std::complex<double> prefactor(mag, 0);
    const std::complex<double> iunits[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    prefactor *= iunits[ipow];

    // S-sum needs |prefactor| * target absolute accuracy
    const double s_tol = precision_target * std::abs(prefactor);
    std::vector<double> s(k.begin(), k.end());
    const auto lattices = intermediate_lattices(rs);
    const SubLattice* full = nullptr;
    for (const auto& lat : lattices)
        if (lat.name == "P")
            full = &lat;
    NumericResult sres = s_sum_numeric(rs, k, y, *full, s_tol);

    PNumericResult out;
    const std::complex<double> p = sres.value / prefactor;
    out.value = p.real();
    out.bound = sres.tail_bound / std::abs(prefactor) + std::abs(p.imag());
    out.terms = sres.terms_used;
    return out;
}

} // namespace weylzeta

#include "weylzeta/numeric.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "weylzeta/bernoulli.hpp"
#include "weylzeta/errors.hpp"
#include "weylzeta/kahan.hpp"

namespace weylzeta {

template <>
double pi_value<double>() {
    return 3.14159265358979323846264338327950288;
}
template <>
Float128 pi_value<Float128>() {
    return M_PIq;
}

namespace {

double q_to_double(Float128 x) { return static_cast<double>(x); }

Float128 q_from_mpz(const mpz_class& z) {
    // via base-2^32 chunks, exact for any size
    mpz_class v = abs(z);
    Float128 out = 0.0Q, shift = 1.0Q;
    while (v != 0) {
        const unsigned long lo = mpz_class(v % 4294967296L).get_ui();
        out += shift * static_cast<Float128>(lo);
        v /= 4294967296L;
        shift *= 4294967296.0Q;
    }
    return sgn(z) < 0 ? -out : out;
}

Float128 q_from_rational(const Rational& r) { return q_from_mpz(r.num()) / q_from_mpz(r.den()); }

double ipow_double(double base, int e) {
    double r = 1.0, b = base;
    while (e > 0) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// tail bound: closed-form integral comparison
// ---------------------------------------------------------------------------

// coef * S^{spow} * (ln S)^{logpow}
struct GrowthTerm {
    double coef;
    double spow;
    int logpow;
};

// Upper bound for sum_{m <= S, m in one residue class mod M} m^{-sigma}.
std::vector<GrowthTerm> class_sum_bound(double sigma, double inv_m) {
    if (sigma == 0.0)
        return {{1.0, 0.0, 0}, {inv_m, 1.0, 0}};
    if (sigma == 1.0)
        return {{1.0, 0.0, 0}, {inv_m, 0.0, 1}};
    if (sigma < 1.0)
        return {{1.0, 0.0, 0}, {inv_m / (1.0 - sigma), 1.0 - sigma, 0}};
    return {{1.0 + inv_m / (sigma - 1.0), 0.0, 0}};
}

std::vector<GrowthTerm> multiply_terms(const std::vector<GrowthTerm>& a,
                                       const std::vector<GrowthTerm>& b) {
    std::vector<GrowthTerm> out;
    for (const auto& x : a)
        for (const auto& y : b)
            out.push_back({x.coef * y.coef, x.spow + y.spow, x.logpow + y.logpow});
    return out;
}

// integral_N^inf x^{-m} (ln x)^b dx for m > 1
double log_power_integral_tail(double N, double m, int b) {
    const double lnn = std::log(N);
    double fac = 1.0, total = 0.0;
    for (int i = 0; i <= b; ++i) {
        total += fac * std::pow(lnn, b - i) / std::pow(m - 1.0, i + 1);
        fac *= (b - i);
    }
    return std::pow(N, 1.0 - m) * total;
}

struct ShellBound {
    std::vector<GrowthTerm> terms; // bound on one shell-sum f(S)
    bool convergent = true;

    double tail(double n_shells) const {
        if (!convergent)
            return std::numeric_limits<double>::infinity();
        double t = 0.0;
        for (const auto& g : terms) {
            const double m = -g.spow;
            if (m <= 1.0)
                return std::numeric_limits<double>::infinity();
            t += g.coef * log_power_integral_tail(n_shells, m, g.logpow);
        }
        return t;
    }
};

ShellBound make_shell_bound(const RootSystemData& rs, const SubLattice& lattice,
                            const std::vector<double>& sigma) {
    const int r = rs.rank;
    // exponent sitting on the all-ones coroot row, if present
    double sigma_top = 0.0;
    for (int a = 0; a < rs.n; ++a) {
        if (std::all_of(rs.positive_coroots[a].begin(), rs.positive_coroots[a].end(),
                        [](long c) { return c == 1; })) {
            sigma_top = sigma[a];
            break;
        }
    }
    // congruence density per coordinate: fixing the others pins m_j to one
    // class mod modulus/gcd(coeff_j, modulus)
    std::vector<double> inv_m(r, 1.0);
    for (int j = 0; j < r; ++j) {
        long best = 1;
        for (const auto& c : lattice.congruences) {
            const long g = std::gcd(c.coeffs[j], c.modulus);
            best = std::max(best, c.modulus / g);
        }
        inv_m[j] = 1.0 / static_cast<double>(best);
    }

    ShellBound out;
    for (int j = 0; j < r; ++j) {
        std::vector<GrowthTerm> prod = {
            {std::pow(static_cast<double>(r), sigma[j]), -sigma_top - sigma[j], 0}};
        for (int k = 0; k < r; ++k) {
            if (k == j)
                continue;
            prod = multiply_terms(prod, class_sum_bound(sigma[k], inv_m[k]));
        }
        out.terms.insert(out.terms.end(), prod.begin(), prod.end());
    }
    return out;
}

void check_convergence(const RootSystemData& rs, const std::vector<double>& sigma) {
    for (double s : sigma)
        if (s < 0.0)
            throw not_provably_convergent_error("negative exponents are not certified");
    const int r = rs.rank;
    for (int mask = 1; mask < (1 << r); ++mask) {
        double w = 0.0;
        for (int a = 0; a < rs.n; ++a) {
            bool touches = false;
            for (int j = 0; j < r; ++j)
                if ((mask >> j & 1) && rs.positive_coroots[a][j] > 0)
                    touches = true;
            if (touches)
                w += sigma[a];
        }
        if (w <= __builtin_popcount(static_cast<unsigned>(mask)))
            throw not_provably_convergent_error(
                "partial weight " + std::to_string(w) + " fails the convergence test");
    }
}

// ---------------------------------------------------------------------------
// shell enumeration kernel
// ---------------------------------------------------------------------------

struct TwistTable {
    long denom = 1;           // common denominator D
    IVec numer;               // per-coordinate numerators mod D
    std::vector<std::complex<double>> roots;

    bool trivial() const { return denom == 1; }
    static TwistTable build(const CoweightVector& y) {
        TwistTable t;
        mpz_class d(1);
        for (const auto& c : y.coords) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.den().get_mpz_t());
        t.denom = d.get_si();
        for (const auto& c : y.coords) {
            mpz_class u = c.num() * (d / c.den());
            mpz_class m = u % d;
            if (m < 0)
                m += d;
            t.numer.push_back(m.get_si());
        }
        if (std::all_of(t.numer.begin(), t.numer.end(), [](long u) { return u == 0; }))
            t.denom = 1;
        for (long k = 0; k < t.denom; ++k) {
            const double ph = 2.0 * pi_value<double>() * static_cast<double>(k) /
                              static_cast<double>(t.denom);
            t.roots.emplace_back(std::cos(ph), std::sin(ph));
        }
        return t;
    }
};

// Residues of the innermost coordinate allowed by the congruences once the
// outer coordinates are fixed. `a_v` is the coefficient picked up by v in each
// congruence and `rhs` the target residue.
struct InnerFilter {
    long period = 1;
    std::vector<std::pair<long, long>> reduced; // (a mod M, M) per congruence
    IVec rhs;                                   // recomputed per outer assignment

    static InnerFilter build(const std::vector<Congruence>& congruences, const IVec& a_v) {
        InnerFilter f;
        for (size_t i = 0; i < congruences.size(); ++i) {
            const long m = congruences[i].modulus;
            f.reduced.emplace_back(((a_v[i] % m) + m) % m, m);
            f.period = std::lcm(f.period, m);
        }
        f.rhs.assign(congruences.size(), 0);
        return f;
    }
    // allowed offsets o in [0, period) for v = v0 + o
    void offsets(long v0, std::vector<long>& out) const {
        out.clear();
        for (long o = 0; o < period; ++o) {
            bool ok = true;
            for (size_t i = 0; i < reduced.size() && ok; ++i) {
                const long m = reduced[i].second;
                ok = ((reduced[i].first * (v0 + o) - rhs[i]) % m + m) % m == 0;
            }
            if (ok)
                out.push_back(o);
        }
    }
};

enum class PowMode { IntExp, RealExp };

struct KernelSpec {
    const RootSystemData* rs;
    std::vector<Congruence> congruences;
    std::vector<double> sigma;
    std::vector<int> int_exp;
    PowMode mode = PowMode::RealExp;
    TwistTable twist;
};

// Sums one shell (sum m_j = S) into `acc`; returns the accepted-term count.
template <PowMode Mode>
long sum_shell(const KernelSpec& spec, long S, KahanC& acc) {
    const RootSystemData& rs = *spec.rs;
    const int r = rs.rank;
    const int n = rs.n;
    const auto& rows = rs.positive_coroots;
    const auto& congruences = spec.congruences;
    long count = 0;

    const bool twisted = !spec.twist.trivial();
    const long D = spec.twist.denom;

    auto term_of = [&](const IVec& m) -> bool {
        double t = 1.0;
        for (int a = 0; a < n; ++a) {
            long v = 0;
            for (int j = 0; j < r; ++j) v += rows[a][j] * m[j];
            if constexpr (Mode == PowMode::IntExp) {
                t /= ipow_double(static_cast<double>(v), spec.int_exp[a]);
            } else {
                t *= std::pow(static_cast<double>(v), -spec.sigma[a]);
            }
        }
        if (twisted) {
            long idx = 0;
            for (int j = 0; j < r; ++j) idx += spec.twist.numer[j] * m[j];
            acc.add(t * spec.twist.roots[((idx % D) + D) % D]);
        } else {
            acc.re.add(t);
        }
        ++count;
        return true;
    };

    // innermost coordinate is m_{r-1}; with sum fixed it absorbs -1 per unit of
    // the loop variable, so its effective congruence coefficient is
    // c_{last} and the rest contribute at their own coefficients.
    if (r == 2) {
        // m = (v, S - v), v in [1, S-1]
        InnerFilter filter = InnerFilter::build(congruences, [&] {
            IVec av;
            for (const auto& c : congruences) av.push_back(c.coeffs[0] - c.coeffs[1]);
            return av;
        }());
        for (size_t i = 0; i < congruences.size(); ++i)
            filter.rhs[i] = congruences[i].residue - congruences[i].coeffs[1] * S;
        std::vector<long> offs;
        filter.offsets(1, offs);
        IVec m(2);
        for (long o : offs) {
            for (long v = 1 + o; v <= S - 1; v += filter.period) {
                m[0] = v;
                m[1] = S - v;
                term_of(m);
            }
        }
    } else {
        // r == 3: m = (u, v, S - u - v)
        InnerFilter filter = InnerFilter::build(congruences, [&] {
            IVec av;
            for (const auto& c : congruences) av.push_back(c.coeffs[1] - c.coeffs[2]);
            return av;
        }());
        std::vector<long> offs;
        IVec m(3);
        for (long u = 1; u <= S - 2; ++u) {
            for (size_t i = 0; i < congruences.size(); ++i)
                filter.rhs[i] = congruences[i].residue - congruences[i].coeffs[0] * u -
                                congruences[i].coeffs[2] * (S - u);
            filter.offsets(1, offs);
            for (long o : offs) {
                for (long v = 1 + o; v <= S - 1 - u; v += filter.period) {
                    m[0] = u;
                    m[1] = v;
                    m[2] = S - u - v;
                    term_of(m);
                }
            }
        }
    }
    return count;
}

struct ShellSumResult {
    std::complex<double> value;
    long terms = 0;
};

ShellSumResult run_shell_sum(const KernelSpec& spec, long n_shells, const SumOptions& opts) {
    constexpr long kBlockShells = 64;
    const long nblocks = (n_shells + kBlockShells - 1) / kBlockShells;
    std::vector<std::complex<double>> partial(nblocks, {0.0, 0.0});
    std::vector<long> counts(nblocks, 0);

#ifdef _OPENMP
    const int prev_threads = omp_get_max_threads();
    if (opts.threads > 0)
        omp_set_num_threads(opts.threads);
#endif

#pragma omp parallel for schedule(dynamic, 1) if (opts.use_parallel)
    for (long b = 0; b < nblocks; ++b) {
        KahanC acc;
        long cnt = 0;
        const long lo = b * kBlockShells + 1;
        const long hi = std::min(n_shells, (b + 1) * kBlockShells);
        for (long S = std::max<long>(lo, spec.rs->rank); S <= hi; ++S) {
            if (spec.mode == PowMode::IntExp)
                cnt += sum_shell<PowMode::IntExp>(spec, S, acc);
            else
                cnt += sum_shell<PowMode::RealExp>(spec, S, acc);
        }
        partial[b] = acc.value();
        counts[b] = cnt;
    }

#ifdef _OPENMP
    if (opts.threads > 0)
        omp_set_num_threads(prev_threads);
#endif

    KahanC total;
    long terms = 0;
    for (long b = 0; b < nblocks; ++b) {
        total.add(partial[b]);
        terms += counts[b];
    }
    return {total.value(), terms};
}

long choose_shell_count(const RootSystemData& rs, const ShellBound& bound, double tol,
                        long long cap) {
    long n = 16;
    while (bound.tail(static_cast<double>(n)) > tol) {
        if (n > (1L << 40))
            throw slow_convergence_error("tail bound does not reach the target");
        n *= 2;
    }
    const double est =
        rs.rank == 2 ? 0.5 * static_cast<double>(n) * static_cast<double>(n)
                     : static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n) / 6.0;
    if (est > static_cast<double>(cap))
        throw slow_convergence_error("term cap exceeded before the tail bound reaches the target");
    return n;
}

KernelSpec make_spec(const RootSystemData& rs, const SubLattice& lattice,
                     const std::vector<double>& s, const CoweightVector& y) {
    if (static_cast<int>(s.size()) != rs.n)
        throw input_error("exponent vector length must be " + std::to_string(rs.n));
    KernelSpec spec;
    spec.rs = &rs;
    spec.congruences = lattice.congruences;
    spec.sigma = s;
    spec.mode = PowMode::IntExp;
    for (double v : s) {
        const int iv = static_cast<int>(std::lround(v));
        if (std::abs(v - iv) > 0 || iv < 0 || iv > 60) {
            spec.mode = PowMode::RealExp;
            break;
        }
    }
    if (spec.mode == PowMode::IntExp)
        for (double v : s) spec.int_exp.push_back(static_cast<int>(std::lround(v)));
    spec.twist = TwistTable::build(y.reduced_mod_coroot());
    return spec;
}

} // namespace

NumericResult zeta_numeric(const RootSystemData& rs, const SubLattice& lattice,
                           const std::vector<double>& s, const CoweightVector& y, double tol,
                           const SumOptions& opts) {
    check_convergence(rs, s);
    const ShellBound bound = make_shell_bound(rs, lattice, s);
    const long n_shells = choose_shell_count(rs, bound, tol, opts.term_cap);
    const KernelSpec spec = make_spec(rs, lattice, s, y);
    const ShellSumResult sum = run_shell_sum(spec, n_shells, opts);
    return {sum.value, bound.tail(static_cast<double>(n_shells)), sum.terms};
}

NumericResult zeta_numeric_reference(const RootSystemData& rs, const SubLattice& lattice,
                                     const std::vector<double>& s, const CoweightVector& y,
                                     double tol, const SumOptions& opts) {
    check_convergence(rs, s);
    const ShellBound bound = make_shell_bound(rs, lattice, s);
    const long n_shells = choose_shell_count(rs, bound, tol, opts.term_cap);
    const KernelSpec spec = make_spec(rs, lattice, s, y);
    KahanC acc;
    long terms = 0;
    for (long S = rs.rank; S <= n_shells; ++S) {
        if (spec.mode == PowMode::IntExp)
            terms += sum_shell<PowMode::IntExp>(spec, S, acc);
        else
            terms += sum_shell<PowMode::RealExp>(spec, S, acc);
    }
    return {acc.value(), bound.tail(static_cast<double>(n_shells)), terms};
}

NumericResult zeta_numeric_complex(const RootSystemData& rs, const SubLattice& lattice,
                                   const std::vector<std::complex<double>>& s,
                                   const CoweightVector& y, double tol, const SumOptions& opts) {
    std::vector<double> sigma;
    bool real = true;
    for (const auto& z : s) {
        sigma.push_back(z.real());
        real = real && z.imag() == 0.0;
    }
    if (real)
        return zeta_numeric(rs, lattice, sigma, y, tol, opts);

    check_convergence(rs, sigma);
    const ShellBound bound = make_shell_bound(rs, lattice, sigma);
    const long n_shells = choose_shell_count(rs, bound, tol, opts.term_cap);
    const TwistTable twist = TwistTable::build(y.reduced_mod_coroot());

    // straightforward serial loop; complex exponents sit outside the hot paths
    KahanC acc;
    long terms = 0;
    IVec m(rs.rank);
    const long D = twist.denom;
    std::function<void(int, long)> walk = [&](int j, long rest) {
        if (j == rs.rank - 1) {
            m[j] = rest;
            for (const auto& c : lattice.congruences)
                if (!c.holds(m))
                    return;
            std::complex<double> t(1.0, 0.0);
            for (int a = 0; a < rs.n; ++a) {
                long v = 0;
                for (int jj = 0; jj < rs.rank; ++jj) v += rs.positive_coroots[a][jj] * m[jj];
                t *= std::pow(std::complex<double>(static_cast<double>(v), 0.0), -s[a]);
            }
            if (!twist.trivial()) {
                long idx = 0;
                for (int jj = 0; jj < rs.rank; ++jj) idx += twist.numer[jj] * m[jj];
                t *= twist.roots[((idx % D) + D) % D];
            }
            acc.add(t);
            ++terms;
            return;
        }
        for (long v = 1; v <= rest - (rs.rank - 1 - j); ++v) {
            m[j] = v;
            walk(j + 1, rest - v);
        }
    };
    for (long S = rs.rank; S <= n_shells; ++S) walk(0, S);
    return {acc.value(), bound.tail(static_cast<double>(n_shells)), terms};
}

NumericResult s_sum_numeric(const RootSystemData& rs, const MultiIndex& k,
                            const CoweightVector& y, const SubLattice& lattice, double tol,
                            const SumOptions& opts) {
    for (int ka : k)
        if (ka < 2)
            throw input_error("S-sum needs every k_alpha >= 2");
    const double per_term_tol = tol / static_cast<double>(rs.weyl_order());
    NumericResult total;
    for (const auto& w : rs.weyl_elements) {
        const IMat cw = rs.coroot_action(w);
        std::vector<double> permuted(rs.n, 0.0);
        double sign = 1.0;
        for (int a = 0; a < rs.n; ++a) {
            auto [b, eps] = rs.map_coroot(cw, a);
            permuted[b] = static_cast<double>(k[a]);
            if (eps < 0 && k[a] % 2 != 0)
                sign = -sign;
        }
        CoweightVector wy{QVec(rs.rank, Rational(0))};
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j)
                wy.coords[i] += Rational(cw[i][j]) * y.coords[j];
        const NumericResult part = zeta_numeric(rs, lattice, permuted, wy, per_term_tol, opts);
        total.value += sign * part.value;
        total.tail_bound += part.tail_bound;
        total.terms_used += part.terms_used;
    }
    return total;
}

// ---------------------------------------------------------------------------
// scalar constants
// ---------------------------------------------------------------------------

template <typename Real>
Real hurwitz_zeta(Real s, Real a, int terms, int correction_order) {
    Real sum = 0;
    for (int m = 0; m < terms; ++m) {
        Real base = a + static_cast<Real>(m);
        if constexpr (std::is_same_v<Real, Float128>)
            sum += powq(base, -s);
        else
            sum += std::pow(base, -s);
    }
    Real M = a + static_cast<Real>(terms);
    Real mpow; // (M)^{-s}
    if constexpr (std::is_same_v<Real, Float128>)
        mpow = powq(M, -s);
    else
        mpow = std::pow(M, -s);
    sum += mpow * M / (s - 1);
    sum += mpow / 2;
    Real poch = s;          // (s)(s+1)...: starts at s
    Real mshift = mpow / M; // M^{-s-1}
    for (int kk = 1; kk <= correction_order; ++kk) {
        const Rational b = bernoulli_number(2 * kk) / factorial_q(2 * kk);
        Real coeff;
        if constexpr (std::is_same_v<Real, Float128>)
            coeff = q_from_rational(b);
        else
            coeff = b.to_double();
        sum += coeff * poch * mshift;
        poch *= (s + static_cast<Real>(2 * kk - 1)) * (s + static_cast<Real>(2 * kk));
        mshift /= M * M;
    }
    return sum;
}

template double hurwitz_zeta<double>(double, double, int, int);
template Float128 hurwitz_zeta<Float128>(Float128, Float128, int, int);

double zeta_const(int n) {
    if (n < 2)
        throw divergent_error("zeta argument below 2");
    return hurwitz_zeta<double>(n, 1.0);
}

double l_chi3(int n) {
    if (n < 2)
        throw divergent_error("L(s, chi_3) argument below 2");
    const double third = 1.0 / 3.0;
    return std::pow(3.0, -n) *
           (hurwitz_zeta<double>(n, third) - hurwitz_zeta<double>(n, 2.0 * third));
}

Float128 zeta_const_q(int n) {
    return hurwitz_zeta<Float128>(static_cast<Float128>(n), 1.0Q, 96, 14);
}

Float128 l_chi3_q(int n) {
    return powq(3.0Q, static_cast<Float128>(-n)) *
           (hurwitz_zeta<Float128>(static_cast<Float128>(n), 1.0Q / 3.0Q, 96, 14) -
            hurwitz_zeta<Float128>(static_cast<Float128>(n), 2.0Q / 3.0Q, 96, 14));
}

std::complex<double> phi_numeric(int n, const Rational& alpha) {
    const Rational a = alpha.frac();
    if (a.is_zero())
        return {zeta_const(n), 0.0};
    if (a == Rational(1, 2))
        return {(std::pow(2.0, 1 - n) - 1.0) * zeta_const(n), 0.0};
    if (a == Rational(1, 3) || a == Rational(2, 3)) {
        const double re = 0.5 * (std::pow(3.0, 1 - n) - 1.0) * zeta_const(n);
        const double im = 0.5 * std::sqrt(3.0) * l_chi3(n);
        return {re, a == Rational(1, 3) ? im : -im};
    }
    throw unsupported_residue_error("phi argument must have denominator 1, 2 or 3");
}

// ---------------------------------------------------------------------------
// symbolic evaluation and rational reconstruction
// ---------------------------------------------------------------------------

std::complex<double> eval_symbolic(const SymbolicValue& v) {
    KahanC acc;
    for (const auto& [m, c] : v.terms()) {
        double t = c.to_double();
        t *= ipow_double(pi_value<double>(), m.pi_pow);
        if (m.sqrt3_pow)
            t *= std::sqrt(3.0);
        for (int z : m.zeta_args) t *= zeta_const(z);
        for (int l : m.l3_args) t *= l_chi3(l);
        acc.add(m.i_pow == 1 ? std::complex<double>(0.0, t) : std::complex<double>(t, 0.0));
    }
    return acc.value();
}

Float128 eval_symbolic_real_q(const SymbolicValue& v) {
    Float128 total = 0.0Q;
    for (const auto& [m, c] : v.terms()) {
        if (m.i_pow != 0)
            continue;
        Float128 t = q_from_rational(c);
        for (int p = 0; p < m.pi_pow; ++p) t *= pi_value<Float128>();
        if (m.sqrt3_pow)
            t *= sqrtq(3.0Q);
        for (int z : m.zeta_args) t *= zeta_const_q(z);
        for (int l : m.l3_args) t *= l_chi3_q(l);
        total += t;
    }
    return total;
}

Rational exact_rational_from_q(Float128 x) {
    if (x == 0.0Q)
        return Rational(0);
    int e = 0;
    Float128 m = frexpq(x, &e); // |m| in [0.5, 1)
    Float128 scaled = m;
    for (int i = 0; i < 113; ++i) scaled *= 2.0Q;
    // scaled is now an exact integer
    mpz_class mant = 0, shift = 1;
    Float128 v = fabsq(scaled);
    while (v > 0.0Q) {
        const Float128 r = fmodq(v, 4294967296.0Q);
        mant += shift * static_cast<unsigned long>(r);
        v = (v - r) / 4294967296.0Q;
        shift *= 4294967296L;
    }
    if (x < 0.0Q)
        mant = -mant;
    const long p = e - 113;
    if (p >= 0) {
        mpz_class two;
        mpz_ui_pow_ui(two.get_mpz_t(), 2, p);
        return Rational(mant * two);
    }
    mpz_class two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, -p);
    return Rational(mant, two);
}

namespace {

std::optional<Rational> rationalize_exact(const Rational& x, long long max_den,
                                          const Rational& err) {
    // continued-fraction convergents of x
    mpz_class p0 = 1, q0 = 0;
    mpz_class p1 = x.floor(), q1 = 1;
    Rational rem = x - Rational(p1);
    const mpz_class den_cap(static_cast<long>(max_den));
    while (!rem.is_zero()) {
        const Rational inv = Rational(1) / rem;
        const mpz_class a = inv.floor();
        const mpz_class p2 = a * p1 + p0;
        const mpz_class q2 = a * q1 + q0;
        if (q2 > den_cap)
            break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        rem = inv - Rational(a);
    }
    const Rational approx(p1, q1);
    if ((x - approx).abs() > err)
        return std::nullopt;
    return approx;
}

} // namespace

std::optional<Rational> rationalize(double v, int kappa, long long max_den, double err_bound) {
    if (max_den <= 0 || max_den > 1'000'000'000'000'000LL)
        throw input_error("max_den must be in (0, 1e15]");
    if (!std::isfinite(v))
        return std::nullopt;
    const double x = v / ipow_double(pi_value<double>(), kappa);
    mpq_class exact;
    mpq_set_d(exact.get_mpq_t(), x);
    const double scale = std::max(std::abs(x), 1.0);
    const double err = std::max(10.0 * err_bound, 8.0 * scale * 2.2e-16);
    return rationalize_exact(Rational(exact), max_den, Rational(mpq_class(err)));
}

std::optional<Rational> rationalize_q(Float128 v, int kappa, long long max_den,
                                      Float128 err_bound) {
    if (max_den <= 0 || max_den > 1'000'000'000'000'000LL)
        throw input_error("max_den must be in (0, 1e15]");
    Float128 x = v;
    for (int p = 0; p < kappa; ++p) x /= pi_value<Float128>();
    const Float128 scale = fabsq(x) > 1.0Q ? fabsq(x) : 1.0Q;
    Float128 err = 10.0Q * err_bound;
    const Float128 ulps = 8.0Q * scale * FLT128_EPSILON;
    if (ulps > err)
        err = ulps;
    return rationalize_exact(exact_rational_from_q(x), max_den, exact_rational_from_q(err));
}

NumericResult witten_zeta_numeric(const GroupData& g, double s, double tol,
                                  const SumOptions& opts) {
    const long K = witten_normalization(g.rs);
    const double scale = std::pow(static_cast<double>(K), s);
    std::vector<double> exps(g.rs.n, s);
    NumericResult r = zeta_numeric(g.rs, g.lattice, exps, CoweightVector::zero(g.rs.rank),
                                   tol / scale, opts);
    r.value *= scale;
    r.tail_bound *= scale;
    return r;
}

} // namespace weylzeta

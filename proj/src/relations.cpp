#include "weylzeta/relations.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "weylzeta/bernoulli.hpp"
#include "weylzeta/errors.hpp"
#include "weylzeta/kahan.hpp"

namespace weylzeta {

namespace {

Rational b_at_third(int tau, int a) { return bernoulli_at(tau, Rational(a, 3)); }

SymbolicValue two_pi_i_over_fact(int tau) {
    return SymbolicValue::two_pi_i_power(tau).scaled(Rational(1) / factorial_q(tau));
}

} // namespace

Relation t41_relation(int p, int q, int s) {
    if (p < 1 || q < 1)
        throw input_error("t41_relation needs p, q >= 1");
    if (s < 1)
        throw divergent_error("s < 1 would reach phi at argument <= 1");

    Relation rel;
    auto spec = [](int e1, int e2, int e3) {
        return ZetaSpec{"PU3", {e1, e2, e3}, {}};
    };
    rel.lhs.emplace_back(Rational(3), spec(p, q, s));
    rel.lhs.emplace_back(Rational(p % 2 ? -3 : 3), spec(p, s, q));
    rel.lhs.emplace_back(Rational(q % 2 ? -3 : 3), spec(q, s, p));

    SymbolicValue rhs;
    for (int tau = 0; tau <= p; ++tau) {
        const int w = s + p + q - tau;
        if (w < 2)
            throw divergent_error("phi argument below 2 in t41 right-hand side");
        const Rational binom = binomial_q(p + q - tau - 1, q - 1);
        SymbolicValue block;
        for (int a = 0; a < 3; ++a)
            block += phi_to_basis(w, Rational(3 - a, 3)).scaled(b_at_third(tau, a));
        SymbolicValue term = two_pi_i_over_fact(tau) * block;
        term = term.scaled(tau % 2 ? binom : -binom); // -(-1)^tau
        rhs += term;
    }
    for (int tau = 0; tau <= q; ++tau) {
        const int w = s + p + q - tau;
        if (w < 2)
            throw divergent_error("phi argument below 2 in t41 right-hand side");
        const Rational binom = binomial_q(p + q - tau - 1, p - 1);
        SymbolicValue block;
        for (int a = 0; a < 3; ++a)
            block += phi_to_basis(w, Rational(a, 3)).scaled(b_at_third(tau, a));
        rhs -= (two_pi_i_over_fact(tau) * block).scaled(binom);
    }
    rel.rhs = rhs;
    return rel;
}

VolumeValue pu3_even_diagonal(int k) {
    if (k < 1)
        throw input_error("pu3_even_diagonal needs k >= 1");
    Rational total(0);
    for (int tau = 0; tau <= 2 * k; ++tau) {
        Rational inner(0);
        for (int a = 0; a < 3; ++a) inner += b_at_third(tau, a) * b_at_third(6 * k - tau, a);
        total += binomial_q(4 * k - tau - 1, 2 * k - 1) * inner /
                 (factorial_q(tau) * factorial_q(6 * k - tau));
    }
    // (2 pi i)^{6k} = (-1)^{3k} 2^{6k} pi^{6k}
    Rational q = pow2(6 * k) * total / Rational(9);
    if (k % 2 != 0)
        q = -q;
    return {q, 6 * k};
}

Relation psp2_relation(int p, int q, int r, int s) {
    if (p < 1 || q < 1 || r < 1)
        throw input_error("psp2_relation needs p, q, r >= 1");
    if (s < 1)
        throw divergent_error("s < 1 reaches zeta arguments below 2");
    const int w = s + p + q + r;

    Relation rel;
    auto spec = [](int e1, int e2, int e3, int e4) {
        return ZetaSpec{"PSp2", {e1, e2, e3, e4}, {}};
    };
    auto sgn = [](int e) { return e % 2 ? Rational(-1) : Rational(1); };
    rel.lhs.emplace_back(Rational(1), spec(p, s, q, r));
    rel.lhs.emplace_back(sgn(p), spec(p, q, s, r));
    rel.lhs.emplace_back(sgn(p + q), spec(r, q, s, p));
    rel.lhs.emplace_back(sgn(p + q + r), spec(r, s, q, p));

    const Rational half(1, 2);
    auto bern_block = [&](int xi) { // (B_xi(0) - B_xi(1/2)) / 2
        return (bernoulli_number(xi) - bernoulli_at(xi, half)) * half;
    };

    SymbolicValue blocks;
    for (int xi = 0; xi <= p; ++xi) {
        const Rational bb = bern_block(xi);
        if (bb.is_zero())
            continue;
        Rational c(0);
        for (int om = 0; om <= p - xi; ++om) {
            Rational piece = binomial_q(om + r - 1, om) *
                             binomial_q(p + q - 1 - xi - om, q - 1) / pow2(r + om);
            c += ((p - xi) % 2 ? -piece : piece);
        }
        blocks += (two_pi_i_over_fact(xi) * SymbolicValue::zeta(w - xi)).scaled(c * bb);
    }
    for (int xi = 0; xi <= q; ++xi) {
        // (B_xi(0) - (2^{1-(w-xi)} - 1) B_xi(1/2)) / 2
        const Rational bb =
            (bernoulli_number(xi) - (pow2(1 - (w - xi)) - Rational(1)) * bernoulli_at(xi, half)) *
            half;
        if (bb.is_zero())
            continue;
        Rational c(0);
        for (int om = 0; om <= q - xi; ++om) {
            Rational piece =
                binomial_q(om + r - 1, om) * binomial_q(p + q - 1 - xi - om, p - 1);
            c += ((p - om) % 2 ? -piece : piece);
        }
        blocks += (two_pi_i_over_fact(xi) * SymbolicValue::zeta(w - xi)).scaled(c * bb);
    }
    for (int xi = 0; xi <= r; ++xi) {
        const Rational bb = bern_block(xi);
        if (bb.is_zero())
            continue;
        Rational c(0);
        for (int om = 0; om <= p - 1; ++om) {
            Rational piece = binomial_q(om + r - xi, om) *
                             binomial_q(p + q - 2 - om, q - 1) / pow2(r - xi + om + 1);
            c += (p % 2 ? -piece : piece);
        }
        blocks += (two_pi_i_over_fact(xi) * SymbolicValue::zeta(w - xi)).scaled(c * bb);
    }
    for (int xi = 0; xi <= r; ++xi) {
        const Rational bb = bern_block(xi);
        if (bb.is_zero())
            continue;
        Rational c(0);
        for (int om = 0; om <= q - 1; ++om) {
            Rational piece = binomial_q(om + r - xi, om) * binomial_q(p + q - 2 - om, p - 1);
            c += ((p - om + 1) % 2 ? -piece : piece);
        }
        blocks += (two_pi_i_over_fact(xi) * SymbolicValue::zeta(w - xi)).scaled(c * bb);
    }
    rel.rhs = -blocks;
    return rel;
}

namespace {

struct UnknownKey {
    int a, b, c; // a <= b (first-two symmetry), c = last exponent
    auto operator<=>(const UnknownKey&) const = default;
};

UnknownKey key_of(const std::vector<int>& e) {
    return {std::min(e[0], e[1]), std::max(e[0], e[1]), e[2]};
}

} // namespace

SymbolicValue pu3_parity_reduce(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1)
        throw input_error("exponents must be positive");
    if ((a + b + c) % 2 == 0)
        throw input_error("parity reduction needs odd weight");

    std::vector<std::array<int, 3>> perms;
    {
        std::array<int, 3> v{a, b, c};
        std::sort(v.begin(), v.end());
        do {
            perms.push_back(v);
        } while (std::next_permutation(v.begin(), v.end()));
    }

    std::set<UnknownKey> key_set;
    struct Row {
        std::map<UnknownKey, Rational> coeffs;
        SymbolicValue rhs;
    };
    std::vector<Row> rows;
    for (const auto& perm : perms) {
        const Relation rel = t41_relation(perm[0], perm[1], perm[2]);
        Row row;
        row.rhs = rel.rhs;
        for (const auto& [coef, spec] : rel.lhs) {
            const UnknownKey k = key_of(spec.exponents);
            key_set.insert(k);
            auto [it, fresh] = row.coeffs.emplace(k, coef);
            if (!fresh)
                it->second += coef;
        }
        rows.push_back(std::move(row));
    }

    std::vector<UnknownKey> keys(key_set.begin(), key_set.end());
    const auto col_of = [&](const UnknownKey& k) {
        return std::distance(keys.begin(), std::find(keys.begin(), keys.end(), k));
    };
    const size_t ncols = keys.size();
    std::vector<QVec> m;
    std::vector<SymbolicValue> rhs;
    for (const auto& row : rows) {
        QVec v(ncols, Rational(0));
        for (const auto& [k, coef] : row.coeffs) v[col_of(k)] = coef;
        m.push_back(std::move(v));
        rhs.push_back(row.rhs);
    }

    // reduced row echelon form over Q with symbolic right-hand sides
    size_t rank = 0;
    std::vector<long> pivot_of_col(ncols, -1);
    for (size_t col = 0; col < ncols && rank < m.size(); ++col) {
        size_t p = rank;
        while (p < m.size() && m[p][col].is_zero()) ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[rank]);
        std::swap(rhs[p], rhs[rank]);
        const Rational d = m[rank][col];
        for (auto& x : m[rank]) x /= d;
        rhs[rank] = rhs[rank].scaled(Rational(1) / d);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col].is_zero())
                continue;
            const Rational f = m[i][col];
            for (size_t j = 0; j < ncols; ++j) m[i][j] -= f * m[rank][j];
            rhs[i] -= rhs[rank].scaled(f);
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }

    const UnknownKey target = key_of({a, b, c});
    const size_t tcol = col_of(target);
    const long prow = pivot_of_col[tcol];
    if (prow < 0)
        throw undetermined_error("the relation system does not isolate the target value");
    for (size_t j = 0; j < ncols; ++j)
        if (j != tcol && !m[prow][j].is_zero())
            throw undetermined_error("target value entangled with other unknowns");
    return rhs[prow];
}

std::string TSpec::to_string() const {
    std::ostringstream os;
    os << "T[" << tau << "," << mu << "](" << k << "," << l << "," << d << ")";
    return os.str();
}

std::vector<std::pair<mpz_class, TSpec>> pfd_reduce(int a, int b, int c, int d) {
    if (c < 1 || d < 1)
        throw input_error("pfd_reduce needs c, d >= 1");
    std::map<TSpec, mpz_class> acc;
    const mpz_class outer_sign = (c % 2) ? -1 : 1; // fold (-1)^c onto the expansion
    for (int j = 1; j <= c; ++j) {
        mpz_class coef = binomial(c + d - j - 1, c - j) * ((j % 2) ? -1 : 1) * outer_sign;
        acc[TSpec{1, 1, a, b + c + d - j, j}] += coef;
        acc[TSpec{1, 2, a, b + c + d - j, j}] += coef;
    }
    for (int j = 1; j <= d; ++j) {
        mpz_class coef = binomial(c + d - j - 1, d - j) * outer_sign;
        mpz_class two;
        mpz_ui_pow_ui(two.get_mpz_t(), 2, b + c + d - j);
        acc[TSpec{1, 2, a, b + c + d - j, j}] += coef * two;
    }
    std::vector<std::pair<mpz_class, TSpec>> out;
    for (const auto& [spec, coef] : acc)
        if (coef != 0)
            out.emplace_back(coef, spec);
    return out;
}

namespace {

std::map<TSpec, SymbolicValue>& fixture_table_mut() {
    static std::map<TSpec, SymbolicValue> table = [] {
        std::map<TSpec, SymbolicValue> t;
        auto zz = [](int i, int j) { return SymbolicValue::zeta(i) * SymbolicValue::zeta(j); };
        auto z = [](int i) { return SymbolicValue::zeta(i); };
        t[TSpec{1, 1, 1, 5, 1}] = zz(3, 4).scaled(Rational(-105, 128)) +
                                  zz(5, 2).scaled(Rational(-93, 128)) +
                                  z(7).scaled(Rational(381, 128));
        t[TSpec{1, 2, 1, 5, 1}] = zz(3, 4).scaled(Rational(-7, 128)) +
                                  zz(5, 2).scaled(Rational(-31, 128)) +
                                  z(7).scaled(Rational(127, 256));
        t[TSpec{1, 1, 1, 4, 2}] = zz(3, 4).scaled(Rational(105, 128)) +
                                  zz(5, 2).scaled(Rational(279, 128)) +
                                  z(7).scaled(Rational(-1143, 256));
        t[TSpec{1, 2, 1, 4, 2}] = zz(3, 4).scaled(Rational(7, 128)) +
                                  zz(5, 2).scaled(Rational(183, 128)) +
                                  z(7).scaled(Rational(-635, 256));
        return t;
    }();
    return table;
}

} // namespace

const std::map<TSpec, SymbolicValue>& t_fixture_table() { return fixture_table_mut(); }

void register_t_fixture(const TSpec& spec, const SymbolicValue& value) {
    fixture_table_mut()[spec] = value;
}

ParityResult psp2_parity_reduce(int a, int b, int c, int d) {
    if ((a + b + c + d) % 2 == 0)
        throw input_error("parity reduction needs odd weight");
    ParityResult out;
    for (const auto& [coef, spec] : pfd_reduce(a, b, c, d)) {
        auto it = t_fixture_table().find(spec);
        if (it == t_fixture_table().end()) {
            out.unresolved.emplace_back(coef, spec);
        } else {
            out.closed_form += it->second.scaled(Rational(coef));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// numeric side
// ---------------------------------------------------------------------------

namespace {

double log_tail_integral(double n, double m, int b) {
    const double lnn = std::log(n);
    double fac = 1.0, total = 0.0;
    for (int i = 0; i <= b; ++i) {
        total += fac * std::pow(lnn, b - i) / std::pow(m - 1.0, i + 1);
        fac *= (b - i);
    }
    return std::pow(n, 1.0 - m) * total;
}

// sum_{j >= 0, 2j + offset <= 3T} (2j+offset)^{-sigma} bounded by
// const + growth in T; represented as (coef, Tpow, logpow) triples.
struct TGrowth {
    double coef, tpow;
    int logpow;
};

std::vector<TGrowth> odd_sum_bound(double sigma) {
    if (sigma == 0.0)
        return {{2.0, 1.0, 0}};
    if (sigma == 1.0)
        return {{1.0 + std::log(3.0) / 2.0, 0.0, 0}, {0.5, 0.0, 1}};
    if (sigma < 1.0)
        return {{1.0, 0.0, 0}, {std::pow(3.0, 1.0 - sigma) / (2.0 * (1.0 - sigma)), 1.0 - sigma, 0}};
    return {{1.0 + 0.5 / (sigma - 1.0), 0.0, 0}};
}

double t_tail_bound(int k, int l, int d, double n_shells) {
    // f(T) <= (2T)^{-d} [ T^{-k} * OddSum(l) + T^{-l} * OddSum(k) ]
    double tail = 0.0;
    const double base = std::pow(2.0, -d);
    for (int side = 0; side < 2; ++side) {
        const double direct = side == 0 ? k : l;
        for (const auto& g : odd_sum_bound(side == 0 ? l : k)) {
            const double m = d + direct - g.tpow;
            if (m <= 1.0)
                return std::numeric_limits<double>::infinity();
            tail += base * g.coef * log_tail_integral(n_shells, m, g.logpow);
        }
    }
    return tail;
}

} // namespace

NumericResult t_zeta_numeric(int tau, int mu, int k, int l, int d, double tol,
                             long long term_cap) {
    if ((tau != 1 && tau != 2) || (mu != 1 && mu != 2))
        throw input_error("tau and mu must be 1 or 2");
    if (k < 1 || l < 1 || d < 1 || k + l + d < 3 || std::max({k, l, d}) < 2)
        throw divergent_error("exponent pattern outside the convergent range");
    if (k + d < 2 || l + d < 2)
        throw divergent_error("double sum does not converge for this pattern");

    long n = 16;
    while (t_tail_bound(k, l, d, static_cast<double>(n)) > tol) {
        if (n > (1L << 34))
            throw slow_convergence_error("T-sum tail bound does not reach the target");
        n *= 2;
    }
    if (0.5 * static_cast<double>(n) * static_cast<double>(n) > static_cast<double>(term_cap))
        throw slow_convergence_error("T-sum term cap exceeded");

    double sum = 0.0, comp = 0.0;
    long terms = 0;
    // shells T = l' + m'
    for (long T = 0; T <= n; ++T) {
        const double cfac = std::pow(static_cast<double>(2 * T + tau + mu), -d);
        for (long lp = 0; lp <= T; ++lp) {
            const double t = std::pow(static_cast<double>(2 * lp + tau), -k) *
                             std::pow(static_cast<double>(2 * (T - lp) + mu), -l) * cfac;
            const double y = t - comp;
            const double s2 = sum + y;
            comp = (s2 - sum) - y;
            sum = s2;
            ++terms;
        }
    }
    return {{sum, 0.0}, t_tail_bound(k, l, d, static_cast<double>(n)), terms};
}

Lem44Result lem44_numeric_check(int p, int q, double s, double t, std::complex<double> x,
                                double tol) {
    if (s <= 1.0)
        throw input_error("lem44 check needs s > 1");
    if (std::abs(x) > 1.0 + 1e-12)
        throw input_error("|x| must be at most 1");
    const double pi = pi_value<double>();
    const std::complex<double> I(0.0, 1.0);

    Lem44Result out;
    if (std::abs(x) == 0.0) {
        out.lhs = out.rhs = 0.0;
        out.bound = 0.0;
        out.agrees = true;
        return out;
    }

    const long n2 = 4000;  // double-sum shells
    const long m1 = 400000; // single-sum terms
    KahanC lhs;
    for (long S = 2; S <= n2; ++S) {
        for (long lv = 1; lv < S; ++lv) {
            const long mv = S - lv;
            const double lp = std::pow(static_cast<double>(lv), p);
            const double mq = std::pow(static_cast<double>(mv), q);
            const double ms = std::pow(static_cast<double>(mv), s);
            const double sv = static_cast<double>(S);
            lhs.add(std::pow(x, static_cast<double>(S)) * std::exp(I * (t * mv)) /
                    (lp * mq * std::pow(sv, s)));
            const double sign_p = (p % 2) ? -1.0 : 1.0;
            lhs.add(sign_p * std::pow(x, static_cast<double>(mv)) * std::exp(I * (t * sv)) /
                    (lp * ms * std::pow(sv, q)));
            const double sign_q = (q % 2) ? -1.0 : 1.0;
            lhs.add(sign_q * std::pow(x, static_cast<double>(mv)) * std::exp(-I * (t * lv)) /
                    (std::pow(static_cast<double>(lv), q) * ms *
                     std::pow(sv, p)));
        }
    }

    const double tq = t / (2.0 * pi);
    const double tfrac = tq - std::floor(tq);
    auto bern_d = [](int k, double xv) {
        const MultiPoly bp = bernoulli_polynomial(k);
        double acc = 0.0;
        for (int j = bp.degree(); j >= 0; --j) acc = acc * xv + bp.coeff(j).to_double();
        return acc;
    };
    auto lerch_sum = [&](double w, bool with_phase) {
        KahanC acc;
        for (long mv = 1; mv <= m1; ++mv) {
            std::complex<double> term =
                std::pow(x, static_cast<double>(mv)) / std::pow(static_cast<double>(mv), w);
            if (with_phase)
                term *= std::exp(I * (t * mv));
            acc.add(term);
        }
        return acc.value();
    };

    KahanC rhs;
    for (int tau = 0; tau <= p; ++tau) {
        const double w = s + p + q - tau;
        const double b = bern_d(tau, tfrac);
        std::complex<double> c = binomial(p + q - tau - 1, q - 1).get_d() *
                                 ((tau % 2) ? -1.0 : 1.0) *
                                 std::pow(2.0 * pi * I, static_cast<double>(tau)) /
                                 factorial(tau).get_d() * b;
        rhs.add(-c * lerch_sum(w, true));
    }
    for (int tau = 0; tau <= q; ++tau) {
        const double w = s + p + q - tau;
        const double b = bern_d(tau, tfrac);
        std::complex<double> c = binomial(p + q - tau - 1, p - 1).get_d() *
                                 std::pow(2.0 * pi * I, static_cast<double>(tau)) /
                                 factorial(tau).get_d() * b;
        rhs.add(-c * lerch_sum(w, false));
    }

    out.lhs = lhs.value();
    out.rhs = rhs.value();
    // crude truncation estimates for the harmonic-like tails
    const double wmin = std::min({s + q, s + p, s + 1.0});
    out.bound = 6.0 * (1.0 + std::log(static_cast<double>(n2))) /
                    ((wmin - 1.0) * std::pow(static_cast<double>(n2), wmin - 1.0)) +
                8.0 / std::pow(static_cast<double>(m1), s);
    out.agrees = std::abs(out.lhs - out.rhs) <= tol + out.bound;
    return out;
}

NumericResult zeta_spec_numeric(const ZetaSpec& spec, double tol) {
    const GroupData g = group_registry(spec.group);
    std::vector<double> s(spec.exponents.begin(), spec.exponents.end());
    const CoweightVector y =
        spec.twist.coords.empty() ? CoweightVector::zero(g.rs.rank) : spec.twist;
    return zeta_numeric(g.rs, g.lattice, s, y, tol);
}

std::pair<double, double> relation_residual(const Relation& rel, double tol) {
    std::complex<double> total = -eval_symbolic(rel.rhs);
    double bound = 0.0;
    const double per = tol / static_cast<double>(rel.lhs.size() + 1);
    for (const auto& [coef, spec] : rel.lhs) {
        const NumericResult r = zeta_spec_numeric(spec, per);
        total += coef.to_double() * r.value;
        bound += std::abs(coef.to_double()) * r.tail_bound;
    }
    return {std::abs(total), bound};
}

SymbolicValue collapse_single_spec(const Relation& rel) {
    Rational total(0);
    for (const auto& [coef, spec] : rel.lhs) {
        if (!(spec == rel.lhs.front().second))
            throw undetermined_error("relation involves more than one zeta value");
        total += coef;
    }
    if (total.is_zero())
        throw undetermined_error("zeta coefficients cancel; relation carries no value");
    return rel.rhs.scaled(Rational(1) / total);
}

} // namespace weylzeta

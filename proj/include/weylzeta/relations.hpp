#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weylzeta/bernoulli_p.hpp"
#include "weylzeta/numeric.hpp"
#include "weylzeta/symbolic.hpp"

namespace weylzeta {

// One zeta value occurring in a functional relation.
struct ZetaSpec {
    std::string group;
    std::vector<int> exponents;
    CoweightVector twist{}; // empty = no twist

    bool operator==(const ZetaSpec& o) const {
        return group == o.group && exponents == o.exponents && twist.coords == o.twist.coords;
    }
};

// sum coeff_i * zeta(spec_i) = rhs.
struct Relation {
    std::vector<std::pair<Rational, ZetaSpec>> lhs;
    SymbolicValue rhs;
};

// The A2 relation for zeta_2(.; PU(3)):
// 3[z(p,q,s) + (-1)^p z(p,s,q) + (-1)^q z(q,s,p)] =
//   - sum_{tau=0}^{p} C(p+q-tau-1, q-1) (-1)^tau (2 pi i)^tau / tau!
//         * sum_{a=0}^{2} B_tau(a/3) phi(s+p+q-tau, -a/3)
//   - sum_{tau=0}^{q} C(p+q-tau-1, p-1) (2 pi i)^tau / tau!
//         * sum_{a=0}^{2} B_tau(a/3) phi(s+p+q-tau, a/3).
Relation t41_relation(int p, int q, int s);

// Closed form of the even diagonal zeta_2((2k,2k,2k); PU(3)) as q * pi^{6k}:
// (2 pi i)^{6k}/9 sum_{tau=0}^{2k} C(4k-tau-1,2k-1)
//     sum_a B_tau(a/3) B_{6k-tau}(a/3) / (tau! (6k-tau)!).
VolumeValue pu3_even_diagonal(int k);

// The C2 relation for zeta_2(.; PSp(2)) with parameters (p, q, r) and
// variable position s; LHS members (p,s,q,r), (p,q,s,r), (r,q,s,p), (r,s,q,p).
Relation psp2_relation(int p, int q, int r, int s);

// Solves the linear system of all t41 relations over the permutations of
// (a,b,c) for zeta_2((a,b,c); PU(3)); needs odd weight to close.
SymbolicValue pu3_parity_reduce(int a, int b, int c);

// Parity-restricted double sum T_{tau,mu}(k,l,d) (tau, mu in {1,2}).
struct TSpec {
    int tau = 1, mu = 1;
    int k = 1, l = 1, d = 1;
    auto operator<=>(const TSpec&) const = default;
    std::string to_string() const;
};

// Partial-fraction expansion: zeta_2((a,b,c,d); PSp(2)) as an integer
// combination of T_{1,1} and T_{1,2} values (the (-1)^c sign folded in).
std::vector<std::pair<mpz_class, TSpec>> pfd_reduce(int a, int b, int c, int d);

struct ParityResult {
    SymbolicValue closed_form;                       // resolved part
    std::vector<std::pair<mpz_class, TSpec>> unresolved;
    bool complete() const { return unresolved.empty(); }
};

// Runs pfd_reduce and substitutes known T closed forms; T values outside the
// fixture table are reported unresolved (a declared partial outcome).
ParityResult psp2_parity_reduce(int a, int b, int c, int d);

// The known T closed forms; extensible via register_t_fixture.
const std::map<TSpec, SymbolicValue>& t_fixture_table();
void register_t_fixture(const TSpec& spec, const SymbolicValue& value);

// Truncated numeric evaluation of T_{tau,mu}(k,l,d) with a tail bound.
NumericResult t_zeta_numeric(int tau, int mu, int k, int l, int d, double tol,
                             long long term_cap = 2'000'000'000LL);

// Numeric check of both sides of the twisted double-sum identity behind the
// A2 relation (s > 1, t in [0, 2 pi), |x| <= 1).
struct Lem44Result {
    std::complex<double> lhs{0, 0}, rhs{0, 0};
    double bound = 0;
    bool agrees = false;
};
Lem44Result lem44_numeric_check(int p, int q, double s, double t, std::complex<double> x,
                                double tol);

// Numeric residual |sum coeff * zeta(spec) - rhs| together with the combined
// truncation bound.
std::pair<double, double> relation_residual(const Relation& rel, double tol);

// Numeric value of one ZetaSpec.
NumericResult zeta_spec_numeric(const ZetaSpec& spec, double tol);

// Collapses a relation whose LHS terms all carry the same spec; the exact
// value of that spec. Throws undetermined_error otherwise.
SymbolicValue collapse_single_spec(const Relation& rel);

} // namespace weylzeta

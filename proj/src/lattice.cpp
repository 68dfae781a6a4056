#include "weylzeta/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "weylzeta/errors.hpp"

namespace weylzeta {

namespace {

long mod_pos(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

// Canonicalizes one congruence: coefficients and residue into [0, M),
// common factors divided out, trivial rows dropped (returns false).
bool canonicalize_congruence(Congruence& c) {
    long g = c.modulus;
    for (long x : c.coeffs) g = std::gcd(g, std::abs(x));
    if (g > 1 && c.residue % g == 0) {
        for (auto& x : c.coeffs) x /= g;
        c.modulus /= g;
        c.residue /= g;
    }
    if (c.modulus == 1)
        return false;
    for (auto& x : c.coeffs) x = mod_pos(x, c.modulus);
    c.residue = mod_pos(c.residue, c.modulus);
    bool all_zero = std::all_of(c.coeffs.begin(), c.coeffs.end(), [](long x) { return x == 0; });
    if (all_zero) {
        if (c.residue != 0)
            throw computation_error("unsatisfiable lattice congruence");
        return false;
    }
    return true;
}

} // namespace

bool Congruence::holds(const IVec& m) const {
    long s = 0;
    for (size_t j = 0; j < coeffs.size(); ++j) s += coeffs[j] * m[j];
    return mod_pos(s - residue, modulus) == 0;
}

std::string Congruence::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0)
            continue;
        if (!first)
            os << " + ";
        if (coeffs[j] != 1)
            os << coeffs[j] << "*";
        os << "m" << (j + 1);
        first = false;
    }
    os << " = " << residue << " (mod " << modulus << ")";
    return os.str();
}

bool SubLattice::contains(const IVec& x) const {
    // x in L iff adj(G^T) x = 0 mod |det|
    const IMat gt = imat_transpose(generators);
    const long det = imat_det(gt);
    const long m = std::abs(det);
    const IMat adj = imat_adjugate(gt);
    const IVec y = imat_mul_vec(adj, x);
    return std::all_of(y.begin(), y.end(), [m](long v) { return mod_pos(v, m) == 0; });
}

bool SubLattice::contains_shifted(const IVec& m) const {
    IVec x = m;
    for (auto& v : x) v -= 1;
    return contains(x);
}

std::vector<SubLattice> intermediate_lattices(const RootSystemData& rs) {
    const int r = rs.rank;
    // P/Q as Z^r modulo the column span of the Cartan matrix.
    const SmithForm snf = smith_normal_form(rs.cartan);
    // columns of C span Q; x ~ y iff U x = U y mod D for the row-operation U
    // with U C V = D, i.e. C = U^{-1} D V^{-1} and x in Q iff (U x)_i = 0 mod d_i.
    IVec diag(r);
    for (int i = 0; i < r; ++i) diag[i] = std::max(snf.d[i][i], 1L);

    auto key_of = [&](const IVec& x) {
        IVec t = imat_mul_vec(snf.u, x);
        for (int i = 0; i < r; ++i) t[i] = mod_pos(t[i], diag[i]);
        return t;
    };
    auto add_keys = [&](const IVec& a, const IVec& b) {
        IVec t(r);
        for (int i = 0; i < r; ++i) t[i] = mod_pos(a[i] + b[i], diag[i]);
        return t;
    };
    auto lift = [&](const IVec& t) { return imat_mul_vec(imat_unimodular_inverse(snf.u), t); };

    // all elements of the quotient group
    std::vector<IVec> elements;
    {
        IVec t(r, 0);
        while (true) {
            elements.push_back(t);
            int i = r - 1;
            while (i >= 0) {
                if (++t[i] < diag[i])
                    break;
                t[i] = 0;
                --i;
            }
            if (i < 0)
                break;
        }
    }
    const long order = static_cast<long>(elements.size());

    // subgroups: closures of every subset of generators (the group is tiny)
    std::set<std::set<IVec>> subgroups;
    const size_t subsets = size_t{1} << elements.size();
    for (size_t mask = 0; mask < subsets; ++mask) {
        std::set<IVec> h = {IVec(r, 0)};
        std::vector<IVec> frontier = {IVec(r, 0)};
        std::vector<IVec> gens;
        for (size_t i = 0; i < elements.size(); ++i)
            if (mask & (size_t{1} << i))
                gens.push_back(elements[i]);
        while (!frontier.empty()) {
            IVec x = frontier.back();
            frontier.pop_back();
            for (const auto& g : gens) {
                IVec y = add_keys(x, g);
                if (h.insert(y).second)
                    frontier.push_back(y);
            }
        }
        subgroups.insert(h);
    }

    std::vector<SubLattice> out;
    for (const auto& h : subgroups) {
        SubLattice lat;
        IMat rows;
        for (const auto& t : h) rows.push_back(lift(t));
        for (int i = 0; i < r; ++i) {
            IVec col(r);
            for (int j = 0; j < r; ++j) col[j] = rs.cartan[j][i];
            rows.push_back(col); // alpha_i in lambda coordinates
        }
        lat.generators = hermite_row_basis(rows, r);
        lat.index_P_over_L = order / static_cast<long>(h.size());

        // congruence description of L + rho
        const IMat gt = imat_transpose(lat.generators);
        const long det = std::abs(imat_det(gt));
        const IMat adj = imat_adjugate(gt);
        for (int i = 0; i < r; ++i) {
            Congruence c;
            c.coeffs = adj[i];
            c.modulus = det;
            c.residue = std::accumulate(adj[i].begin(), adj[i].end(), 0L); // rho = (1,...,1)
            if (canonicalize_congruence(c))
                lat.congruences.push_back(c);
        }
        std::sort(lat.congruences.begin(), lat.congruences.end(),
                  [](const Congruence& a, const Congruence& b) {
                      return std::tie(a.modulus, a.coeffs, a.residue) <
                             std::tie(b.modulus, b.coeffs, b.residue);
                  });
        lat.congruences.erase(std::unique(lat.congruences.begin(), lat.congruences.end()),
                              lat.congruences.end());

        // dual representatives: minuscule mu with <mu, L> integral
        for (const auto& mu : minuscule_representatives(rs)) {
            bool integral = true;
            for (const auto& row : lat.generators) {
                Rational s(0);
                for (int j = 0; j < r; ++j) s += Rational(row[j]) * mu.coords[j];
                integral = integral && s.is_integer();
            }
            if (integral)
                lat.dual_reps.push_back(mu);
        }
        if (static_cast<long>(lat.dual_reps.size()) != lat.index_P_over_L)
            throw computation_error("dual representative count mismatch");
        out.push_back(std::move(lat));
    }

    std::sort(out.begin(), out.end(), [](const SubLattice& a, const SubLattice& b) {
        return a.index_P_over_L < b.index_P_over_L;
    });
    int mid = 0;
    for (auto& lat : out) {
        if (lat.index_P_over_L == 1)
            lat.name = "P";
        else if (lat.index_P_over_L == order)
            lat.name = "Q";
        else
            lat.name = "L" + std::to_string(++mid);
    }
    return out;
}

std::vector<Congruence> membership_congruences(const SubLattice& lattice) {
    return lattice.congruences;
}

Rational fourier_coefficient(const RootSystemData& rs, const SubLattice& lattice,
                             const CoweightVector& mu) {
    Rational two_rho_pairing(0);
    for (const auto& c : mu.coords) two_rho_pairing += Rational(2) * c;
    if (!two_rho_pairing.is_integer())
        throw non_integral_pairing_error("<mu, 2 rho> is not an integer");
    const bool member =
        std::any_of(lattice.dual_reps.begin(), lattice.dual_reps.end(),
                    [&](const CoweightVector& v) {
                        return v.reduced_mod_coroot() == mu.reduced_mod_coroot();
                    });
    if (!member)
        return Rational(0);
    const bool odd = mpz_odd_p(two_rho_pairing.num().get_mpz_t()) != 0;
    return Rational(odd ? -1 : 1, lattice.index_P_over_L);
}

namespace {

const std::map<std::string, std::pair<std::string, std::string>>& registry_table() {
    static const std::map<std::string, std::pair<std::string, std::string>> table = {
        {"SU3", {"A2", "P"}},   {"PU3", {"A2", "Q"}},   {"SU4", {"A3", "P"}},
        {"SO6", {"A3", "L1"}},  {"PU4", {"A3", "Q"}},   {"Spin5", {"B2", "P"}},
        {"SO5", {"B2", "Q"}},   {"Sp2", {"C2", "P"}},   {"PSp2", {"C2", "Q"}},
        {"Spin7", {"B3", "P"}}, {"SO7", {"B3", "Q"}},   {"Sp3", {"C3", "P"}},
        {"PSp3", {"C3", "Q"}},
    };
    return table;
}

} // namespace

GroupData group_registry(const std::string& name) {
    auto it = registry_table().find(name);
    if (it == registry_table().end())
        throw unknown_group_error("unknown group '" + name + "'");
    GroupData g;
    g.group_name = name;
    g.rs = build_root_system(it->second.first);
    for (auto& lat : intermediate_lattices(g.rs)) {
        if (lat.name == it->second.second) {
            g.lattice = std::move(lat);
            return g;
        }
    }
    throw computation_error("registry lattice missing for " + name);
}

std::vector<std::string> known_group_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : registry_table()) names.push_back(k);
    return names;
}

} // namespace weylzeta

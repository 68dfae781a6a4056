#include "weylzeta/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "weylzeta/errors.hpp"

namespace weylzeta {

Rational CoweightVector::pair_weight(const IVec& m) const {
    Rational s(0);
    for (size_t j = 0; j < coords.size(); ++j) s += coords[j] * Rational(m[j]);
    return s;
}

CoweightVector CoweightVector::operator+(const CoweightVector& o) const {
    CoweightVector r = *this;
    for (size_t j = 0; j < coords.size(); ++j) r.coords[j] += o.coords[j];
    return r;
}

CoweightVector CoweightVector::reduced_mod_coroot() const {
    CoweightVector r = *this;
    for (auto& c : r.coords) c = c.frac();
    return r;
}

std::string CoweightVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t j = 0; j < coords.size(); ++j) os << (j ? "," : "") << coords[j];
    os << ")";
    return os.str();
}

namespace {

// Positive-coroot coordinate rows in the order fixed by the defining sums
// (the i-th entry multiplies m_i in the corresponding linear form).
IMat coroot_table(Family f, int r) {
    if (f == Family::A && r == 2)
        return {{1, 0}, {0, 1}, {1, 1}};
    if (f == Family::A && r == 3)
        return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
    if (f == Family::B && r == 2)
        return {{1, 0}, {0, 1}, {1, 1}, {2, 1}};
    if (f == Family::C && r == 2)
        return {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
    if (f == Family::B && r == 3)
        return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1},
                {0, 2, 1}, {1, 1, 1}, {1, 2, 1}, {2, 2, 1}};
    if (f == Family::C && r == 3)
        return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1},
                {0, 1, 2}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}};
    throw unsupported_type_error("unsupported root system");
}

// Bourbaki simple roots in an ambient rational space.
QMat simple_roots_realization(Family f, int r) {
    if (f == Family::A) {
        QMat s(r, QVec(r + 1, Rational(0)));
        for (int i = 0; i < r; ++i) {
            s[i][i] = Rational(1);
            s[i][i + 1] = Rational(-1);
        }
        return s;
    }
    QMat s(r, QVec(r, Rational(0)));
    for (int i = 0; i + 1 < r; ++i) {
        s[i][i] = Rational(1);
        s[i][i + 1] = Rational(-1);
    }
    s[r - 1][r - 1] = (f == Family::B) ? Rational(1) : Rational(2);
    return s;
}

Rational dot(const QVec& a, const QVec& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec reflect(const QVec& v, const QVec& alpha, const Rational& alpha_norm2) {
    const Rational f = Rational(2) * dot(alpha, v) / alpha_norm2;
    QVec r = v;
    for (size_t i = 0; i < v.size(); ++i) r[i] -= f * alpha[i];
    return r;
}

std::string vec_key(const QVec& v) {
    std::string k;
    for (const auto& x : v) {
        k += x.to_string();
        k += ';';
    }
    return k;
}

std::string imat_key(const IMat& m) {
    std::string k;
    for (const auto& row : m)
        for (long x : row) {
            k += std::to_string(x);
            k += ';';
        }
    return k;
}

} // namespace

IMat RootSystemData::coroot_action(const IMat& weight_matrix) const {
    return imat_unimodular_inverse(imat_transpose(weight_matrix));
}

std::pair<int, int> RootSystemData::map_coroot(const IMat& coroot_matrix, int root_index) const {
    const IVec img = imat_mul_vec(coroot_matrix, positive_coroots[root_index]);
    for (int b = 0; b < n; ++b) {
        bool plus = true, minus = true;
        for (int j = 0; j < rank; ++j) {
            plus = plus && img[j] == positive_coroots[b][j];
            minus = minus && img[j] == -positive_coroots[b][j];
        }
        if (plus)
            return {b, +1};
        if (minus)
            return {b, -1};
    }
    throw computation_error("Weyl image is not a stored coroot");
}

std::vector<int> RootSystemData::weyl_orbit_of_root(int root_index) const {
    std::set<int> orbit;
    for (const auto& w : weyl_elements) {
        const IMat cw = coroot_action(w);
        orbit.insert(map_coroot(cw, root_index).first);
    }
    return {orbit.begin(), orbit.end()};
}

RootSystemData build_root_system(Family family, int rank) {
    if (rank < 2 || rank > 3)
        throw unsupported_type_error("rank must be 2 or 3");
    RootSystemData rs;
    rs.family = family;
    rs.rank = rank;
    rs.name = std::string(1, static_cast<char>(family)) + std::to_string(rank);
    rs.positive_coroots = coroot_table(family, rank);
    rs.n = static_cast<int>(rs.positive_coroots.size());

    const QMat simple = simple_roots_realization(family, rank);
    const int dim = static_cast<int>(simple[0].size());
    std::vector<Rational> simple_norm2(rank);
    for (int i = 0; i < rank; ++i) simple_norm2[i] = dot(simple[i], simple[i]);

    // All roots as the reflection closure of the simple roots.
    std::map<std::string, QVec> roots;
    std::vector<QVec> queue = simple;
    for (const auto& v : simple) roots.emplace(vec_key(v), v);
    while (!queue.empty()) {
        QVec v = queue.back();
        queue.pop_back();
        for (int i = 0; i < rank; ++i) {
            QVec w = reflect(v, simple[i], simple_norm2[i]);
            if (roots.emplace(vec_key(w), w).second)
                queue.push_back(w);
        }
    }

    // Cartan matrix from the realization.
    rs.cartan.assign(rank, IVec(rank, 0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Rational c = Rational(2) * dot(simple[i], simple[j]) / simple_norm2[i];
            if (!c.is_integer())
                throw computation_error("non-integer Cartan entry");
            rs.cartan[i][j] = c.num().get_si();
        }

    // alpha-basis coordinates and coroot coordinates of every positive root,
    // matched against the fixed coroot row table.
    QMat simple_t(dim, QVec(rank));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < rank; ++j) simple_t[i][j] = simple[j][i];

    struct RootInfo {
        QVec alpha_coords;
        IVec coroot_coords;
        Rational norm2;
    };
    std::vector<RootInfo> positives;
    for (const auto& [key, v] : roots) {
        QVec coords = qmat_solve(simple_t, v);
        bool nonneg = std::all_of(coords.begin(), coords.end(),
                                  [](const Rational& c) { return c.sign() >= 0; });
        if (!nonneg)
            continue;
        const Rational n2 = dot(v, v);
        IVec cr(rank);
        for (int i = 0; i < rank; ++i) {
            // alpha^vee = sum_i (c_i |alpha_i|^2 / |alpha|^2) alpha_i^vee
            Rational u = coords[i] * simple_norm2[i] / n2;
            if (!u.is_integer())
                throw computation_error("non-integer coroot coordinate");
            cr[i] = u.num().get_si();
        }
        positives.push_back({coords, cr, n2});
    }
    if (static_cast<int>(positives.size()) != rs.n)
        throw computation_error("positive root count mismatch");

    rs.pos_roots_in_alpha.resize(rs.n);
    std::vector<Rational> norm2(rs.n);
    for (int a = 0; a < rs.n; ++a) {
        auto it = std::find_if(positives.begin(), positives.end(), [&](const RootInfo& ri) {
            return ri.coroot_coords == rs.positive_coroots[a];
        });
        if (it == positives.end())
            throw computation_error("coroot table row missing from the realization");
        rs.pos_roots_in_alpha[a] = it->alpha_coords;
        norm2[a] = it->norm2;
    }

    // length classes in order of first appearance along the table
    rs.length_class.assign(rs.n, -1);
    std::vector<Rational> seen;
    for (int a = 0; a < rs.n; ++a) {
        auto it = std::find(seen.begin(), seen.end(), norm2[a]);
        if (it == seen.end()) {
            seen.push_back(norm2[a]);
            rs.length_class[a] = static_cast<int>(seen.size()) - 1;
        } else {
            rs.length_class[a] = static_cast<int>(it - seen.begin());
        }
    }

    // fundamental weights: lambda_j in the alpha basis solves <alpha_i^vee, lambda_j> = delta_ij
    rs.fw_in_root_basis = qmat_inverse(qmat_from_int(imat_transpose(rs.cartan)));
    rs.fw_covector_coords = qmat_inverse(qmat_from_int(rs.cartan));

    // Weyl group on weight coordinates: sigma_i maps m to m - m_i * (i-th Cartan column)
    std::vector<IMat> gens;
    for (int i = 0; i < rank; ++i) {
        IMat s = imat_identity(rank);
        for (int j = 0; j < rank; ++j) s[j][i] -= rs.cartan[j][i];
        gens.push_back(s);
    }
    std::map<std::string, IMat> group;
    std::vector<IMat> frontier = {imat_identity(rank)};
    group.emplace(imat_key(frontier[0]), frontier[0]);
    while (!frontier.empty()) {
        IMat w = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            IMat wg = imat_mul(g, w);
            if (group.emplace(imat_key(wg), wg).second)
                frontier.push_back(wg);
        }
    }
    for (const auto& [key, w] : group) rs.weyl_elements.push_back(w);

    const long expected_w = (family == Family::A) ? (rank == 2 ? 6 : 24) : (rank == 2 ? 8 : 48);
    if (rs.weyl_order() != expected_w)
        throw computation_error("Weyl group order mismatch");

    // rho = sum of fundamental weights = half the sum of positive roots
    for (int i = 0; i < rank; ++i) {
        Rational lhs(0), rhs(0);
        for (int j = 0; j < rank; ++j) lhs += rs.fw_in_root_basis[j][i];
        for (int a = 0; a < rs.n; ++a) rhs += rs.pos_roots_in_alpha[a][i];
        if (lhs != rhs / Rational(2))
            throw computation_error("rho consistency check failed");
    }
    return rs;
}

RootSystemData build_root_system(const std::string& type_name) {
    if (type_name.size() != 2)
        throw unsupported_type_error("unknown type '" + type_name + "'");
    const char f = type_name[0];
    const int r = type_name[1] - '0';
    if (f != 'A' && f != 'B' && f != 'C')
        throw unsupported_type_error("unknown type '" + type_name + "'");
    return build_root_system(static_cast<Family>(f), r);
}

QMat fundamental_weights_in_root_basis(const RootSystemData& rs) {
    return rs.fw_in_root_basis;
}

std::vector<CoweightVector> minuscule_representatives(const RootSystemData& rs) {
    std::vector<CoweightVector> reps = {CoweightVector::zero(rs.rank)};
    for (int j = 0; j < rs.rank; ++j) {
        bool minuscule = true;
        for (int a = 0; a < rs.n && minuscule; ++a) {
            // <lambda_j^vee, alpha> is the alpha_j-coefficient of the root
            const Rational& c = rs.pos_roots_in_alpha[a][j];
            minuscule = c.abs() <= Rational(1);
        }
        if (minuscule)
            reps.push_back({rs.fw_covector_coords[j]});
    }
    return reps;
}

long witten_normalization(const RootSystemData& rs) {
    long k = 1;
    for (const auto& row : rs.positive_coroots) {
        long h = 0;
        for (long x : row) h += x;
        k *= h;
    }
    return k;
}

} // namespace weylzeta

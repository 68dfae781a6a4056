#pragma once

#include <string>
#include <vector>

#include "weylzeta/linalg.hpp"
#include "weylzeta/rational.hpp"

namespace weylzeta {

// A rational vector in the coroot basis {alpha_1^vee, ..., alpha_r^vee}.
// Pairing with a weight sum m_j lambda_j is just sum coords_j * m_j.
struct CoweightVector {
    QVec coords;

    static CoweightVector zero(int rank) { return {QVec(rank, Rational(0))}; }
    int rank() const { return static_cast<int>(coords.size()); }
    Rational pair_weight(const IVec& m) const;
    CoweightVector operator+(const CoweightVector& o) const;
    // Coordinates reduced mod Z^r (coroot-lattice shifts leave twists unchanged).
    CoweightVector reduced_mod_coroot() const;
    bool operator==(const CoweightVector& o) const { return coords == o.coords; }
    std::string to_string() const;
};

enum class Family : char { A = 'A', B = 'B', C = 'C' };

// Exponent vector indexed like RootSystemData::positive_coroots.
using MultiIndex = std::vector<int>;

// Cartan data for one of the supported types A2, A3, B2, B3, C2, C3.
//
// Positive coroots are stored as integer coordinate rows in the coroot basis,
// ordered to reproduce the linear forms of the defining lattice sums
// (m1, m2, ..., m1+m2, ...); the first `rank` rows are the simple coroots.
// Root data is generated from a Bourbaki simple-root realization and validated
// against that fixed row table at construction.
struct RootSystemData {
    Family family;
    int rank = 0;
    int n = 0; // |Delta_+|
    std::string name;

    IMat cartan;              // cartan[i][j] = <alpha_i^vee, alpha_j>
    IMat positive_coroots;    // n rows, coroot-basis coordinates
    QMat pos_roots_in_alpha;  // n rows, alpha-basis coordinates of each positive root
    std::vector<int> length_class; // per positive root; equal-norm roots share a class
    QMat fw_in_root_basis;    // row j = lambda_j in the alpha basis
    QMat fw_covector_coords;  // row j = lambda_j^vee in the coroot basis (row j of C^{-1})
    std::vector<IMat> weyl_elements; // action on weight coordinates m

    int positive_root_count() const { return n; }
    long weyl_order() const { return static_cast<long>(weyl_elements.size()); }
    // Action of w on coroot coordinates: (M^T)^{-1} for the stored weight matrix.
    IMat coroot_action(const IMat& weight_matrix) const;
    // Index into positive_coroots of w(alpha_a^vee) together with its sign.
    std::pair<int, int> map_coroot(const IMat& coroot_matrix, int root_index) const;
    // Weyl orbit of positive root `root_index` as a set of positive-root indices.
    std::vector<int> weyl_orbit_of_root(int root_index) const;
};

RootSystemData build_root_system(Family family, int rank);
RootSystemData build_root_system(const std::string& type_name); // "A2", ..., "C3"

QMat fundamental_weights_in_root_basis(const RootSystemData& rs);

// {0} united with the minuscule fundamental coweights: a complete system of
// representatives of P^vee / Q^vee.
std::vector<CoweightVector> minuscule_representatives(const RootSystemData& rs);

// K = prod over positive coroots of <alpha^vee, rho> (the coordinate row sums).
long witten_normalization(const RootSystemData& rs);

} // namespace weylzeta

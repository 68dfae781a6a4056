#pragma once

#include <memory>
#include <string>
#include <vector>

#include "weylzeta/root_system.hpp"

namespace weylzeta {

// One congruence sum_j coeffs_j * m_j = residue (mod modulus) on the weight
// coordinates m of lambda = sum m_j lambda_j.
struct Congruence {
    IVec coeffs;
    long modulus = 1;
    long residue = 0;

    bool holds(const IVec& m) const;
    bool operator==(const Congruence& o) const {
        return coeffs == o.coeffs && modulus == o.modulus && residue == o.residue;
    }
    std::string to_string() const;
};

// A lattice Q <= L <= P, carried as an integer row basis in the lambda-basis
// together with the congruence description of L_+ + rho and the dual-subgroup
// representatives inside the minuscule system of P^vee/Q^vee.
struct SubLattice {
    std::string name; // "P", "Q", or "L1", "L2", ...
    IMat generators;  // rank x rank, rows generate L in lambda coordinates
    long index_P_over_L = 1;
    std::vector<Congruence> congruences; // characterize m with sum m_j lambda_j in L + rho
    std::vector<CoweightVector> dual_reps; // representatives of L^*/Q^vee

    bool is_full_weight_lattice() const { return index_P_over_L == 1; }
    // Direct membership test: does x (lambda coordinates) lie in L?
    bool contains(const IVec& x) const;
    // Membership of m in L + rho, i.e. m - (1,...,1) in L.
    bool contains_shifted(const IVec& m) const;
};

// All lattices Q <= L <= P, enumerated through the subgroups of P/Q
// (Smith normal form of the Cartan matrix); P first, Q last.
std::vector<SubLattice> intermediate_lattices(const RootSystemData& rs);

// The canonical congruence system of L (already stored on the lattice).
std::vector<Congruence> membership_congruences(const SubLattice& lattice);

// Fourier coefficient of the characteristic function of L + rho at a minuscule
// representative mu: (-1)^{<mu, 2 rho>} / |P/L| when mu lies in L^*/Q^vee, else 0.
Rational fourier_coefficient(const RootSystemData& rs, const SubLattice& lattice,
                             const CoweightVector& mu);

// Hardcoded dictionary between compact-group names and (type, lattice) pairs.
struct GroupData {
    std::string group_name;
    RootSystemData rs;
    SubLattice lattice;
};
GroupData group_registry(const std::string& name);
std::vector<std::string> known_group_names();

} // namespace weylzeta

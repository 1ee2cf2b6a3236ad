// Independent verification: commutator identities on realizations, and
// matrix-representation checks of X e_z = D_X e_z on small fixtures.
#pragma once

#include "csreal/realization.hpp"

#include <string>
#include <vector>

namespace csreal {

using RatMatrix = std::vector<std::vector<Rational>>;

// A concrete finite-dimensional representation with a chosen extreme vector.
// Matrices must satisfy the same Cartan-Weyl relations as the abstract
// bracket; validate_relations checks this exactly.
struct MatrixRep {
    int dimension = 0;
    std::map<GenId, RatMatrix> matrices;
    std::vector<Rational> extreme_vector;
    std::vector<Rational> weight;  // numeric j_1..j_r of the extreme vector

    // Throws std::logic_error when a bracket or the extreme-vector conditions
    // fail.
    void validate(const RootSystem& rs, const StructureConstants& sc,
                  const ParabolicChoice& pc) const;
};

struct CheckEntry {
    std::string name;
    bool pass;
    std::string detail;  // first offending residual, rendered, when failing
};

struct VerificationReport {
    std::vector<CheckEntry> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int pass_count() const {
        int n = 0;
        for (const auto& c : checks) n += c.pass;
        return n;
    }
};

enum class BracketSide { Anti, Direct };

// For every ordered basis pair (X, Y) asserts, exactly,
//   [D_X, D_Y] = D_{[Y,X]}   (Anti; the formal convention)
//   [D_X, D_Y] = D_{[X,Y]}   (Direct)
// where the right-hand side expands linearly over the realization.
VerificationReport bracket_check(const Realization& real, const OrbitContext& ctx,
                                 BracketSide side = BracketSide::Anti);

// Forms e_z = exp(sum z_a M_{E_a}) v exactly (the matrix is nilpotent on v)
// and asserts X e_z = D_X e_z componentwise for every generator in real.
// The context weight must match rep.weight.
VerificationReport matrix_check(const Realization& real, const OrbitContext& ctx,
                                const MatrixRep& rep);

// Closed forms versus the general series route, generator by generator.
VerificationReport cross_check(const OrbitContext& ctx);

// Fixtures.
MatrixRep sl2_spin_half(const RootSystem& rs);
MatrixRep sl2_spin_one(const RootSystem& rs);
MatrixRep sl3_defining(const RootSystem& rs, const StructureConstants& sc);
MatrixRep adjoint_rep(const RootSystem& rs, const StructureConstants& sc);

}  // namespace csreal

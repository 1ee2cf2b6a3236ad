// Root systems for the simple types A-G: construction by closure from the
// Cartan matrix, parabolic partitions, and the degree bound nu.
#pragma once

#include "csreal/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace csreal {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
    Family family;
    int rank;

    // Throws std::invalid_argument when the rank is not admissible.
    LieType(Family f, int r);

    // Parses "A2", "G2", "E8", ...
    static LieType parse(const std::string& s);
    std::string name() const;
};

// A root as its integer coordinate vector over the simple roots.
struct Root {
    std::vector<int> coords;

    auto operator<=>(const Root&) const = default;
    int height() const {
        int h = 0;
        for (int c : coords) h += c;
        return h;
    }
    bool is_positive() const { return height() > 0; }
    Root operator+(const Root& o) const;
    Root operator-(const Root& o) const;
    Root operator-() const;
    bool is_zero() const;
};

enum class RootTag { DeltaPlus, DeltaZero, DeltaMinus };

struct ParabolicChoice {
    std::set<int> excluded;       // Phi: simple-root indices spanning the reductive part
    std::vector<RootTag> tags;    // parallel to RootSystem::all_roots
};

class RootSystem {
public:
    explicit RootSystem(LieType t);

    const LieType& lie_type() const { return type_; }
    int rank() const { return type_.rank; }

    // Positive roots sorted by (height, lex), then their negatives in the
    // same order.
    const std::vector<Root>& all_roots() const { return all_roots_; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    const std::vector<Root>& simple_roots() const { return simple_; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    const Root& highest_root() const { return positive_.back(); }

    bool is_root(const Root& r) const { return index_.count(r) != 0; }
    // Index into all_roots(); throws when r is not a root.
    int root_index(const Root& r) const;
    std::optional<int> find_root(const Root& r) const;
    // Index into positive_roots(); throws when r is not positive.
    int positive_index(const Root& r) const;

    // alpha(H_i) for H_i the i-th simple coroot: sum_j n_j(alpha) A[j][i].
    int pairing(const Root& alpha, int i) const;
    // Invariant symmetric form (alpha, beta), normalized so the first simple
    // root has (a1,a1) = 2.
    Rational inner(const Root& a, const Root& b) const;
    // Integer coordinates of the coroot alpha^vee over the simple coroots.
    std::vector<int> coroot_coords(const Root& alpha) const;

    // "a1+2a2" style rendering; negative roots render as "-a1-2a2".
    std::string render_root(const Root& r) const;
    // Inverse of render_root; throws on malformed input or a non-root.
    Root parse_root(const std::string& s) const;

private:
    LieType type_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Rational> half_norm_;  // d_i = (a_i, a_i)/2
    std::vector<Root> simple_, positive_, all_roots_;
    std::map<Root, int> index_;
};

inline RootSystem build_root_system(LieType t) { return RootSystem(t); }

// nu = height(highest root) - 1.
int nu_degree(const RootSystem& rs);

// Tags every root: DeltaZero when the support lies inside `excluded`,
// otherwise DeltaPlus/DeltaMinus by sign.  excluded = {} is the Borel case.
ParabolicChoice partition(const RootSystem& rs, const std::set<int>& excluded);

// Cartan matrix for a valid type (exposed for tests).
std::vector<std::vector<int>> cartan_matrix_for(LieType t);

}  // namespace csreal

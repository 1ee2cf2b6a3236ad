// Differential-operator realizations of the Cartan-Weyl generators on a
// coherent-state orbit: closed forms for the Cartan, raising and simple
// lowering generators, and a general adjoint-series route that covers every
// generator and serves as the independent oracle for the closed forms.
#pragma once

#include "csreal/bernoulli.hpp"
#include "csreal/diffop.hpp"
#include "csreal/liepoly.hpp"
#include "csreal/roots.hpp"
#include "csreal/structure.hpp"

#include <map>
#include <optional>
#include <vector>

namespace csreal {

enum class Convention { Formal, Fock };

// Everything needed to realize generators on one orbit.  The weight is either
// symbolic (j_1..j_r as ring variables) or a fixed rational vector; the
// extreme vector is minimal: generators in Delta_- and Delta_0 annihilate it
// and H_k acts by j_k.
class OrbitContext {
public:
    OrbitContext(const RootSystem& rs, ParabolicChoice parabolic,
                 const StructureConstants& sc,
                 std::optional<std::vector<Rational>> weight = std::nullopt);

    const RootSystem& root_system() const { return *rs_; }
    const ParabolicChoice& parabolic() const { return parabolic_; }
    const StructureConstants& constants() const { return *sc_; }
    const CoeffTable& coeffs() const { return coeffs_; }
    int nu() const { return nu_; }

    // Roots of Delta_+ in (height, lex) order; z_b is indexed by position here.
    const std::vector<Root>& delta_plus() const { return delta_plus_; }
    int zindex(const Root& r) const;              // throws if r not in Delta_+
    std::optional<int> find_zindex(const Root& r) const;
    RootTag tag(const Root& r) const;

    bool symbolic_weight() const { return !weight_.has_value(); }
    // j_k as a polynomial: the variable j_{k+1} when symbolic, else a constant.
    Polynomial weight_poly(int k) const;
    // (gamma, j) = sum_k cv_k(gamma) j_k over the coroot coordinates of gamma.
    Polynomial weight_pairing(const Root& gamma) const;
    // j(H) for H = sum_i h_i H_i.
    Polynomial weight_on(const std::vector<Rational>& h) const;

    // Z = sum_{a in Delta_+} z_a E_a.
    const LiePoly& orbit_element() const { return orbit_; }

private:
    const RootSystem* rs_;
    const StructureConstants* sc_;
    ParabolicChoice parabolic_;
    CoeffTable coeffs_;
    int nu_;
    std::vector<Root> delta_plus_;
    std::map<Root, int> zindex_;
    std::optional<std::vector<Rational>> weight_;
    LiePoly orbit_;
};

// j(H) + sum_{b in Delta_+} b(H) z_b d_b for H given in the simple-coroot
// basis.  The single-index overload takes H = H_i.
DiffOp realize_cartan(const OrbitContext& ctx, const std::vector<Rational>& h);
DiffOp realize_cartan(const OrbitContext& ctx, int i);

// Closed form for E_a, a in Delta_+: sum_{k=0}^{nu} (-1)^k c_k
// sum_b p_{kab}(z) d_{a+b}, where p_{kab} is the chain-product polynomial of
// the k-fold adjoint action.  Throws when a is not in Delta_+.
DiffOp realize_raising(const OrbitContext& ctx, const Root& alpha);

// The individual polynomials p_{k,alpha,beta}, keyed by (k, target root
// alpha+beta).  Exposed for the degree/homogeneity properties.
std::map<std::pair<int, Root>, Polynomial> raising_polynomials(const OrbitContext& ctx,
                                                               const Root& alpha);

// Closed form for E_gamma with -gamma a simple root of Delta_+:
// (j,gamma) z_{-gamma} plus a d_k-weighted series over the quadratic
// polynomials q_{gamma,delta}.  Throws when gamma is not negative-simple.
DiffOp realize_lowering_simple(const OrbitContext& ctx, const Root& gamma);

// Closed form for E_a with (a, j) = 0 (checked; throws otherwise):
// -sum_b n_{b-a,a} z_{b-a} d_b with out-of-range z-indices dropped.
DiffOp realize_orthogonal(const OrbitContext& ctx, const Root& alpha);

// General route for an arbitrary element X:
//   W  = sum (-1)^n/n! ad_Z^n X        (finite by nilpotency of Z)
//   P  = Cartan part of W evaluated on the extreme vector
//   V  = sum_k c_k ad_Z^k W_+          (inverts the derivative-of-exponential)
//   D  = P + sum_a V_a d_a.
DiffOp realize_general(const OrbitContext& ctx, const LiePoly& x);
DiffOp realize_general(const OrbitContext& ctx, GenId g);

struct Realization {
    Convention convention;
    std::map<GenId, DiffOp> operators;
};

// Realizes every Cartan-Weyl basis generator via the general route.  The Fock
// convention applies the adjoint swap E_a <-> E_{-a}, H <-> H first.
Realization realize_all(const OrbitContext& ctx, Convention conv = Convention::Formal);

// E_a <-> E_{-a}, H_i fixed.
GenId adjoint_generator(const RootSystem& rs, GenId g);

}  // namespace csreal

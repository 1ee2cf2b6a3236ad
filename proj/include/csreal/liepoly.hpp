// Lie-algebra elements with polynomial coefficients and the adjoint action.
#pragma once

#include "csreal/polynomial.hpp"
#include "csreal/structure.hpp"

#include <compare>
#include <map>
#include <vector>

namespace csreal {

// A Cartan-Weyl basis element: H_i (cartan) or E_alpha (root index into
// RootSystem::all_roots()).
struct GenId {
    bool cartan;
    int index;
    auto operator<=>(const GenId&) const = default;

    static GenId H(int i) { return {true, i}; }
    static GenId E(int root_index) { return {false, root_index}; }
};

class LiePoly {
public:
    LiePoly() = default;

    static LiePoly basis(GenId g) {
        LiePoly x;
        x.coeffs_[g] = Polynomial(1);
        return x;
    }

    const std::map<GenId, Polynomial>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Polynomial coefficient(GenId g) const {
        auto it = coeffs_.find(g);
        return it == coeffs_.end() ? Polynomial() : it->second;
    }

    void add(GenId g, const Polynomial& p) {
        if (p.is_zero()) return;
        auto [it, fresh] = coeffs_.emplace(g, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    LiePoly& operator+=(const LiePoly& o) {
        for (const auto& [g, p] : o.coeffs_) add(g, p);
        return *this;
    }
    friend LiePoly operator+(LiePoly a, const LiePoly& b) { return a += b; }
    friend LiePoly operator*(const Polynomial& p, const LiePoly& x) {
        LiePoly r;
        for (const auto& [g, q] : x.coeffs_) r.add(g, p * q);
        return r;
    }
    friend bool operator==(const LiePoly& a, const LiePoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::map<GenId, Polynomial> coeffs_;
};

// [a, b] expanded through the Cartan-Weyl relations:
//   [H_i,H_j] = 0,  [H_i,E_b] = b(H_i) E_b,
//   [E_a,E_b] = n_{a,b} E_{a+b}  (a+b a root),
//   [E_a,E_{-a}] = sum_i cv_i(a) H_i  (coroot coordinates of a).
LiePoly bracket(const LiePoly& a, const LiePoly& b, const StructureConstants& sc);

inline LiePoly ad_action(const LiePoly& z, const LiePoly& x, const StructureConstants& sc) {
    return bracket(z, x, sc);
}

// sum_k coeffs[k] ad_z^k x.  Requires ad_z nilpotent on the orbit of x; throws
// std::runtime_error when the powers fail to vanish within dim(g) steps.
LiePoly ad_power_series(const LiePoly& z, const LiePoly& x,
                        const std::vector<Rational>& coeffs,
                        const StructureConstants& sc);

}  // namespace csreal

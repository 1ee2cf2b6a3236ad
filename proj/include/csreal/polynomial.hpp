// Multivariate polynomials over the rationals.
//
// Variables come in three kinds: orbit coordinates z (indexed by the position
// of their root in the positive-root list of the ambient context), their
// conjugates zbar (kernel computations only), and weight indeterminates j.
// Monomials are compared graded-lexicographically with z before zbar before j,
// which fixes a canonical term order for printing and golden-file tests.
#pragma once

#include "csreal/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace csreal {

enum class VarKind : std::uint8_t { Z = 0, ZBar = 1, J = 2 };

struct Var {
    VarKind kind;
    int index;
    auto operator<=>(const Var&) const = default;
};

inline Var zvar(int i) { return {VarKind::Z, i}; }
inline Var zbarvar(int i) { return {VarKind::ZBar, i}; }
inline Var jvar(int i) { return {VarKind::J, i}; }

// Exponent map; entries are strictly positive.
using Monomial = std::map<Var, int>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

inline int degree_of_kind(const Monomial& m, VarKind k) {
    int d = 0;
    for (const auto& [v, e] : m)
        if (v.kind == k) d += e;
    return d;
}

struct GradedLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;  // std::map lexicographic comparison
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLess>;

    Polynomial() = default;
    /*implicit*/ Polynomial(const Rational& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    /*implicit*/ Polynomial(int c) : Polynomial(Rational(c)) {}

    static Polynomial variable(Var v) {
        Polynomial p;
        p.terms_[Monomial{{v, 1}}] = 1;
        return p;
    }
    static Polynomial term(const Rational& c, const Monomial& m) {
        Polynomial p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_value() const {
        if (terms_.empty()) return 0;
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree(VarKind k) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, degree_of_kind(m, k));
        return d;  // -1 for the zero polynomial
    }

    // True when every term has the given degree in variables of kind k.
    bool is_homogeneous(VarKind k, int deg) const {
        for (const auto& [m, c] : terms_)
            if (degree_of_kind(m, k) != deg) return false;
        return true;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [v, e] : mb) m[v] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r;
        if (c == 0) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

    Polynomial derivative(Var v) const {
        Polynomial r;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(v);
            if (it == m.end()) continue;
            Monomial d = m;
            if (it->second == 1)
                d.erase(v);
            else
                d[v] = it->second - 1;
            r.add_term(d, c * it->second);
        }
        return r;
    }

    Polynomial pow(unsigned n) const {
        Polynomial r(1);
        for (unsigned k = 0; k < n; ++k) r *= *this;
        return r;
    }

    // Substitutes polynomials for the listed variables; unlisted variables stay.
    Polynomial substitute(const std::map<Var, Polynomial>& subs) const {
        Polynomial r;
        for (const auto& [m, c] : terms_) {
            Polynomial t(c);
            Monomial rest;
            for (const auto& [v, e] : m) {
                auto it = subs.find(v);
                if (it == subs.end())
                    rest[v] = e;
                else
                    t *= it->second.pow(static_cast<unsigned>(e));
            }
            r += t * Polynomial::term(1, rest);
        }
        return r;
    }

private:
    TermMap terms_;
};

// Canonical text rendering, e.g. "(1/2)*z[1,0]*z[0,1] + j1".  Variable names
// come from the caller since they depend on the ambient root system.
using VarNamer = std::function<std::string(Var)>;

std::string render(const Polynomial& p, const VarNamer& name);

}  // namespace csreal

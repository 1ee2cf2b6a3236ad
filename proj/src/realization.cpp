#include "csreal/realization.hpp"

#include <stdexcept>

namespace csreal {

OrbitContext::OrbitContext(const RootSystem& rs, ParabolicChoice parabolic,
                           const StructureConstants& sc,
                           std::optional<std::vector<Rational>> weight)
    : rs_(&rs),
      sc_(&sc),
      parabolic_(std::move(parabolic)),
      coeffs_(coeff_table(nu_degree(rs) + 2)),
      nu_(nu_degree(rs)),
      weight_(std::move(weight)) {
    if (weight_ && static_cast<int>(weight_->size()) != rs.rank())
        throw std::invalid_argument("weight length must equal the rank");
    const auto& all = rs.all_roots();
    for (size_t i = 0; i < all.size(); ++i)
        if (parabolic_.tags[i] == RootTag::DeltaPlus) delta_plus_.push_back(all[i]);
    // all_roots keeps positives first in (height, lex) order, so delta_plus_
    // inherits that order.
    for (size_t i = 0; i < delta_plus_.size(); ++i)
        zindex_[delta_plus_[i]] = static_cast<int>(i);
    for (size_t i = 0; i < delta_plus_.size(); ++i)
        orbit_.add(GenId::E(rs.root_index(delta_plus_[i])),
                   Polynomial::variable(zvar(static_cast<int>(i))));
}

int OrbitContext::zindex(const Root& r) const {
    auto it = zindex_.find(r);
    if (it == zindex_.end())
        throw std::invalid_argument("root not in Delta_+: " + rs_->render_root(r));
    return it->second;
}

std::optional<int> OrbitContext::find_zindex(const Root& r) const {
    auto it = zindex_.find(r);
    if (it == zindex_.end()) return std::nullopt;
    return it->second;
}

RootTag OrbitContext::tag(const Root& r) const {
    return parabolic_.tags[rs_->root_index(r)];
}

Polynomial OrbitContext::weight_poly(int k) const {
    if (weight_) return Polynomial((*weight_)[k]);
    return Polynomial::variable(jvar(k));
}

Polynomial OrbitContext::weight_pairing(const Root& gamma) const {
    auto cv = rs_->coroot_coords(gamma);
    Polynomial p;
    for (int k = 0; k < rs_->rank(); ++k)
        if (cv[k] != 0) p += Rational(cv[k]) * weight_poly(k);
    return p;
}

Polynomial OrbitContext::weight_on(const std::vector<Rational>& h) const {
    Polynomial p;
    for (int k = 0; k < rs_->rank(); ++k)
        if (h[k] != 0) p += h[k] * weight_poly(k);
    return p;
}

DiffOp realize_cartan(const OrbitContext& ctx, const std::vector<Rational>& h) {
    const RootSystem& rs = ctx.root_system();
    if (static_cast<int>(h.size()) != rs.rank())
        throw std::invalid_argument("Cartan vector length must equal the rank");
    DiffOp op(ctx.weight_on(h));
    for (const Root& beta : ctx.delta_plus()) {
        Rational pair = 0;
        for (int i = 0; i < rs.rank(); ++i)
            if (h[i] != 0) pair += h[i] * rs.pairing(beta, i);
        if (pair != 0)
            op.add_derivative(ctx.zindex(beta),
                              pair * Polynomial::variable(zvar(ctx.zindex(beta))));
    }
    return op;
}

DiffOp realize_cartan(const OrbitContext& ctx, int i) {
    std::vector<Rational> h(ctx.root_system().rank(), Rational(0));
    h.at(i) = 1;
    return realize_cartan(ctx, h);
}

namespace {

// Chain polynomials of the k-fold adjoint action of Z on E_alpha: the entry
// for (k, tau) is p_{k,alpha,beta} with tau = alpha + beta.
std::map<std::pair<int, Root>, Polynomial> chain_polys(const OrbitContext& ctx,
                                                       const Root& alpha) {
    const StructureConstants& sc = ctx.constants();
    std::map<std::pair<int, Root>, Polynomial> out;
    std::map<Root, Polynomial> level{{alpha, Polynomial(1)}};
    out[{0, alpha}] = Polynomial(1);
    for (int k = 1; k <= ctx.nu() + 1 && !level.empty(); ++k) {
        std::map<Root, Polynomial> next;
        for (const auto& [tau, p] : level) {
            for (const Root& mu : ctx.delta_plus()) {
                Rational n = sc.n(mu, tau);
                if (n == 0) continue;
                Root up = mu + tau;
                Polynomial t = n * (Polynomial::variable(zvar(ctx.zindex(mu))) * p);
                auto [it, fresh] = next.emplace(up, t);
                if (!fresh) it->second += t;
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            if (it->second.is_zero())
                it = next.erase(it);
            else
                ++it;
        }
        for (const auto& [tau, p] : next) out[{k, tau}] = p;
        level = std::move(next);
    }
    return out;
}

}  // namespace

std::map<std::pair<int, Root>, Polynomial> raising_polynomials(const OrbitContext& ctx,
                                                               const Root& alpha) {
    if (ctx.tag(alpha) != RootTag::DeltaPlus)
        throw std::invalid_argument("realize_raising requires a root in Delta_+");
    return chain_polys(ctx, alpha);
}

DiffOp realize_raising(const OrbitContext& ctx, const Root& alpha) {
    auto polys = raising_polynomials(ctx, alpha);
    const auto& c = ctx.coeffs().c;
    DiffOp op;
    for (const auto& [key, p] : polys) {
        auto [k, tau] = key;
        if (k > ctx.nu()) continue;  // series truncates at nu
        Rational ck = (k % 2 == 0 ? 1 : -1) * c[k];
        if (ck == 0) continue;
        if (auto zi = ctx.find_zindex(tau)) op.add_derivative(*zi, ck * p);
    }
    return op;
}

DiffOp realize_lowering_simple(const OrbitContext& ctx, const Root& gamma) {
    const RootSystem& rs = ctx.root_system();
    const StructureConstants& sc = ctx.constants();
    Root a = -gamma;
    if (gamma.is_positive() || a.height() != 1 || !ctx.find_zindex(a))
        throw std::invalid_argument(
            "realize_lowering_simple requires the negative of a simple root of Delta_+");
    const int za = ctx.zindex(a);
    const Polynomial z_a = Polynomial::variable(zvar(za));

    // Scalar part (j, gamma) z_{-gamma}.
    DiffOp op(ctx.weight_pairing(gamma) * z_a);

    // A: raising image of [Z, E_gamma];  B: its Delta_0 image.
    LiePoly A, B;
    for (const Root& mu : ctx.delta_plus()) {
        Root s = mu + gamma;
        if (s.is_zero() || !rs.is_root(s)) continue;
        Rational n = sc.n(mu, gamma);
        if (n == 0) continue;
        LiePoly t = (n * Polynomial::variable(zvar(ctx.zindex(mu)))) *
                    LiePoly::basis(GenId::E(rs.root_index(s)));
        if (ctx.tag(s) == RootTag::DeltaPlus)
            A += t;
        else if (ctx.tag(s) == RootTag::DeltaZero)
            B += t;
    }

    // C = ad_Z(B) - z_a sum_b b(H_a) z_b E_b, with H_a the coroot of a.
    auto cv = rs.coroot_coords(a);
    LiePoly C = bracket(ctx.orbit_element(), B, sc);
    for (const Root& beta : ctx.delta_plus()) {
        Rational pair = 0;
        for (int i = 0; i < rs.rank(); ++i)
            if (cv[i] != 0) pair += Rational(cv[i]) * rs.pairing(beta, i);
        if (pair == 0) continue;
        C += (-pair * (z_a * Polynomial::variable(zvar(ctx.zindex(beta))))) *
             LiePoly::basis(GenId::E(rs.root_index(beta)));
    }

    // V = -A + C - sum_{k=0}^{nu} d_k ad_Z^k C.
    const auto& d = ctx.coeffs().d;
    LiePoly V = Polynomial(Rational(-1)) * A + C;
    LiePoly power = C;
    for (int k = 0; k <= ctx.nu() && !power.is_zero(); ++k) {
        Rational neg_d = -d[k];
        V += Polynomial(neg_d) * power;
        power = bracket(ctx.orbit_element(), power, sc);
    }

    for (const auto& [g, p] : V.coefficients()) {
        if (g.cartan || p.is_zero())
            throw std::logic_error("lowering closed form produced a non-raising term");
        op.add_derivative(ctx.zindex(rs.all_roots()[g.index]), p);
    }
    return op;
}

DiffOp realize_orthogonal(const OrbitContext& ctx, const Root& alpha) {
    const RootSystem& rs = ctx.root_system();
    if (!ctx.weight_pairing(alpha).is_zero())
        throw std::invalid_argument("realize_orthogonal requires (alpha, j) = 0");
    DiffOp op;
    for (const Root& beta : ctx.delta_plus()) {
        Root down = beta - alpha;
        if (down.is_zero()) continue;  // vanishing-index convention
        auto zi = ctx.find_zindex(down);
        if (!zi) continue;
        Rational n = ctx.constants().n(down, alpha);
        if (n == 0) continue;
        op.add_derivative(ctx.zindex(beta),
                          -n * Polynomial::variable(zvar(*zi)));
    }
    return op;
}

DiffOp realize_general(const OrbitContext& ctx, const LiePoly& x) {
    const RootSystem& rs = ctx.root_system();
    const StructureConstants& sc = ctx.constants();
    const LiePoly& Z = ctx.orbit_element();
    const size_t dim = rs.all_roots().size() + rs.rank();

    // W = e^{-ad_Z} X.
    std::vector<Rational> exp_neg(dim + 2);
    for (size_t n = 0; n < exp_neg.size(); ++n)
        exp_neg[n] = Rational(n % 2 == 0 ? 1 : -1, factorial(static_cast<unsigned>(n)));
    LiePoly W = ad_power_series(Z, x, exp_neg, sc);

    // Scalar part: H_k acts by j_k; Delta_- and Delta_0 annihilate.
    DiffOp op;
    LiePoly Wplus;
    for (const auto& [g, p] : W.coefficients()) {
        if (g.cartan) {
            op.add_scalar(ctx.weight_poly(g.index) * p);
        } else if (ctx.parabolic().tags[g.index] == RootTag::DeltaPlus) {
            Wplus.add(g, p);
        }
    }

    // V = sum_k c_k ad_Z^k W_+ inverts the derivative of the exponential.
    std::vector<Rational> c(ctx.coeffs().c.begin(), ctx.coeffs().c.end());
    LiePoly V = ad_power_series(Z, Wplus, c, sc);
    for (const auto& [g, p] : V.coefficients())
        op.add_derivative(ctx.zindex(rs.all_roots()[g.index]), p);
    return op;
}

DiffOp realize_general(const OrbitContext& ctx, GenId g) {
    return realize_general(ctx, LiePoly::basis(g));
}

GenId adjoint_generator(const RootSystem& rs, GenId g) {
    if (g.cartan) return g;
    return GenId::E(rs.root_index(-rs.all_roots()[g.index]));
}

Realization realize_all(const OrbitContext& ctx, Convention conv) {
    const RootSystem& rs = ctx.root_system();
    Realization real{conv, {}};
    std::vector<GenId> gens;
    for (int i = 0; i < rs.rank(); ++i) gens.push_back(GenId::H(i));
    for (size_t i = 0; i < rs.all_roots().size(); ++i)
        gens.push_back(GenId::E(static_cast<int>(i)));
    for (GenId g : gens) {
        GenId src = conv == Convention::Fock ? adjoint_generator(rs, g) : g;
        real.operators[g] = realize_general(ctx, src);
    }
    return real;
}

}  // namespace csreal

#include "csreal/oracle.hpp"

#include "csreal/render.hpp"

#include <stdexcept>

namespace csreal {
namespace {

RatMatrix zeros(int n) { return RatMatrix(n, std::vector<Rational>(n, Rational(0))); }

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
    int n = static_cast<int>(a.size());
    RatMatrix r = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r = mul(a, b), s = mul(b, a);
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j) r[i][j] -= s[i][j];
    return r;
}

std::vector<GenId> basis_generators(const RootSystem& rs) {
    std::vector<GenId> gens;
    for (int i = 0; i < rs.rank(); ++i) gens.push_back(GenId::H(i));
    for (size_t i = 0; i < rs.all_roots().size(); ++i)
        gens.push_back(GenId::E(static_cast<int>(i)));
    return gens;
}

std::string gen_name(const RootSystem& rs, GenId g) {
    if (g.cartan) return "H" + std::to_string(g.index + 1);
    return "E[" + rs.render_root(rs.all_roots()[g.index]) + "]";
}

// Linear extension of the realization over a bracket result with constant
// polynomial coefficients.
DiffOp realize_combination(const Realization& real, const LiePoly& x) {
    DiffOp out;
    for (const auto& [g, p] : x.coefficients()) {
        if (!p.is_constant())
            throw std::logic_error("bracket of basis elements must have constant coefficients");
        out += p.constant_value() * real.operators.at(g);
    }
    return out;
}

std::string residual_summary(const OrbitContext& ctx, const DiffOp& r) {
    return render(r, default_namer(ctx));
}

}  // namespace

void MatrixRep::validate(const RootSystem& rs, const StructureConstants& sc,
                         const ParabolicChoice& pc) const {
    for (const auto& [ga, ma] : matrices) {
        for (const auto& [gb, mb] : matrices) {
            RatMatrix lhs = commutator(ma, mb);
            LiePoly abstract = bracket(LiePoly::basis(ga), LiePoly::basis(gb), sc);
            RatMatrix rhs = zeros(dimension);
            for (const auto& [g, p] : abstract.coefficients()) {
                Rational c = p.constant_value();
                const RatMatrix& m = matrices.at(g);
                for (int i = 0; i < dimension; ++i)
                    for (int j = 0; j < dimension; ++j) rhs[i][j] += c * m[i][j];
            }
            if (lhs != rhs) throw std::logic_error("matrix representation violates a bracket");
        }
    }
    // Extreme-vector conditions.
    for (const auto& [g, m] : matrices) {
        std::vector<Rational> image(dimension, Rational(0));
        for (int i = 0; i < dimension; ++i)
            for (int j = 0; j < dimension; ++j) image[i] += m[i][j] * extreme_vector[j];
        if (g.cartan) {
            for (int i = 0; i < dimension; ++i)
                if (image[i] != weight[g.index] * extreme_vector[i])
                    throw std::logic_error("extreme vector is not an H-eigenvector");
        } else if (pc.tags[g.index] != RootTag::DeltaPlus) {
            for (int i = 0; i < dimension; ++i)
                if (image[i] != 0)
                    throw std::logic_error("extreme vector not annihilated by Delta_- / Delta_0");
        }
    }
}

VerificationReport bracket_check(const Realization& real, const OrbitContext& ctx,
                                 BracketSide side) {
    const RootSystem& rs = ctx.root_system();
    const StructureConstants& sc = ctx.constants();
    VerificationReport report;
    for (const auto& [gx, dx] : real.operators) {
        for (const auto& [gy, dy] : real.operators) {
            LiePoly rhs_elem = side == BracketSide::Anti
                                   ? bracket(LiePoly::basis(gy), LiePoly::basis(gx), sc)
                                   : bracket(LiePoly::basis(gx), LiePoly::basis(gy), sc);
            DiffOp residual = diffop_commutator(dx, dy) - realize_combination(real, rhs_elem);
            CheckEntry e;
            e.name = "bracket(" + gen_name(rs, gx) + "," + gen_name(rs, gy) + ")";
            e.pass = residual.is_zero();
            if (!e.pass) e.detail = residual_summary(ctx, residual);
            report.checks.push_back(std::move(e));
        }
    }
    return report;
}

VerificationReport matrix_check(const Realization& real, const OrbitContext& ctx,
                                const MatrixRep& rep) {
    const RootSystem& rs = ctx.root_system();
    if (ctx.symbolic_weight())
        throw std::invalid_argument("matrix_check requires a numeric weight");
    for (int k = 0; k < rs.rank(); ++k)
        if (ctx.weight_poly(k).constant_value() != rep.weight[k])
            throw std::invalid_argument("context weight does not match the representation");

    // e_z = exp(sum_a z_a M_a) v, summed term by term; the matrix is nilpotent
    // on the cyclic vector so the series is finite.
    const int n = rep.dimension;
    std::vector<Polynomial> ez(n), term(n);
    for (int i = 0; i < n; ++i) term[i] = Polynomial(rep.extreme_vector[i]);
    for (int k = 0;; ++k) {
        bool zero = true;
        for (int i = 0; i < n; ++i)
            if (!term[i].is_zero()) zero = false;
        if (zero) break;
        if (k > n) throw std::logic_error("coherent-state exponential did not terminate");
        for (int i = 0; i < n; ++i) ez[i] += term[i];
        std::vector<Polynomial> next(n);
        for (const Root& a : ctx.delta_plus()) {
            const RatMatrix& m = rep.matrices.at(GenId::E(rs.root_index(a)));
            Polynomial za = Polynomial::variable(zvar(ctx.zindex(a)));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (m[i][j] != 0) next[i] += (m[i][j] / Rational(k + 1)) * (za * term[j]);
        }
        term = std::move(next);
    }

    VerificationReport report;
    for (const auto& [g, op] : real.operators) {
        const RatMatrix& m = rep.matrices.at(g);
        CheckEntry e;
        e.name = "matrix(" + gen_name(rs, g) + ")";
        e.pass = true;
        for (int i = 0; i < n && e.pass; ++i) {
            Polynomial lhs;
            for (int j = 0; j < n; ++j)
                if (m[i][j] != 0) lhs += m[i][j] * ez[j];
            Polynomial rhs = op.apply(ez[i]);
            if (!(lhs - rhs == Polynomial())) {
                e.pass = false;
                e.detail = "component " + std::to_string(i) + ": " +
                           render(lhs - rhs, default_namer(ctx));
            }
        }
        report.checks.push_back(std::move(e));
    }
    return report;
}

VerificationReport cross_check(const OrbitContext& ctx) {
    const RootSystem& rs = ctx.root_system();
    VerificationReport report;
    auto add = [&](const std::string& name, const DiffOp& closed, const DiffOp& series) {
        DiffOp residual = closed - series;
        CheckEntry e;
        e.name = name;
        e.pass = residual.is_zero();
        if (!e.pass) e.detail = residual_summary(ctx, residual);
        report.checks.push_back(std::move(e));
    };

    for (int i = 0; i < rs.rank(); ++i)
        add("cartan(H" + std::to_string(i + 1) + ")", realize_cartan(ctx, i),
            realize_general(ctx, GenId::H(i)));
    for (const Root& a : ctx.delta_plus())
        add("raising(" + rs.render_root(a) + ")", realize_raising(ctx, a),
            realize_general(ctx, GenId::E(rs.root_index(a))));
    for (const Root& s : rs.simple_roots()) {
        if (!ctx.find_zindex(s)) continue;
        Root gamma = -s;
        add("lowering(" + rs.render_root(gamma) + ")", realize_lowering_simple(ctx, gamma),
            realize_general(ctx, GenId::E(rs.root_index(gamma))));
    }
    for (const Root& r : rs.all_roots()) {
        if (ctx.tag(r) != RootTag::DeltaZero) continue;
        if (!ctx.weight_pairing(r).is_zero()) continue;
        add("orthogonal(" + rs.render_root(r) + ")", realize_orthogonal(ctx, r),
            realize_general(ctx, GenId::E(rs.root_index(r))));
    }
    return report;
}

namespace {

// Fills in matrices for non-simple roots from the simple ones by bracketing
// along a decomposition gamma = alpha + (gamma - alpha) with alpha simple.
void extend_from_simples(MatrixRep& rep, const RootSystem& rs, const StructureConstants& sc) {
    const auto& pos = rs.positive_roots();
    for (const Root& gamma : pos) {
        if (gamma.height() == 1) continue;
        for (const Root& alpha : rs.simple_roots()) {
            Root beta = gamma - alpha;
            if (!beta.is_positive() || !rs.is_root(beta)) continue;
            Rational n = sc.n(alpha, beta);
            if (n == 0) continue;
            const RatMatrix& ma = rep.matrices.at(GenId::E(rs.root_index(alpha)));
            const RatMatrix& mb = rep.matrices.at(GenId::E(rs.root_index(beta)));
            RatMatrix m = commutator(ma, mb);
            for (auto& row : m)
                for (auto& v : row) v /= n;
            rep.matrices[GenId::E(rs.root_index(gamma))] = m;

            Rational nn = sc.n(-alpha, -beta);
            const RatMatrix& mna = rep.matrices.at(GenId::E(rs.root_index(-alpha)));
            const RatMatrix& mnb = rep.matrices.at(GenId::E(rs.root_index(-beta)));
            RatMatrix mn = commutator(mna, mnb);
            for (auto& row : mn)
                for (auto& v : row) v /= nn;
            rep.matrices[GenId::E(rs.root_index(-gamma))] = mn;
            break;
        }
    }
}

}  // namespace

MatrixRep sl2_spin_half(const RootSystem& rs) {
    if (rs.rank() != 1) throw std::invalid_argument("sl2 fixture requires rank 1");
    MatrixRep rep;
    rep.dimension = 2;
    rep.matrices[GenId::H(0)] = {{1, 0}, {0, -1}};
    rep.matrices[GenId::E(0)] = {{0, 1}, {0, 0}};
    rep.matrices[GenId::E(1)] = {{0, 0}, {1, 0}};
    rep.extreme_vector = {0, 1};
    rep.weight = {-1};
    return rep;
}

MatrixRep sl2_spin_one(const RootSystem& rs) {
    if (rs.rank() != 1) throw std::invalid_argument("sl2 fixture requires rank 1");
    MatrixRep rep;
    rep.dimension = 3;
    rep.matrices[GenId::H(0)] = {{2, 0, 0}, {0, 0, 0}, {0, 0, -2}};
    rep.matrices[GenId::E(0)] = {{0, 1, 0}, {0, 0, 2}, {0, 0, 0}};
    rep.matrices[GenId::E(1)] = {{0, 0, 0}, {2, 0, 0}, {0, 1, 0}};
    rep.extreme_vector = {0, 0, 1};
    rep.weight = {-2};
    return rep;
}

MatrixRep sl3_defining(const RootSystem& rs, const StructureConstants& sc) {
    if (rs.lie_type().family != Family::A || rs.rank() != 2)
        throw std::invalid_argument("sl3 fixture requires type A2");
    MatrixRep rep;
    rep.dimension = 3;
    auto unit = [](int i, int j) {
        RatMatrix m = zeros(3);
        m[i][j] = 1;
        return m;
    };
    RatMatrix h1 = zeros(3), h2 = zeros(3);
    h1[0][0] = 1;
    h1[1][1] = -1;
    h2[1][1] = 1;
    h2[2][2] = -1;
    rep.matrices[GenId::H(0)] = h1;
    rep.matrices[GenId::H(1)] = h2;
    Root a1 = rs.simple_roots()[0], a2 = rs.simple_roots()[1];
    rep.matrices[GenId::E(rs.root_index(a1))] = unit(0, 1);
    rep.matrices[GenId::E(rs.root_index(a2))] = unit(1, 2);
    rep.matrices[GenId::E(rs.root_index(-a1))] = unit(1, 0);
    rep.matrices[GenId::E(rs.root_index(-a2))] = unit(2, 1);
    extend_from_simples(rep, rs, sc);
    rep.extreme_vector = {0, 0, 1};
    rep.weight = {0, -1};
    return rep;
}

MatrixRep adjoint_rep(const RootSystem& rs, const StructureConstants& sc) {
    MatrixRep rep;
    const auto gens = basis_generators(rs);
    // Basis of the algebra itself: all roots, then the Cartan generators.
    std::vector<GenId> basis;
    for (size_t i = 0; i < rs.all_roots().size(); ++i)
        basis.push_back(GenId::E(static_cast<int>(i)));
    for (int i = 0; i < rs.rank(); ++i) basis.push_back(GenId::H(i));
    rep.dimension = static_cast<int>(basis.size());
    std::map<GenId, int> pos;
    for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<int>(i);

    for (GenId g : gens) {
        RatMatrix m = zeros(rep.dimension);
        for (size_t j = 0; j < basis.size(); ++j) {
            LiePoly image = bracket(LiePoly::basis(g), LiePoly::basis(basis[j]), sc);
            for (const auto& [gb, p] : image.coefficients())
                m[pos.at(gb)][j] += p.constant_value();
        }
        rep.matrices[g] = m;
    }
    // Lowest-weight vector: the root space of minus the highest root.
    rep.extreme_vector.assign(rep.dimension, Rational(0));
    rep.extreme_vector[pos.at(GenId::E(rs.root_index(-rs.highest_root())))] = 1;
    rep.weight.clear();
    for (int k = 0; k < rs.rank(); ++k)
        rep.weight.push_back(-rs.pairing(rs.highest_root(), k));
    return rep;
}

}  // namespace csreal

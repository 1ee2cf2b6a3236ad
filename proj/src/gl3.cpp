#include "csreal/gl3.hpp"

#include "csreal/render.hpp"

#include <stdexcept>

namespace csreal {

Gl3 Gl3::basis(int i, int j) {
    Gl3 x;
    x.c[i][j] = Polynomial(1);
    return x;
}

bool Gl3::is_zero() const {
    for (const auto& row : c)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

Gl3& Gl3::operator+=(const Gl3& o) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c[i][j] += o.c[i][j];
    return *this;
}

Gl3 operator*(const Polynomial& p, const Gl3& x) {
    Gl3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.c[i][j] = p * x.c[i][j];
    return r;
}

Gl3 gl3_bracket(const Gl3& a, const Gl3& b) {
    // [C_ij, C_kl] = d_jk C_il - d_il C_kj, extended bilinearly.
    Gl3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (a.c[i][j].is_zero()) continue;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    if (b.c[k][l].is_zero()) continue;
                    Polynomial p = a.c[i][j] * b.c[k][l];
                    if (j == k) r.c[i][l] += p;
                    if (i == l) r.c[k][j] -= p;
                }
        }
    return r;
}

Gl3 gl3_ad_exp(const Gl3& a, const Gl3& x) {
    Gl3 sum = x, power = x;
    for (int k = 1; !power.is_zero(); ++k) {
        if (k > 9) throw std::runtime_error("gl3 adjoint exponential does not terminate");
        power = Polynomial(Rational(1, k)) * gl3_bracket(a, power);
        sum += power;
    }
    return sum;
}

ProductOrdering su3_standard_ordering() {
    // coord indices: 0 = z12, 1 = z13, 2 = z23 (0-based matrix slots).
    return {{{2, 1, 2}}, {{0, 0, 1}, {1, 0, 2}}};
}

namespace {

Gl3 group_element(const std::vector<ProductFactor>& group) {
    Gl3 a;
    for (const ProductFactor& f : group)
        a += Polynomial::variable(zvar(f.coord)) * Gl3::basis(f.row, f.col);
    return a;
}

}  // namespace

DiffOp realize_product(const ProductOrdering& ordering, const Gl3& x) {
    // Commutativity within each group, so that d_c exp(A) = C_c exp(A).
    for (const auto& group : ordering)
        for (const ProductFactor& f : group)
            for (const ProductFactor& g : group)
                if (!gl3_bracket(Gl3::basis(f.row, f.col), Gl3::basis(g.row, g.col)).is_zero())
                    throw std::invalid_argument("generators within an ordering group must commute");

    // Y = Ad(E) x with E the left-to-right product: apply the rightmost
    // group's adjoint first.
    Gl3 y = x;
    for (auto it = ordering.rbegin(); it != ordering.rend(); ++it)
        y = gl3_ad_exp(group_element(*it), y);

    // M_c = Ad(prefix of earlier groups)(C_c) satisfies d_c E = M_c E.
    std::vector<std::pair<int, Gl3>> ms;
    std::vector<Gl3> prefix_groups;
    for (const auto& group : ordering) {
        for (const ProductFactor& f : group) {
            Gl3 m = Gl3::basis(f.row, f.col);
            for (auto it = prefix_groups.rbegin(); it != prefix_groups.rend(); ++it)
                m = gl3_ad_exp(*it, m);
            ms.emplace_back(f.coord, m);
        }
        prefix_groups.push_back(group_element(group));
    }

    // Residual to be reduced: lambda_c are chosen so that
    // y - sum lambda_c M_c has no raising component.
    Gl3 r = y;

    // Greedy triangular elimination: repeatedly find a coordinate whose M has
    // a constant coefficient on some raising generator carried by no other
    // remaining M.
    DiffOp op;
    std::vector<bool> used(ms.size(), false);
    for (size_t solved = 0; solved < ms.size(); ++solved) {
        bool progress = false;
        for (size_t a = 0; a < ms.size() && !progress; ++a) {
            if (used[a]) continue;
            for (int i = 0; i < 3 && !progress; ++i)
                for (int j = i + 1; j < 3 && !progress; ++j) {
                    const Polynomial& pivot = ms[a].second.c[i][j];
                    if (pivot.is_zero() || !pivot.is_constant()) continue;
                    bool unique = true;
                    for (size_t b = 0; b < ms.size(); ++b)
                        if (b != a && !used[b] && !ms[b].second.c[i][j].is_zero()) unique = false;
                    if (!unique) continue;
                    Rational kappa = pivot.constant_value();
                    Polynomial lambda = (1 / kappa) * r.c[i][j];
                    r += (Rational(-1) / kappa * r.c[i][j]) * ms[a].second;
                    op.add_derivative(ms[a].first, lambda);
                    used[a] = true;
                    progress = true;
                }
        }
        if (!progress) throw std::logic_error("ordering does not admit a triangular solve");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!r.c[i][j].is_zero())
                throw std::logic_error("ordering does not span the raising directions");

    // Remaining part acts through the bra on the maximal-weight vector:
    // C_ii -> w_i, lowering C_ij (i > j) pair with raising annihilators.
    for (int i = 0; i < 3; ++i)
        op.add_scalar(r.c[i][i] * Polynomial::variable(jvar(i)));
    return op;
}

std::map<std::pair<int, int>, DiffOp> su3_operator_table() {
    std::map<std::pair<int, int>, DiffOp> table;
    ProductOrdering ordering = su3_standard_ordering();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            table[{i, j}] = realize_product(ordering, Gl3::basis(i, j));
    return table;
}

VerificationReport gl3_bracket_check(const std::map<std::pair<int, int>, DiffOp>& table) {
    VerificationReport report;
    for (const auto& [ij, da] : table) {
        for (const auto& [kl, db] : table) {
            Gl3 br = gl3_bracket(Gl3::basis(ij.first, ij.second),
                                 Gl3::basis(kl.first, kl.second));
            DiffOp rhs;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (!br.c[i][j].is_zero())
                        rhs += br.c[i][j].constant_value() * table.at({i, j});
            DiffOp residual = diffop_commutator(da, db) - rhs;
            CheckEntry e;
            e.name = "gl3(C" + std::to_string(ij.first + 1) + std::to_string(ij.second + 1) +
                     ",C" + std::to_string(kl.first + 1) + std::to_string(kl.second + 1) + ")";
            e.pass = residual.is_zero();
            if (!e.pass) e.detail = render(residual, gl3_namer());
            report.checks.push_back(std::move(e));
        }
    }
    return report;
}

VarNamer gl3_namer() {
    return [](Var v) -> std::string {
        static const char* zname[3] = {"z12", "z13", "z23"};
        switch (v.kind) {
            case VarKind::Z:
                return zname[v.index];
            case VarKind::ZBar:
                return std::string("zbar") + (zname[v.index] + 1);
            case VarKind::J:
                return "w" + std::to_string(v.index + 1);
        }
        return "?";
    };
}

Polynomial su3_kernel(int j1, int j2) {
    if (j1 < 0 || j2 < 0)
        throw std::invalid_argument("su3_kernel expands integer powers: j1, j2 >= 0");
    Polynomial z12 = Polynomial::variable(zvar(0)), zb12 = Polynomial::variable(zbarvar(0));
    Polynomial z13 = Polynomial::variable(zvar(1)), zb13 = Polynomial::variable(zbarvar(1));
    Polynomial z23 = Polynomial::variable(zvar(2)), zb23 = Polynomial::variable(zbarvar(2));
    Polynomial d1 = Polynomial(1) + z12 * zb12 + z13 * zb13;
    Polynomial d2 =
        d1 * (Polynomial(1) + z23 * zb23) - (z12 + z13 * zb23) * (zb12 + zb13 * z23);
    return d1.pow(static_cast<unsigned>(j1)) * d2.pow(static_cast<unsigned>(j2));
}

std::map<Var, Polynomial> su3_zeta_to_z() {
    // Reads a polynomial in (z12, z13, z23) as a function of zeta by
    // substituting z = z(zeta), with zeta living in the same variable slots.
    Polynomial z12 = Polynomial::variable(zvar(0));
    Polynomial z23 = Polynomial::variable(zvar(2));
    return {{zvar(1), Polynomial::variable(zvar(1)) + Rational(1, 2) * (z12 * z23)}};
}

std::map<Var, Polynomial> su3_z_to_zeta() {
    Polynomial z12 = Polynomial::variable(zvar(0));
    Polynomial z23 = Polynomial::variable(zvar(2));
    return {{zvar(1), Polynomial::variable(zvar(1)) - Rational(1, 2) * (z12 * z23)}};
}

}  // namespace csreal

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csreal/realization.hpp"

using namespace csreal;

namespace {

struct Setup {
    RootSystem rs;
    StructureConstants sc;
    ParabolicChoice pc;
    OrbitContext ctx;

    explicit Setup(const std::string& type, std::set<int> excluded = {},
                   std::optional<std::vector<Rational>> weight = std::nullopt)
        : rs(LieType::parse(type)),
          sc(rs),
          pc(partition(rs, excluded)),
          ctx(rs, pc, sc, std::move(weight)) {}
};

}  // namespace

TEST_CASE("sl(2) closed forms, symbolic weight") {
    Setup s("A1");
    Polynomial z = Polynomial::variable(zvar(0));
    Polynomial j1 = Polynomial::variable(jvar(0));
    Root a1{{1}};

    DiffOp raise = realize_raising(s.ctx, a1);
    CHECK(raise.scalar().is_zero());
    CHECK(raise.derivative_coeff(0) == Polynomial(1));

    DiffOp cartan = realize_cartan(s.ctx, 0);
    CHECK(cartan.scalar() == j1);
    CHECK(cartan.derivative_coeff(0) == Rational(2) * z);

    DiffOp lower = realize_lowering_simple(s.ctx, -a1);
    CHECK(lower.scalar() == -(j1 * z));
    CHECK(lower.derivative_coeff(0) == -(z * z));
}

TEST_CASE("sl(2) general route agrees and acts correctly on monomials") {
    Setup s("A1", {}, std::vector<Rational>{-2});  // spin 1: j = 1, j1 = -2j
    Polynomial z = Polynomial::variable(zvar(0));
    DiffOp lower = realize_general(s.ctx, GenId::E(s.rs.root_index(Root{{-1}})));
    // D_{J-} with j1 = -2: 2z - z^2 d.
    CHECK(lower.scalar() == Rational(2) * z);
    CHECK(lower.derivative_coeff(0) == -(z * z));
}

TEST_CASE("closed forms equal the adjoint-series route on Borel orbits") {
    for (const std::string& t : {"A1", "A2", "B2", "G2"}) {
        CAPTURE(t);
        Setup s(t);
        for (int i = 0; i < s.rs.rank(); ++i)
            CHECK(realize_cartan(s.ctx, i) == realize_general(s.ctx, GenId::H(i)));
        for (const Root& a : s.ctx.delta_plus())
            CHECK(realize_raising(s.ctx, a) ==
                  realize_general(s.ctx, GenId::E(s.rs.root_index(a))));
        for (const Root& a : s.rs.simple_roots())
            CHECK(realize_lowering_simple(s.ctx, -a) ==
                  realize_general(s.ctx, GenId::E(s.rs.root_index(-a))));
    }
}

TEST_CASE("projective-plane parabolic of A2: abelian nilradical, plain derivatives") {
    Setup s("A2", {1});
    CHECK(s.ctx.delta_plus().size() == 2);
    for (const Root& a : s.ctx.delta_plus()) {
        DiffOp d = realize_raising(s.ctx, a);
        CHECK(d.scalar().is_zero());
        CHECK(d.derivatives().size() == 1);
        CHECK(d.derivative_coeff(s.ctx.zindex(a)) == Polynomial(1));
    }
}

TEST_CASE("orthogonal closed form on the Levi factor of A2, weight (3, 0)") {
    Setup s("A2", {1}, std::vector<Rational>{3, 0});
    Root a2{{0, 1}};
    CHECK(s.ctx.tag(a2) == RootTag::DeltaZero);
    CHECK(s.ctx.weight_pairing(a2).is_zero());
    CHECK(realize_orthogonal(s.ctx, a2) ==
          realize_general(s.ctx, GenId::E(s.rs.root_index(a2))));
    CHECK(realize_orthogonal(s.ctx, -a2) ==
          realize_general(s.ctx, GenId::E(s.rs.root_index(-a2))));
}

TEST_CASE("orthogonal closed form rejects non-orthogonal weights") {
    Setup s("A2", {1});  // symbolic weight: (a2, j) = j2 is not zero
    CHECK_THROWS_AS(realize_orthogonal(s.ctx, Root{{0, 1}}), std::invalid_argument);
}

TEST_CASE("raising polynomials are homogeneous of degree k and truncate at nu") {
    for (const std::string& t : {"A2", "B2", "G2", "B3"}) {
        CAPTURE(t);
        Setup s(t);
        for (const Root& a : s.ctx.delta_plus()) {
            auto polys = raising_polynomials(s.ctx, a);
            for (const auto& [key, p] : polys) {
                auto [k, tau] = key;
                CHECK(p.is_homogeneous(VarKind::Z, k));
                CHECK(k <= s.ctx.nu() + 1);
            }
        }
    }
}

TEST_CASE("closed-form operators obey the polynomial degree bounds") {
    for (const std::string& t : {"A2", "B2", "G2"}) {
        CAPTURE(t);
        Setup s(t);
        // Raising: degree <= nu.  Cartan: degree 1.  Simple lowering: the
        // quadratic prefactor over the k <= nu chains gives degree <= nu + 2
        // (already sharp for sl(2): -z^2 d with nu = 0).
        for (const Root& a : s.ctx.delta_plus()) {
            DiffOp raise = realize_raising(s.ctx, a);
            for (const auto& [zi, q] : raise.derivatives())
                CHECK(q.degree(VarKind::Z) <= s.ctx.nu());
        }
        for (int i = 0; i < s.rs.rank(); ++i) {
            DiffOp cartan = realize_cartan(s.ctx, i);
            for (const auto& [zi, q] : cartan.derivatives())
                CHECK(q.degree(VarKind::Z) == 1);
        }
        for (const Root& a : s.rs.simple_roots()) {
            DiffOp low = realize_lowering_simple(s.ctx, -a);
            for (const auto& [zi, q] : low.derivatives())
                CHECK(q.degree(VarKind::Z) <= s.ctx.nu() + 2);
            CHECK(low.scalar().degree(VarKind::J) <= 1);
        }
    }
}

TEST_CASE("Fock convention is the adjoint swap of the formal one") {
    Setup s("A2");
    Realization formal = realize_all(s.ctx, Convention::Formal);
    Realization fock = realize_all(s.ctx, Convention::Fock);
    for (const auto& [g, op] : fock.operators)
        CHECK(op == formal.operators.at(adjoint_generator(s.rs, g)));
}

TEST_CASE("argument validation") {
    Setup s("A2");
    CHECK_THROWS_AS(realize_raising(s.ctx, Root{{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(realize_lowering_simple(s.ctx, Root{{-1, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(realize_lowering_simple(s.ctx, Root{{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(realize_cartan(s.ctx, std::vector<Rational>{1}), std::invalid_argument);
    CHECK_THROWS_AS(OrbitContext(s.rs, s.pc, s.sc, std::vector<Rational>{1}),
                    std::invalid_argument);
}

TEST_CASE("weight pairing uses coroot coordinates (long vs short roots in B2)") {
    Setup s("B2");
    // In B2 (a1 long, a2 short): theta = a1 + 2 a2 has coroot theta^vee with
    // integer simple-coroot coordinates; the pairing must be integral in j.
    Root theta = s.rs.highest_root();
    Polynomial p = s.ctx.weight_pairing(theta);
    for (const auto& [m, c] : p.terms()) CHECK(denominator(c) == 1);
}

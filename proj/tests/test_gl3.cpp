#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csreal/gl3.hpp"

using namespace csreal;

namespace {

const Polynomial z12 = Polynomial::variable(zvar(0));
const Polynomial z13 = Polynomial::variable(zvar(1));
const Polynomial z23 = Polynomial::variable(zvar(2));
const Polynomial w1 = Polynomial::variable(jvar(0));
const Polynomial w2 = Polynomial::variable(jvar(1));
const Polynomial w3 = Polynomial::variable(jvar(2));

DiffOp op(Polynomial scalar, Polynomial d12, Polynomial d13, Polynomial d23) {
    DiffOp o(std::move(scalar));
    o.add_derivative(0, d12);
    o.add_derivative(1, d13);
    o.add_derivative(2, d23);
    return o;
}

}  // namespace

TEST_CASE("gl(3) bracket relations") {
    // [C12, C21] = C11 - C22; [C12, C23] = C13; [C11, C12] = C12.
    CHECK(gl3_bracket(Gl3::basis(0, 1), Gl3::basis(1, 0)) ==
          Gl3::basis(0, 0) + Polynomial(-1) * Gl3::basis(1, 1));
    CHECK(gl3_bracket(Gl3::basis(0, 1), Gl3::basis(1, 2)) == Gl3::basis(0, 2));
    CHECK(gl3_bracket(Gl3::basis(0, 0), Gl3::basis(0, 1)) == Gl3::basis(0, 1));
    CHECK(gl3_bracket(Gl3::basis(0, 2), Gl3::basis(0, 1)).is_zero());

    // Jacobi on all 9 x 9 x 9 basis triples.
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            for (int c = 0; c < 9; ++c) {
                Gl3 X = Gl3::basis(a / 3, a % 3), Y = Gl3::basis(b / 3, b % 3),
                    Z = Gl3::basis(c / 3, c % 3);
                Gl3 j = gl3_bracket(X, gl3_bracket(Y, Z)) + gl3_bracket(Y, gl3_bracket(Z, X)) +
                        gl3_bracket(Z, gl3_bracket(X, Y));
                CHECK(j.is_zero());
            }
}

TEST_CASE("the nine product-coordinate operators") {
    auto table = su3_operator_table();

    CHECK(table.at({0, 0}) == op(w1, -z12, -z13, Polynomial()));
    CHECK(table.at({0, 1}) == op(Polynomial(), Polynomial(1), Polynomial(), Polynomial()));
    CHECK(table.at({0, 2}) == op(Polynomial(), Polynomial(), Polynomial(1), Polynomial()));
    CHECK(table.at({1, 0}) ==
          op((w1 - w2) * z12, -(z12 * z12), -(z12 * z13), z12 * z23 - z13));
    CHECK(table.at({1, 1}) == op(w2, z12, Polynomial(), -z23));
    CHECK(table.at({1, 2}) == op(Polynomial(), Polynomial(), z12, Polynomial(1)));
    CHECK(table.at({2, 0}) ==
          op((w1 - w3) * z13 - (w2 - w3) * (z12 * z23), -(z12 * z13), -(z13 * z13),
             (z12 * z23 - z13) * z23));
    CHECK(table.at({2, 1}) == op((w2 - w3) * z23, z13, Polynomial(), -(z23 * z23)));
    CHECK(table.at({2, 2}) == op(w3, Polynomial(), z13, z23));
}

TEST_CASE("trace identity: sum of the diagonal operators is the total weight") {
    auto table = su3_operator_table();
    DiffOp sum = table.at({0, 0}) + table.at({1, 1}) + table.at({2, 2});
    CHECK(sum.derivatives().empty());
    CHECK(sum.scalar() == w1 + w2 + w3);
}

TEST_CASE("the table is a direct homomorphism for the gl(3) relations") {
    auto table = su3_operator_table();
    VerificationReport r = gl3_bracket_check(table);
    CHECK(r.checks.size() == 81);
    for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("ordering groups must commute") {
    // C12 and C21 do not commute; a group holding both is rejected.
    ProductOrdering bad = {{{0, 0, 1}, {2, 1, 0}}};
    CHECK_THROWS_AS(realize_product(bad, Gl3::basis(0, 1)), std::invalid_argument);
}

TEST_CASE("an ordering missing a direction cannot realize every generator") {
    // Only z12 C12 and z13 C13: Ad(E) C21 produces a C23 component with no
    // matching M.
    ProductOrdering partial = {{{0, 0, 1}, {1, 0, 2}}};
    CHECK_THROWS_AS(realize_product(partial, Gl3::basis(1, 0)), std::logic_error);
}

TEST_CASE("coordinate change between the zeta and z charts") {
    auto fwd = su3_zeta_to_z();
    auto inv = su3_z_to_zeta();
    Polynomial p = z13 * z13 + z12 * z13 * z23 + z23;
    CHECK(p.substitute(fwd).substitute(inv) == p);
    CHECK(p.substitute(inv).substitute(fwd) == p);
    // z13 reads zeta13 + (1/2) zeta12 zeta23 in the zeta chart.
    CHECK(z13.substitute(fwd) == z13 + Rational(1, 2) * (z12 * z23));
}

TEST_CASE("reproducing kernel") {
    Polynomial zb12 = Polynomial::variable(zbarvar(0));
    Polynomial zb13 = Polynomial::variable(zbarvar(1));
    Polynomial zb23 = Polynomial::variable(zbarvar(2));
    Polynomial d1 = Polynomial(1) + z12 * zb12 + z13 * zb13;
    Polynomial d2 = d1 * (Polynomial(1) + z23 * zb23) - (z12 + z13 * zb23) * (zb12 + zb13 * z23);

    CHECK(su3_kernel(1, 0) == d1);
    CHECK(su3_kernel(0, 1) == d2);
    CHECK(su3_kernel(2, 1) == d1 * d1 * d2);
    CHECK(su3_kernel(0, 0) == Polynomial(1));
    CHECK_THROWS_AS(su3_kernel(-1, 0), std::invalid_argument);

    // z23 = 0 slice: Delta_2 collapses onto the projective-plane kernel
    // 1 + |z13|^2.
    std::map<Var, Polynomial> slice{{zvar(2), Polynomial()}, {zbarvar(2), Polynomial()}};
    Polynomial d2_sliced = d2.substitute(slice);
    CHECK(d2_sliced == Polynomial(1) + z13 * zb13);
}

TEST_CASE("su(2) embedded check: single-group ordering reproduces sl(2) forms") {
    // Ordering with just z12 C12 realizes the C11, C12, C22 block exactly as
    // the one-variable lowest... highest-weight sl(2) operators.
    ProductOrdering single = {{{0, 0, 1}}};
    DiffOp d12 = realize_product(single, Gl3::basis(0, 1));
    CHECK(d12 == [] {
        DiffOp o;
        o.add_derivative(0, Polynomial(1));
        return o;
    }());
    DiffOp d21 = realize_product(single, Gl3::basis(1, 0));
    DiffOp expect((w1 - w2) * z12);
    expect.add_derivative(0, -(z12 * z12));
    CHECK(d21 == expect);
}

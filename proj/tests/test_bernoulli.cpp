#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csreal/bernoulli.hpp"

using namespace csreal;

TEST_CASE("leading coefficients of x/(1 - e^{-x}) and its companion") {
    CoeffTable t = coeff_table(8);
    CHECK(t.c[0] == 1);
    CHECK(t.c[1] == Rational(1, 2));
    CHECK(t.c[2] == Rational(1, 12));
    CHECK(t.c[3] == 0);
    CHECK(t.c[4] == Rational(-1, 720));
    CHECK(t.c[5] == 0);
    CHECK(t.c[6] == Rational(1, 30240));
    CHECK(t.d[0] == Rational(1, 2));
    CHECK(t.d[1] == Rational(-1, 12));
    CHECK(t.d[2] == 0);
    CHECK(t.d[3] == Rational(1, 720));
}

TEST_CASE("odd coefficients vanish beyond c1") {
    CoeffTable t = coeff_table(21);
    for (size_t k = 3; k < t.c.size(); k += 2) CHECK(t.c[k] == 0);
}

TEST_CASE("c_{2k} carries the Bernoulli numbers: c_2k = (-1)^{k-1} B_k/(2k)!") {
    CoeffTable t = coeff_table(8);
    auto bernoulli_from = [&](int k) {
        Rational b = (k % 2 == 1 ? 1 : -1) * t.c[2 * k] * Rational(factorial(2 * k));
        return b;
    };
    CHECK(bernoulli_from(1) == Rational(1, 6));    // B1
    CHECK(bernoulli_from(2) == Rational(1, 30));   // B2
    CHECK(bernoulli_from(3) == Rational(1, 42));   // B3
    // B4 from the recursion; fixed value of the series, independent of any
    // printed table.
    CHECK(bernoulli_from(4) == Rational(1, 30));
}

TEST_CASE("generating-function identity: (sum c_k x^k)(1 - e^{-x}) = x to order n") {
    const int n = 12;
    CoeffTable t = coeff_table(n);
    // (1 - e^{-x}) has coefficients -(-1)^m/m! for m >= 1.
    std::vector<Rational> g(n + 1, Rational(0));
    for (int m = 1; m <= n; ++m) g[m] = Rational(m % 2 == 1 ? 1 : -1, factorial(m));
    for (int order = 0; order <= n; ++order) {
        Rational prod = 0;
        for (int k = 0; k <= order; ++k) prod += t.c[k] * g[order - k];
        CHECK(prod == (order == 1 ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("d and c recursions stay consistent out to order 40") {
    // coeff_table cross-checks the two recursions internally and throws on
    // any mismatch.
    CHECK_NOTHROW(coeff_table(40));
}

TEST_CASE("invalid length") {
    CHECK_THROWS_AS(coeff_table(0), std::invalid_argument);
    CHECK_THROWS_AS(coeff_table(-3), std::invalid_argument);
}

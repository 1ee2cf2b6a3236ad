#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csreal/roots.hpp"

using namespace csreal;

namespace {
int expected_count(Family f, int l) {
    switch (f) {
        case Family::A: return l * (l + 1);
        case Family::B:
        case Family::C: return 2 * l * l;
        case Family::D: return 2 * l * (l - 1);
        case Family::G: return 12;
        case Family::F: return 48;
        case Family::E: return l == 6 ? 72 : l == 7 ? 126 : 240;
    }
    return -1;
}
}  // namespace

TEST_CASE("type parsing and rank validation") {
    CHECK(LieType::parse("A1").rank == 1);
    CHECK(LieType::parse("G2").name() == "G2");
    CHECK(LieType::parse("E8").rank == 8);
    CHECK_THROWS_AS(LieType::parse("E5"), std::invalid_argument);
    CHECK_THROWS_AS(LieType::parse("F3"), std::invalid_argument);
    CHECK_THROWS_AS(LieType::parse("G3"), std::invalid_argument);
    CHECK_THROWS_AS(LieType::parse("D2"), std::invalid_argument);
    CHECK_THROWS_AS(LieType::parse("H2"), std::invalid_argument);
    CHECK_THROWS_AS(LieType::parse("A0"), std::invalid_argument);
    CHECK_THROWS_AS(LieType::parse(""), std::invalid_argument);
}

TEST_CASE("root counts for every family") {
    const std::vector<std::string> types = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
                                            "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4",
                                            "D5", "G2", "F4", "E6", "E7", "E8"};
    for (const std::string& t : types) {
        CAPTURE(t);
        LieType type = LieType::parse(t);
        RootSystem rs(type);
        CHECK(static_cast<int>(rs.all_roots().size()) ==
              expected_count(type.family, type.rank));
        CHECK(rs.all_roots().size() == 2 * rs.positive_roots().size());
    }
}

TEST_CASE("A2 positive roots") {
    RootSystem rs(LieType::parse("A2"));
    std::vector<Root> expect = {{{1, 0}}, {{0, 1}}, {{1, 1}}};
    CHECK(rs.positive_roots() == expect);
    CHECK(rs.highest_root() == Root{{1, 1}});
}

TEST_CASE("G2 positive roots and highest root") {
    RootSystem rs(LieType::parse("G2"));
    CHECK(rs.positive_roots().size() == 6);
    // With a1 short: positive roots a1, a2, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2.
    CHECK(rs.highest_root() == Root{{3, 2}});
    CHECK(rs.is_root(Root{{3, 1}}));
    CHECK_FALSE(rs.is_root(Root{{1, 2}}));
}

TEST_CASE("roots are never mixed-sign and closure is symmetric") {
    for (const std::string& t : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
        CAPTURE(t);
        RootSystem rs(LieType::parse(t));
        for (const Root& r : rs.all_roots()) {
            bool has_pos = false, has_neg = false;
            for (int c : r.coords) {
                has_pos |= c > 0;
                has_neg |= c < 0;
            }
            CHECK_FALSE((has_pos && has_neg));
            CHECK(rs.is_root(-r));
        }
    }
}

TEST_CASE("highest root dominates every positive root") {
    for (const std::string& t : {"A4", "B4", "C4", "D4", "G2", "F4", "E6"}) {
        CAPTURE(t);
        RootSystem rs(LieType::parse(t));
        const Root& theta = rs.highest_root();
        for (const Root& r : rs.positive_roots())
            for (size_t i = 0; i < r.coords.size(); ++i)
                CHECK(r.coords[i] <= theta.coords[i]);
    }
}

TEST_CASE("nu table") {
    auto nu = [](const char* t) { return nu_degree(RootSystem(LieType::parse(t))); };
    CHECK(nu("A1") == 0);
    CHECK(nu("A2") == 1);
    CHECK(nu("A5") == 4);
    CHECK(nu("B2") == 2);
    CHECK(nu("B4") == 6);
    CHECK(nu("C3") == 4);
    CHECK(nu("D4") == 4);
    CHECK(nu("G2") == 4);
    CHECK(nu("F4") == 10);
    CHECK(nu("E6") == 10);
    CHECK(nu("E7") == 16);
    CHECK(nu("E8") == 28);
}

TEST_CASE("pairing against Cartan matrix rows") {
    RootSystem rs(LieType::parse("G2"));
    // pairing(simple_j, i) = A[j][i] by definition.
    const auto& A = rs.cartan_matrix();
    for (int jj = 0; jj < 2; ++jj)
        for (int i = 0; i < 2; ++i)
            CHECK(rs.pairing(rs.simple_roots()[jj], i) == A[jj][i]);
    // The highest root is dominant.
    for (int i = 0; i < 2; ++i) CHECK(rs.pairing(rs.highest_root(), i) >= 0);
}

TEST_CASE("inner form: lengths and integrality of Cartan numbers") {
    for (const std::string& t : {"A2", "B3", "C3", "G2", "F4"}) {
        CAPTURE(t);
        RootSystem rs(LieType::parse(t));
        CHECK(rs.inner(rs.simple_roots()[0], rs.simple_roots()[0]) == 2);
        for (const Root& a : rs.all_roots()) {
            for (int i = 0; i < rs.rank(); ++i) {
                // 2(a, a_i)/(a_i, a_i) must equal the integer pairing.
                Rational lhs = 2 * rs.inner(a, rs.simple_roots()[i]) /
                               rs.inner(rs.simple_roots()[i], rs.simple_roots()[i]);
                CHECK(lhs == rs.pairing(a, i));
            }
            // Coroot coordinates reproduce the pairing with any root.
            auto cv = rs.coroot_coords(a);
            for (const Root& b : rs.all_roots()) {
                Rational expect = 2 * rs.inner(b, a) / rs.inner(a, a);
                Rational got = 0;
                for (int i = 0; i < rs.rank(); ++i) got += Rational(cv[i]) * rs.pairing(b, i);
                CHECK(got == expect);
            }
        }
    }
}

TEST_CASE("render and parse roots") {
    RootSystem rs(LieType::parse("G2"));
    CHECK(rs.render_root(Root{{3, 2}}) == "3a1+2a2");
    CHECK(rs.render_root(Root{{1, 0}}) == "a1");
    CHECK(rs.render_root(Root{{-1, -1}}) == "-a1-a2");
    for (const Root& r : rs.all_roots()) CHECK(rs.parse_root(rs.render_root(r)) == r);
    CHECK_THROWS_AS(rs.parse_root("a1+a3"), std::invalid_argument);
    CHECK_THROWS_AS(rs.parse_root("2a1"), std::invalid_argument);  // not a root in G2
    CHECK_THROWS_AS(rs.parse_root(""), std::invalid_argument);
}

TEST_CASE("parabolic partition") {
    RootSystem rs(LieType::parse("A2"));
    SUBCASE("Borel: everything split by sign") {
        ParabolicChoice pc = partition(rs, {});
        for (size_t i = 0; i < rs.all_roots().size(); ++i)
            CHECK(pc.tags[i] == (rs.all_roots()[i].is_positive() ? RootTag::DeltaPlus
                                                                 : RootTag::DeltaMinus));
    }
    SUBCASE("Phi = {a2}: a2 and -a2 move to Delta_0") {
        ParabolicChoice pc = partition(rs, {1});
        CHECK(pc.tags[rs.root_index(Root{{0, 1}})] == RootTag::DeltaZero);
        CHECK(pc.tags[rs.root_index(Root{{0, -1}})] == RootTag::DeltaZero);
        CHECK(pc.tags[rs.root_index(Root{{1, 0}})] == RootTag::DeltaPlus);
        CHECK(pc.tags[rs.root_index(Root{{1, 1}})] == RootTag::DeltaPlus);
        CHECK(pc.tags[rs.root_index(Root{{-1, -1}})] == RootTag::DeltaMinus);
    }
}

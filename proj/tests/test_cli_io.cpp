#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wittlab/io.hpp"
#include "wittlab/random.hpp"

using namespace wittlab;

namespace {

std::vector<RingDescriptor> io_rings() {
    return {RingDescriptor::integers(), RingDescriptor::rationals(),
            RingDescriptor::integers_mod(BigInt(12)), RingDescriptor::prime_field(BigInt(7)),
            RingDescriptor::cyclotomic_field(5)};
}

}  // namespace

TEST_CASE("ring descriptor grammar round trip") {
    for (const char* text : {"Z", "Q", "Z/12", "Fp/7", "Qzeta/5", "Frac(Z)"}) {
        auto ring = RingDescriptor::parse(text);
        CHECK(ring.to_string() == text);
        CHECK(RingDescriptor::parse(ring.to_string()) == ring);
    }
    CHECK_THROWS_AS(RingDescriptor::parse("GF(8)"), DomainError);
}

TEST_CASE("element literals round trip in every ring") {
    Rng rng(41);
    for (const auto& R : io_rings()) {
        for (int c = 0; c < 80; ++c) {
            auto v = random_element(R, rng, 8);
            CHECK(R.eq(parse_element(R, R.to_string(v)), v));
        }
    }
    auto C3 = RingDescriptor::cyclotomic_field(3);
    CHECK(C3.eq(parse_element(C3, "1/2 - 2*z"),
                C3.sub(C3.from_rational(Rational::from_string("1/2")),
                       C3.mul(C3.from_int(2), C3.zeta()))));
}

TEST_CASE("polynomial text round trip") {
    Rng rng(42);
    for (const auto& R : io_rings()) {
        for (int c = 0; c < 60; ++c) {
            std::vector<RingElement> coeffs;
            unsigned deg = static_cast<unsigned>(rng.int_in(0, 6));
            for (unsigned i = 0; i <= deg; ++i) coeffs.push_back(random_element(R, rng, 6));
            Polynomial f(R, std::move(coeffs));
            CHECK(parse_polynomial(R, format_polynomial(f)).equals(f));
        }
    }
    auto Z = RingDescriptor::integers();
    CHECK(parse_polynomial(Z, "1 - 2t + 3t^2").equals(Polynomial::from_ints(Z, {1, -2, 3})));
    CHECK(parse_polynomial(Z, "0").is_zero());
    CHECK(parse_polynomial(Z, "-t^3").equals(Polynomial::from_ints(Z, {0, 0, 0, -1})));
    CHECK_THROWS_AS(parse_polynomial(Z, "1 + + t"), DomainError);
    CHECK_THROWS_AS(parse_polynomial(Z, ""), DomainError);
}

TEST_CASE("witt vector text and json round trip") {
    Rng rng(43);
    for (const auto& R : io_rings()) {
        for (int c = 0; c < 40; ++c) {
            auto u = random_witt(R, static_cast<unsigned>(rng.int_in(1, 6)), rng, 6);
            CHECK(parse_witt(R, format_witt(u), u.depth).equals(u));
            CHECK(witt_from_json(witt_to_json(u)).equals(u));
            // text and json encode the same value
            CHECK(witt_from_json(witt_to_json(u)).equals(parse_witt(R, format_witt(u), u.depth)));
        }
    }
    auto Z = RingDescriptor::integers();
    CHECK_THROWS_AS(parse_witt(Z, "2 - t", 3), DomainError);
    CHECK_THROWS_AS(parse_witt(Z, "1 - t^9", 3), DomainError);
    auto j = witt_to_json(witt_one(Z, 2));
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["tail"][0] == "-1");
}

TEST_CASE("rational witt text and json round trip") {
    Rng rng(44);
    auto Z = RingDescriptor::integers();
    auto F7 = RingDescriptor::prime_field(BigInt(7));
    for (const auto& R : {Z, F7}) {
        for (int c = 0; c < 40; ++c) {
            auto u = random_wrat(R, 4, rng);
            CHECK(wr_equal(parse_wrat(R, format_wrat(u)), u));
            CHECK(wr_equal(wrat_from_json(wrat_to_json(u)), u));
        }
    }
    CHECK(format_wrat(parse_wrat(Z, "(1 - 2t)/(1 - 3t)")) == "(1 - 2t)/(1 - 3t)");
    CHECK(format_wrat(parse_wrat(Z, "1 - 5t")) == "1 - 5t");
}

TEST_CASE("ghost formatting") {
    auto Z = RingDescriptor::integers();
    auto g = ghost(teichmuller(Z.from_int(2), Z, 3));
    CHECK(format_ghost(g) == "(2, 4, 8)");
    auto j = ghost_to_json(g);
    CHECK(j["components"][2] == "8");
}

TEST_CASE("group descriptor grammar") {
    for (const char* text : {"trivial", "rank=2", "torsion=4,12", "rank=1;torsion=2,6"}) {
        auto g = parse_group(text);
        CHECK(format_group(g) == text);
    }
    CHECK(parse_group("6") == FgAbelianGroup(0, {6}));
    CHECK(parse_group("2,4") == FgAbelianGroup(0, {2, 4}));
    CHECK_THROWS_AS(parse_group("rank=1;bogus=3"), DomainError);
    CHECK_THROWS_AS(parse_group("torsion=6,4"), DomainError);
}

TEST_CASE("group ring json round trip") {
    Rng rng(45);
    for (const auto& g : {FgAbelianGroup(1, {}), FgAbelianGroup(0, {4}), FgAbelianGroup(2, {2, 6})}) {
        for (int c = 0; c < 40; ++c) {
            auto x = random_group_ring(g, rng);
            CHECK(group_ring_from_json(group_ring_to_json(x)) == x);
        }
    }
}

TEST_CASE("matrix json round trip") {
    auto m = IntegerMatrix::from_rows({{1, -2, 3}, {0, 5, -6}});
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
}

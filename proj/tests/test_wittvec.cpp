#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "wittlab/random.hpp"
#include "wittlab/witt.hpp"

using namespace wittlab;

namespace {
const auto Z = RingDescriptor::integers();
const auto Q = RingDescriptor::rationals();

TruncatedWittVector wv(const RingDescriptor& R, std::vector<int64_t> tail) {
    TruncatedWittVector u(R, static_cast<unsigned>(tail.size()));
    for (size_t i = 0; i < tail.size(); ++i) u.tail[i] = R.from_int(tail[i]);
    return u;
}
}  // namespace

TEST_CASE("zero and one") {
    auto zero = witt_zero(Z, 3);
    CHECK(zero.equals(wv(Z, {0, 0, 0})));
    CHECK(witt_one(Z, 3).equals(wv(Z, {-1, 0, 0})));
    Rng rng(5);
    for (int c = 0; c < 30; ++c) {
        auto u = random_witt(Z, 4, rng);
        CHECK(witt_add(witt_zero(Z, 4), u).equals(u));
    }
}

TEST_CASE("teichmuller lift") {
    CHECK(teichmuller(Z.from_int(0), Z, 3).equals(witt_zero(Z, 3)));
    CHECK(teichmuller(Z.from_int(2), Z, 2).equals(wv(Z, {-2, 0})));
    // ghost([a]) = (a, a^2, ..., a^N)
    Rng rng(6);
    for (int c = 0; c < 30; ++c) {
        int64_t a = rng.int_in(-9, 9);
        auto g = ghost(teichmuller(Z.from_int(a), Z, 5));
        int64_t p = 1;
        for (unsigned i = 0; i < 5; ++i) {
            p *= a;
            CHECK(Z.eq(g.components[i], Z.from_int(p)));
        }
    }
}

TEST_CASE("addition is the truncated series product") {
    CHECK(witt_add(wv(Z, {-2, 0}), wv(Z, {-3, 0})).equals(wv(Z, {-5, 6})));
    CHECK(witt_neg(witt_one(Z, 2)).equals(wv(Z, {1, 1})));
    auto Z6 = RingDescriptor::integers_mod(BigInt(6));
    Rng rng(7);
    for (int c = 0; c < 50; ++c) {
        auto u = random_witt(Z6, 6, rng);
        CHECK(witt_add(u, witt_neg(u)).equals(witt_zero(Z6, 6)));
    }
}

TEST_CASE("ghost recursion and examples") {
    CHECK(ghost(witt_zero(Z, 4)).equals(GhostVector(Z, 4)));
    auto g = ghost(wv(Z, {-2, 0, 0}));
    CHECK(Z.eq(g.components[0], Z.from_int(2)));
    CHECK(Z.eq(g.components[1], Z.from_int(4)));
    CHECK(Z.eq(g.components[2], Z.from_int(8)));
    // oracle: coefficients of -t f'/f as a power series
    Rng rng(8);
    for (int c = 0; c < 40; ++c) {
        auto u = random_witt(Q, 6, rng, 5);
        auto f = u.to_series();
        auto series = poly_mul_truncated(-(f.derivative()), series_inverse(f, 6), 5);
        auto gg = ghost(u);
        for (unsigned n = 1; n <= 6; ++n)
            CHECK(Q.eq(gg.components[n - 1], series.coeff(n - 1)));
    }
}

TEST_CASE("ghost is additive and the inverse round-trips over Q") {
    Rng rng(9);
    for (int c = 0; c < 60; ++c) {
        auto u = random_witt(Q, 7, rng, 5);
        auto v = random_witt(Q, 7, rng, 5);
        auto gs = ghost(witt_add(u, v));
        auto gu = ghost(u), gv = ghost(v);
        for (unsigned i = 0; i < 7; ++i)
            CHECK(Q.eq(gs.components[i], Q.add(gu.components[i], gv.components[i])));
        CHECK(ghost_inverse(ghost(u)).equals(u));
    }
    // ghost_inverse of a geometric vector is a Teichmueller lift
    GhostVector g(Q, 3);
    for (unsigned i = 0; i < 3; ++i) g.components[i] = Q.pow(Q.from_int(5), i + 1);
    CHECK(ghost_inverse(g).equals(teichmuller(Q.from_int(5), Q, 3)));
    CHECK(ghost_inverse(GhostVector(Q, 4)).equals(witt_zero(Q, 4)));
    CHECK_THROWS_AS(ghost_inverse(GhostVector(Z, 3)), DomainError);
}

TEST_CASE("universal polynomials: c_1, Teichmueller evaluation, integrality") {
    auto up = build_universal_polys(8);
    REQUIRE(up.mul_polys.size() == 8);
    // c_1 = -a_1 b_1
    CHECK(up.mul_polys[0].terms.size() == 1);
    CHECK(up.mul_polys[0].terms[0].second == BigInt(-1));
    // evaluating at Teichmueller tails reproduces the product rule
    Rng rng(10);
    for (int c = 0; c < 20; ++c) {
        auto x = random_element(Q, rng, 9);
        auto y = random_element(Q, rng, 9);
        auto prod = witt_mul(teichmuller(x, Q, 8), teichmuller(y, Q, 8));
        CHECK(prod.equals(teichmuller(Q.mul(x, y), Q, 8)));
    }
    CHECK(up.frob_polys.count(2) == 1);
    CHECK(up.frob_polys.at(2).size() == 4);
}

TEST_CASE("multiplication laws across rings") {
    CHECK(witt_mul(wv(Z, {-2, 0}), wv(Z, {-3, 0})).equals(wv(Z, {-6, 0})));
    auto Z12 = RingDescriptor::integers_mod(BigInt(12));
    Rng rng(11);
    for (int c = 0; c < 50; ++c) {
        auto u = random_witt(Z12, 6, rng);
        CHECK(witt_mul(u, witt_one(Z12, 6)).equals(u));
        CHECK(witt_mul(u, witt_zero(Z12, 6)).equals(witt_zero(Z12, 6)));
    }
}

TEST_CASE("ghost turns multiplication into componentwise product") {
    Rng rng(12);
    for (int c = 0; c < 40; ++c) {
        auto u = random_witt(Q, 6, rng, 5);
        auto v = random_witt(Q, 6, rng, 5);
        auto gp = ghost(witt_mul(u, v));
        auto gu = ghost(u), gv = ghost(v);
        for (unsigned i = 0; i < 6; ++i)
            CHECK(Q.eq(gp.components[i], Q.mul(gu.components[i], gv.components[i])));
    }
}

TEST_CASE("teichmuller is multiplicative but not additive") {
    Rng rng(13);
    for (const auto& R : {Z, Q, RingDescriptor::integers_mod(BigInt(12))}) {
        for (int c = 0; c < 30; ++c) {
            auto a = random_element(R, rng, 7);
            auto b = random_element(R, rng, 7);
            CHECK(witt_mul(teichmuller(a, R, 5), teichmuller(b, R, 5))
                      .equals(teichmuller(R.mul(a, b), R, 5)));
        }
    }
    auto one = witt_one(Z, 2);
    CHECK(!witt_add(one, one).equals(teichmuller(Z.from_int(2), Z, 2)));
}

TEST_CASE("frobenius: examples, composition, homomorphism") {
    Rng rng(14);
    // F_m[a] = [a^m]
    for (int c = 0; c < 20; ++c) {
        int64_t a = rng.int_in(-6, 6);
        CHECK(frobenius(3, teichmuller(Z.from_int(a), Z, 6))
                  .equals(teichmuller(Z.from_int(a * a * a), Z, 2)));
    }
    // F_1 = id
    auto u = random_witt(Z, 5, rng);
    CHECK(frobenius(1, u).equals(u));
    // F_2 F_3 = F_6 over Q at depth 12
    for (int c = 0; c < 20; ++c) {
        auto w = random_witt(Q, 12, rng, 4);
        CHECK(frobenius(2, frobenius(3, w)).equals(frobenius(6, w)));
    }
    // ring homomorphism over Z/12 via the universal route
    auto Z12 = RingDescriptor::integers_mod(BigInt(12));
    for (int c = 0; c < 25; ++c) {
        auto x = random_witt(Z12, 8, rng);
        auto y = random_witt(Z12, 8, rng);
        CHECK(frobenius(2, witt_add(x, y)).equals(witt_add(frobenius(2, x), frobenius(2, y))));
        CHECK(frobenius(2, witt_mul(x, y)).equals(witt_mul(frobenius(2, x), frobenius(2, y))));
    }
    CHECK_THROWS_AS(frobenius(7, random_witt(Z, 5, rng)), DomainError);
}

TEST_CASE("verschiebung substitution and ghost rule") {
    auto u = teichmuller(Z.from_int(3), Z, 4);
    CHECK(verschiebung(1, u).equals(u));
    CHECK(verschiebung(2, u).equals(wv(Z, {0, -3, 0, 0})));
    Rng rng(15);
    for (int c = 0; c < 30; ++c) {
        auto w = random_witt(Q, 12, rng, 4);
        unsigned m = static_cast<unsigned>(rng.int_in(2, 4));
        auto gw = ghost(w);
        auto gv = ghost(verschiebung(m, w));
        for (unsigned n = 1; n <= 12; ++n) {
            RingElement want =
                n % m == 0 ? Q.mul(Q.from_int(m), gw.components[n / m - 1]) : Q.zero();
            CHECK(Q.eq(gv.components[n - 1], want));
        }
        // F_m V_m = multiplication by the Witt integer m
        auto fv = frobenius(m, verschiebung(m, w));
        auto mw = witt_truncate(witt_mul(witt_scalar(m, witt_one(Q, 12)), w), 12 / m);
        CHECK(fv.equals(mw));
    }
}

TEST_CASE("mismatched operands are rejected") {
    CHECK_THROWS_AS(witt_add(witt_zero(Z, 3), witt_zero(Z, 4)), DomainError);
    CHECK_THROWS_AS(witt_add(witt_zero(Z, 3), witt_zero(Q, 3)), DomainError);
}

TEST_CASE("universal cache tolerates concurrent first use") {
    std::vector<std::thread> threads;
    std::vector<TruncatedWittVector> results(4, witt_zero(Z, 7));
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&results, t] {
            auto u = teichmuller(Z.from_int(t + 2), Z, 7);
            auto v = teichmuller(Z.from_int(3), Z, 7);
            results[t] = witt_mul(u, v);
        });
    for (auto& th : threads) th.join();
    for (int t = 0; t < 4; ++t)
        CHECK(results[t].equals(teichmuller(Z.from_int(3 * (t + 2)), Z, 7)));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wittlab/poly.hpp"
#include "wittlab/random.hpp"

using namespace wittlab;

TEST_CASE("bigint arithmetic agrees with 64-bit arithmetic") {
    Rng rng(11);
    for (int c = 0; c < 500; ++c) {
        int64_t a = rng.int_in(-1000000, 1000000);
        int64_t b = rng.int_in(-1000000, 1000000);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q == BigInt(a / b));
            CHECK(r == BigInt(a % b));
        }
    }
}

TEST_CASE("bigint division invariant on large operands") {
    Rng rng(12);
    for (int c = 0; c < 200; ++c) {
        BigInt a(1), b(1);
        int na = static_cast<int>(rng.int_in(1, 6)), nb = static_cast<int>(rng.int_in(1, 4));
        for (int i = 0; i < na; ++i) a = a * BigInt(rng.int_in(1, 1000000000));
        for (int i = 0; i < nb; ++i) b = b * BigInt(rng.int_in(1, 1000000000));
        if (rng.int_in(0, 1)) a = -a;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(BigInt::cmp(r.abs(), b.abs()) < 0);
    }
}

TEST_CASE("bigint string round trip and exact roots") {
    CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
          "-123456789012345678901234567890");
    CHECK(BigInt(0).to_string() == "0");
    CHECK(*BigInt(1024).nth_root_exact(2) == BigInt(32));
    CHECK(!BigInt(1025).nth_root_exact(2).has_value());
    CHECK(*BigInt(-27).nth_root_exact(3) == BigInt(-3));
    CHECK(!BigInt(-27).nth_root_exact(2).has_value());
}

TEST_CASE("ring descriptor flags") {
    auto Z = RingDescriptor::integers();
    CHECK(Z.is_integral_domain());
    CHECK(Z.is_integrally_closed());
    CHECK(!Z.contains_rationals());
    auto Q = RingDescriptor::rationals();
    CHECK(Q.is_integral_domain());
    CHECK(Q.is_integrally_closed());
    CHECK(Q.contains_rationals());
    auto Z12 = RingDescriptor::integers_mod(BigInt(12));
    CHECK(!Z12.is_integral_domain());
    CHECK(!Z12.contains_rationals());
    auto Z7 = RingDescriptor::integers_mod(BigInt(7));
    CHECK(Z7.is_integral_domain());
    CHECK(Z7.is_integrally_closed());
    auto C5 = RingDescriptor::cyclotomic_field(5);
    CHECK(C5.is_integral_domain());
    CHECK(C5.is_integrally_closed());
    CHECK(C5.contains_rationals());
    auto FZ = RingDescriptor::fraction_field(RingDescriptor::integers());
    CHECK(FZ.contains_rationals());
    CHECK(FZ.is_field());
    CHECK_THROWS_AS(RingDescriptor::prime_field(BigInt(12)), DomainError);
    CHECK_THROWS_AS(RingDescriptor::integers_mod(BigInt(1)), DomainError);
    CHECK_THROWS_AS(RingDescriptor::fraction_field(RingDescriptor::integers_mod(BigInt(12))),
                    DomainError);
}

TEST_CASE("ring axioms hold for randomized triples in every kind") {
    std::vector<RingDescriptor> rings{
        RingDescriptor::integers(),          RingDescriptor::rationals(),
        RingDescriptor::integers_mod(BigInt(12)), RingDescriptor::prime_field(BigInt(7)),
        RingDescriptor::cyclotomic_field(6),
        RingDescriptor::fraction_field(RingDescriptor::integers())};
    Rng rng(21);
    for (const auto& R : rings) {
        for (int c = 0; c < 60; ++c) {
            auto a = random_element(R, rng, 7);
            auto b = random_element(R, rng, 7);
            auto d = random_element(R, rng, 7);
            CHECK(R.eq(R.add(a, b), R.add(b, a)));
            CHECK(R.eq(R.mul(a, b), R.mul(b, a)));
            CHECK(R.eq(R.add(R.add(a, b), d), R.add(a, R.add(b, d))));
            CHECK(R.eq(R.mul(R.mul(a, b), d), R.mul(a, R.mul(b, d))));
            CHECK(R.eq(R.mul(a, R.add(b, d)), R.add(R.mul(a, b), R.mul(a, d))));
            CHECK(R.eq(R.add(a, R.zero()), a));
            CHECK(R.eq(R.mul(a, R.one()), a));
            CHECK(R.is_zero(R.add(a, R.neg(a))));
            if (R.is_unit(a)) CHECK(R.is_one(R.mul(a, R.inv(a))));
        }
    }
}

TEST_CASE("poly_mul_truncated matches full product then truncation") {
    auto Z = RingDescriptor::integers();
    auto f = Polynomial::from_ints(Z, {1, 1});
    CHECK(poly_mul_truncated(f, f, 2).equals(Polynomial::from_ints(Z, {1, 2, 1})));
    CHECK(poly_mul_truncated(Polynomial::from_ints(Z, {1, -2}), Polynomial::from_ints(Z, {1, -3}), 2)
              .equals(Polynomial::from_ints(Z, {1, -5, 6})));
    CHECK(poly_mul_truncated(Polynomial::from_ints(Z, {1, 1, 1}), f, 1)
              .equals(Polynomial::from_ints(Z, {1, 2})));
    Rng rng(31);
    for (int c = 0; c < 100; ++c) {
        auto a = random_monic_at_zero(Z, 5, rng);
        auto b = random_monic_at_zero(Z, 5, rng);
        size_t bound = static_cast<size_t>(rng.int_in(0, 8));
        CHECK(poly_mul_truncated(a, b, bound).equals((a * b).truncated(bound)));
    }
    CHECK_THROWS_AS(poly_mul_truncated(Polynomial::from_ints(Z, {1}),
                                       Polynomial::from_ints(RingDescriptor::rationals(), {1}), 1),
                    DomainError);
}

TEST_CASE("series_inverse inverts modulo t^(N+1)") {
    auto Z = RingDescriptor::integers();
    CHECK(series_inverse(Polynomial::from_ints(Z, {1}), 5).equals(Polynomial::from_ints(Z, {1})));
    CHECK(series_inverse(Polynomial::from_ints(Z, {1, -1}), 2)
              .equals(Polynomial::from_ints(Z, {1, 1, 1})));
    auto Z4 = RingDescriptor::integers_mod(BigInt(4));
    CHECK(series_inverse(Polynomial::from_ints(Z4, {1, 2}), 2)
              .equals(Polynomial::from_ints(Z4, {1, 2})));
    CHECK_THROWS_AS(series_inverse(Polynomial::from_ints(Z, {2, 1}), 3), DomainError);
    Rng rng(41);
    std::vector<RingDescriptor> rings{Z, RingDescriptor::rationals(),
                                      RingDescriptor::integers_mod(BigInt(9))};
    for (const auto& R : rings)
        for (int c = 0; c < 60; ++c) {
            auto f = random_monic_at_zero(R, 4, rng);
            size_t n = static_cast<size_t>(rng.int_in(0, 7));
            auto g = series_inverse(f, n);
            auto prod = poly_mul_truncated(f, g, n);
            CHECK(prod.equals(Polynomial::constant(R, R.one())));
        }
}

TEST_CASE("resultant fixtures fix the sign convention") {
    auto Z = RingDescriptor::integers();
    auto x2m1 = Polynomial::from_ints(Z, {-1, 0, 1});
    CHECK(Z.to_rational(poly_resultant(x2m1, Polynomial::from_ints(Z, {-2, 1}))).num() == BigInt(3));
    // Res(f,g) = lc(f)^deg(g) prod g(roots of f): Res(x-2, x-3) = g(2) = -1
    CHECK(Z.to_rational(poly_resultant(Polynomial::from_ints(Z, {-2, 1}),
                                       Polynomial::from_ints(Z, {-3, 1})))
              .num() == BigInt(-1));
    CHECK(Z.to_rational(poly_resultant(x2m1, Polynomial::from_ints(Z, {1}))).num() == BigInt(1));
    CHECK_THROWS_AS(poly_resultant(Polynomial(Z), x2m1), DomainError);
    CHECK_THROWS_AS(poly_resultant(Polynomial::from_ints(RingDescriptor::integers_mod(BigInt(12)), {1, 1}),
                                   Polynomial::from_ints(RingDescriptor::integers_mod(BigInt(12)), {1, 2})),
                    DomainError);
}

namespace {

// independent oracle: cofactor-expansion determinant of the Sylvester matrix
// over exact rationals
Rational naive_det(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return Rational(1);
    if (m.size() == 1) return m[0][0];
    Rational acc(0);
    for (size_t j = 0; j < m.size(); ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Rational>> minor;
        for (size_t i = 1; i < m.size(); ++i) {
            std::vector<Rational> row;
            for (size_t k = 0; k < m.size(); ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Rational term = m[0][j] * naive_det(std::move(minor));
        acc = j % 2 ? acc - term : acc + term;
    }
    return acc;
}

Rational sylvester_oracle(const Polynomial& f, const Polynomial& g) {
    const auto& R = f.ring();
    size_t n = static_cast<size_t>(f.degree()), m = static_cast<size_t>(g.degree());
    std::vector<std::vector<Rational>> s(m + n, std::vector<Rational>(m + n, Rational(0)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= n; ++j) s[i][i + j] = R.to_rational(f.coeff(n - j));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= m; ++j) s[m + i][i + j] = R.to_rational(g.coeff(m - j));
    return naive_det(std::move(s));
}

}  // namespace

TEST_CASE("resultant matches the cofactor-expansion oracle and its laws") {
    auto Z = RingDescriptor::integers();
    Rng rng(51);
    for (int c = 0; c < 80; ++c) {
        Polynomial f(Z), g(Z), h(Z);
        while (f.degree() < 1) f = Polynomial(Z, {Z.from_int(rng.int_in(-4, 4)),
                                                  Z.from_int(rng.int_in(-4, 4)),
                                                  Z.from_int(rng.int_in(-4, 4))});
        while (g.degree() < 1) g = Polynomial(Z, {Z.from_int(rng.int_in(-4, 4)),
                                                  Z.from_int(rng.int_in(-4, 4)),
                                                  Z.from_int(rng.int_in(-4, 4))});
        while (h.degree() < 1) h = Polynomial(Z, {Z.from_int(rng.int_in(-4, 4)),
                                                  Z.from_int(rng.int_in(-4, 4))});
        Rational rfg = Z.to_rational(poly_resultant(f, g));
        CHECK(rfg == sylvester_oracle(f, g));
        // swap symmetry with sign (-1)^(deg f * deg g)
        Rational rgf = Z.to_rational(poly_resultant(g, f));
        Rational expect = (f.degree() * g.degree()) % 2 ? -rgf : rgf;
        CHECK(rfg == expect);
        // multiplicativity in the second argument
        Rational rf_gh = Z.to_rational(poly_resultant(f, g * h));
        CHECK(rf_gh == rfg * Z.to_rational(poly_resultant(f, h)));
    }
}

TEST_CASE("cyclotomic polynomials") {
    auto Z = RingDescriptor::integers();
    CHECK(cyclotomic_polynomial(1).equals(Polynomial::from_ints(Z, {-1, 1})));
    CHECK(cyclotomic_polynomial(3).equals(Polynomial::from_ints(Z, {1, 1, 1})));
    CHECK(cyclotomic_polynomial(6).equals(Polynomial::from_ints(Z, {1, -1, 1})));
    for (unsigned n = 1; n <= 24; ++n) {
        auto phi = cyclotomic_polynomial(n);
        CHECK(phi.degree() == static_cast<int>(euler_phi(n)));
        CHECK(Z.is_one(phi.leading()));
        // the product over divisors rebuilds x^n - 1
        Polynomial prod = Polynomial::constant(Z, Z.one());
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
        std::vector<int64_t> xn(n + 1, 0);
        xn[0] = -1;
        xn[n] = 1;
        CHECK(prod.equals(Polynomial::from_ints(Z, xn)));
    }
}

TEST_CASE("cyclotomic numbers satisfy their minimal polynomial") {
    for (unsigned n : {1u, 2u, 3u, 4u, 5u, 8u, 12u}) {
        auto C = RingDescriptor::cyclotomic_field(n);
        auto z = C.zeta();
        CHECK(C.is_one(C.pow(z, n)));
        // Phi_n(zeta) = 0
        auto phi = cyclotomic_polynomial(n, C);
        CHECK(C.is_zero(phi.eval(z)));
    }
    // reduction is idempotent: arithmetic results are already canonical
    auto C12 = RingDescriptor::cyclotomic_field(12);
    Rng rng(61);
    for (int c = 0; c < 40; ++c) {
        auto a = random_element(C12, rng);
        auto b = random_element(C12, rng);
        auto p = C12.mul(a, b);
        CHECK(C12.eq(p, C12.mul(C12.one(), p)));
    }
}

TEST_CASE("poly_gcd normalization cases") {
    auto Z = RingDescriptor::integers();
    auto Q = RingDescriptor::rationals();
    CHECK(poly_gcd(Polynomial::from_ints(Z, {2, 4}), Polynomial(Z))
              .equals(Polynomial::from_ints(Z, {1, 2})));
    CHECK(poly_gcd(Polynomial::from_ints(Z, {1, 0, -1}), Polynomial::from_ints(Z, {1, -1}))
              .equals(Polynomial::from_ints(Z, {1, -1})));
    CHECK(poly_gcd(Polynomial::from_ints(Q, {1, 1}), Polynomial::from_ints(Q, {1, -1})).is_one());
    CHECK_THROWS_AS(poly_gcd(Polynomial::from_ints(RingDescriptor::integers_mod(BigInt(12)), {1, 1}),
                             Polynomial::from_ints(RingDescriptor::integers_mod(BigInt(12)), {1})),
                    DomainError);
    // gcd divides both inputs, over Z and over Q
    Rng rng(71);
    for (int c = 0; c < 60; ++c) {
        for (const auto& R : {Z, Q}) {
            auto a = random_monic_at_zero(R, 4, rng, 4);
            auto b = random_monic_at_zero(R, 4, rng, 4);
            auto common = random_monic_at_zero(R, 3, rng, 3);
            auto g = poly_gcd(a * common, b * common);
            CHECK(poly_exact_divide(a * common, g).degree() >= 0);
            CHECK(poly_exact_divide(b * common, g).degree() >= 0);
            CHECK(g.degree() >= common.degree());
        }
    }
}

TEST_CASE("fraction field reduces to canonical form") {
    auto F = RingDescriptor::fraction_field(RingDescriptor::integers());
    auto x = F.make_fraction(F.base().from_int(6), F.base().from_int(-4));
    CHECK(F.to_string(x) == "(-3)/(2)");
    CHECK(F.eq(F.mul(x, F.inv(x)), F.one()));
    auto y = F.from_rational(Rational::from_string("-3/2"));
    CHECK(F.eq(x, y));
}

#pragma once

// The seeded property battery behind `verify`: every module's identities run
// against their independent oracles, reported as deterministic text (a fixed
// seed yields a byte-identical report).

#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "wittlab/io.hpp"
#include "wittlab/kummer.hpp"
#include "wittlab/random.hpp"

namespace wittlab {

struct CheckResult {
    std::string name;
    size_t cases = 0;
    bool passed = true;
    std::string counterexample;  // first failure, empty when passed
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    size_t passed() const {
        size_t n = 0;
        for (const auto& c : checks) n += c.passed;
        return n;
    }
    size_t failed() const { return checks.size() - passed(); }
};

namespace verify_detail {

class Battery {
public:
    explicit Battery(uint64_t seed) : seed_(seed) {}

    SuiteReport run(const std::string& suite) {
        SuiteReport r{suite, {}};
        current_ = &r;
        if (suite == "witt")
            suite_witt();
        else if (suite == "wrat")
            suite_wrat();
        else if (suite == "lambda")
            suite_lambda();
        else if (suite == "dual")
            suite_dual();
        else if (suite == "cohom")
            suite_cohom();
        else
            throw DomainError("bad-suite", "unknown suite: " + suite);
        current_ = nullptr;
        return r;
    }

private:
    uint64_t seed_;
    SuiteReport* current_ = nullptr;

    // every check gets its own generator: order independence and determinism
    Rng rng_for(const std::string& check) {
        uint64_t h = seed_;
        for (char c : check) h = h * 1099511628211ull + static_cast<unsigned char>(c);
        return Rng(h);
    }

    void check(const std::string& name, size_t cases,
               const std::function<std::string(Rng&)>& body) {
        CheckResult r;
        r.name = name;
        r.cases = cases;
        Rng rng = rng_for(name);
        try {
            std::string ce = body(rng);
            if (!ce.empty()) {
                r.passed = false;
                r.counterexample = ce;
            }
        } catch (const std::exception& e) {
            r.passed = false;
            r.counterexample = std::string("exception: ") + e.what();
        }
        current_->checks.push_back(std::move(r));
    }

    static std::vector<RingDescriptor> axiom_rings() {
        return {RingDescriptor::integers(), RingDescriptor::integers_mod(BigInt(12)),
                RingDescriptor::prime_field(BigInt(7)), RingDescriptor::rationals()};
    }

    void suite_witt() {
        for (const auto& ring : axiom_rings()) {
            check("witt-ring-axioms-" + ring.to_string(), 120, [&ring](Rng& rng) -> std::string {
                for (unsigned depth = 1; depth <= 6; ++depth) {
                    for (int c = 0; c < 20; ++c) {
                        auto u = random_witt(ring, depth, rng, 6);
                        auto v = random_witt(ring, depth, rng, 6);
                        auto w = random_witt(ring, depth, rng, 6);
                        if (!witt_add(u, v).equals(witt_add(v, u)))
                            return "add not commutative: " + format_witt(u) + ", " + format_witt(v);
                        if (!witt_mul(u, v).equals(witt_mul(v, u)))
                            return "mul not commutative: " + format_witt(u) + ", " + format_witt(v);
                        if (!witt_add(witt_add(u, v), w).equals(witt_add(u, witt_add(v, w))))
                            return "add not associative";
                        if (!witt_mul(witt_mul(u, v), w).equals(witt_mul(u, witt_mul(v, w))))
                            return "mul not associative: " + format_witt(u);
                        if (!witt_mul(u, witt_add(v, w))
                                 .equals(witt_add(witt_mul(u, v), witt_mul(u, w))))
                            return "distributivity failed: " + format_witt(u);
                        if (!witt_add(u, witt_zero(ring, depth)).equals(u)) return "zero law";
                        if (!witt_mul(u, witt_one(ring, depth)).equals(u)) return "unit law";
                        if (!witt_mul(u, witt_zero(ring, depth)).equals(witt_zero(ring, depth)))
                            return "annihilation law";
                        if (!witt_add(u, witt_neg(u)).equals(witt_zero(ring, depth)))
                            return "negation law";
                    }
                }
                return "";
            });
            check("teichmuller-multiplicative-" + ring.to_string(), 50,
                  [&ring](Rng& rng) -> std::string {
                      for (int c = 0; c < 50; ++c) {
                          auto a = random_element(ring, rng, 6);
                          auto b = random_element(ring, rng, 6);
                          auto lhs = witt_mul(teichmuller(a, ring, 5), teichmuller(b, ring, 5));
                          if (!lhs.equals(teichmuller(ring.mul(a, b), ring, 5)))
                              return "[a][b] != [ab] at a=" + ring.to_string(a) +
                                     " b=" + ring.to_string(b);
                      }
                      return "";
                  });
        }
        check("teichmuller-not-additive-witness", 1, [](Rng&) -> std::string {
            auto Z = RingDescriptor::integers();
            auto one = witt_one(Z, 2);
            if (witt_add(one, one).equals(teichmuller(Z.from_int(2), Z, 2)))
                return "[1]+[1] unexpectedly equals [2]";
            return "";
        });
        check("ghost-ring-homomorphism", 60, [](Rng& rng) -> std::string {
            auto Q = RingDescriptor::rationals();
            for (int c = 0; c < 60; ++c) {
                auto u = random_witt(Q, 7, rng, 5);
                auto v = random_witt(Q, 7, rng, 5);
                auto gu = ghost(u), gv = ghost(v);
                auto gsum = ghost(witt_add(u, v));
                auto gprod = ghost(witt_mul(u, v));
                for (unsigned i = 0; i < 7; ++i) {
                    if (!Q.eq(gsum.components[i], Q.add(gu.components[i], gv.components[i])))
                        return "ghost not additive at " + format_witt(u);
                    if (!Q.eq(gprod.components[i], Q.mul(gu.components[i], gv.components[i])))
                        return "ghost not multiplicative at " + format_witt(u);
                }
                if (!ghost_inverse(gu).equals(u)) return "ghost roundtrip failed";
            }
            return "";
        });
        check("universal-polys-integral-depth8", 1, [](Rng&) -> std::string {
            auto up = build_universal_polys(8);  // integrality asserted inside
            if (up.mul_polys.size() != 8) return "wrong count";
            return "";
        });
        check("frobenius-verschiebung-identities", 40, [](Rng& rng) -> std::string {
            auto Q = RingDescriptor::rationals();
            for (int c = 0; c < 40; ++c) {
                auto u = random_witt(Q, 12, rng, 4);
                if (!frobenius(2, frobenius(3, u)).equals(frobenius(6, u)))
                    return "F2 F3 != F6 at " + format_witt(u);
                for (unsigned m : {2u, 3u}) {
                    auto fv = frobenius(m, verschiebung(m, u));
                    auto mw = witt_truncate(witt_mul(witt_scalar(m, witt_one(Q, u.depth)), u),
                                            u.depth / m);
                    if (!fv.equals(mw)) return "F_m V_m != m at m=" + std::to_string(m);
                }
            }
            return "";
        });
        check("frobenius-ring-homomorphism", 30, [](Rng& rng) -> std::string {
            auto Q = RingDescriptor::rationals();
            for (int c = 0; c < 30; ++c) {
                auto u = random_witt(Q, 8, rng, 4);
                auto v = random_witt(Q, 8, rng, 4);
                if (!frobenius(2, witt_mul(u, v)).equals(witt_mul(frobenius(2, u), frobenius(2, v))))
                    return "F_2 not multiplicative";
                if (!frobenius(2, witt_add(u, v)).equals(witt_add(frobenius(2, u), frobenius(2, v))))
                    return "F_2 not additive";
            }
            return "";
        });
    }

    void suite_wrat() {
        check("subring-closure-embedding", 20, [](Rng& rng) -> std::string {
            auto Z = RingDescriptor::integers();
            for (int c = 0; c < 20; ++c) {
                auto u = random_wrat(Z, 3, rng, 3);
                auto v = random_wrat(Z, 3, rng, 3);
                auto w = wr_mul(u, v);  // embedding cross-check runs inside
                if (!Z.is_one(w.num.constant_term()) || !Z.is_one(w.den.constant_term()))
                    return "product not normalized at " + format_wrat(u);
            }
            return "";
        });
        check("ring-axioms-via-embedding", 15, [](Rng& rng) -> std::string {
            auto Z = RingDescriptor::integers();
            for (int c = 0; c < 15; ++c) {
                auto u = random_wrat(Z, 2, rng, 3);
                auto v = random_wrat(Z, 2, rng, 3);
                auto w = random_wrat(Z, 2, rng, 3);
                auto e = [](const RationalWittVector& x) { return wr_embed_truncated(x, 12); };
                if (!e(wr_mul(u, wr_add(v, w)))
                         .equals(witt_add(e(wr_mul(u, v)), e(wr_mul(u, w)))))
                    return "distributivity failed at " + format_wrat(u);
                if (!wr_equal(wr_mul(u, v), wr_mul(v, u))) return "mul not commutative";
                if (!wr_equal(wr_add(u, wr_neg(u)), wr_zero(Z))) return "negation law";
                if (!wr_equal(wr_mul(u, wr_one(Z)), u)) return "unit law";
            }
            return "";
        });
        check("phi-p-ghost-patterns", 3, [](Rng&) -> std::string {
            auto Z = RingDescriptor::integers();
            for (int64_t p : {2, 3, 5}) {
                unsigned depth = static_cast<unsigned>(2 * p);
                auto g = wr_ghost(phi_p(BigInt(p)), depth);
                for (unsigned n = 1; n <= depth; ++n) {
                    int64_t want = n % p == 0 ? p - 1 : -1;
                    if (!Z.eq(g.components[n - 1], Z.from_int(want)))
                        return "phi_" + std::to_string(p) + " ghost wrong at n=" + std::to_string(n);
                }
                phi_p_minus_scalar_check(BigInt(p), depth);  // throws on violation
            }
            return "";
        });
        check("phi-p-teichmuller-sum", 3, [](Rng&) -> std::string {
            for (int64_t p : {2, 3, 5}) {
                auto C = RingDescriptor::cyclotomic_field(static_cast<unsigned>(p));
                auto lhs = wr_map_ring(phi_p(BigInt(p)), C);
                auto rhs = wr_zero(C);
                for (int64_t i = 1; i < p; ++i)
                    rhs = wr_add(rhs, wr_teichmuller(C.pow(C.zeta(), i), C));
                if (!wr_equal(lhs, rhs)) return "phi_p != sum of [zeta^i] at p=" + std::to_string(p);
            }
            return "";
        });
        check("frobenius-composition-ghosts", 15, [](Rng& rng) -> std::string {
            auto Z = RingDescriptor::integers();
            for (int c = 0; c < 15; ++c) {
                auto u = random_wrat(Z, 2, rng, 3);
                auto lhs = wr_frobenius(2, wr_frobenius(3, u));
                auto rhs = wr_frobenius(6, u);
                if (!wr_ghost(lhs, 8).equals(wr_ghost(rhs, 8)))
                    return "F_2 F_3 != F_6 at " + format_wrat(u);
                auto a = random_element(Z, rng, 6);
                if (!wr_equal(wr_frobenius(4, wr_teichmuller(a, Z)),
                              wr_teichmuller(Z.pow(a, 4), Z)))
                    return "F_m[a] != [a^m]";
            }
            return "";
        });
        check("verschiebung-ghost-rule", 15, [](Rng& rng) -> std::string {
            auto Z = RingDescriptor::integers();
            for (int c = 0; c < 15; ++c) {
                auto u = random_wrat(Z, 2, rng, 3);
                unsigned m = static_cast<unsigned>(rng.int_in(2, 4));
                auto g = wr_ghost(u, 4);
                auto gv = wr_ghost(wr_verschiebung(m, u), 4 * m);
                for (unsigned n = 1; n <= 4 * m; ++n) {
                    RingElement want = n % m == 0
                                           ? Z.mul(Z.from_int(m), g.components[n / m - 1])
                                           : Z.zero();
                    if (!Z.eq(gv.components[n - 1], want)) return "V_m ghost rule failed";
                }
            }
            return "";
        });
    }

    void suite_lambda() {
        std::vector<FgAbelianGroup> groups{FgAbelianGroup(1, {}), FgAbelianGroup(2, {}),
                                           FgAbelianGroup(0, {4}), FgAbelianGroup(1, {6})};
        for (const auto& g : groups) {
            check("group-ring-axioms-" + format_group(g), 25, [&g](Rng& rng) -> std::string {
                for (int c = 0; c < 25; ++c) {
                    auto x = random_group_ring(g, rng);
                    auto y = random_group_ring(g, rng);
                    auto z = random_group_ring(g, rng);
                    if (gr_mul(x, y) != gr_mul(y, x)) return "mul not commutative";
                    if (gr_mul(gr_mul(x, y), z) != gr_mul(x, gr_mul(y, z)))
                        return "mul not associative";
                    if (gr_mul(x, gr_add(y, z)) != gr_add(gr_mul(x, y), gr_mul(x, z)))
                        return "distributivity failed";
                    if (gr_mul(x, GroupRingElement::one(g)) != x) return "unit law";
                }
                return "";
            });
        }
        check("frobenius-lift-homomorphism", 40, [](Rng& rng) -> std::string {
            FgAbelianGroup g(1, {6});
            for (int c = 0; c < 40; ++c) {
                auto x = random_group_ring(g, rng);
                auto y = random_group_ring(g, rng);
                for (int64_t p : {2, 3, 5}) {
                    if (gr_frobenius_lift(p, gr_mul(x, y)) !=
                        gr_mul(gr_frobenius_lift(p, x), gr_frobenius_lift(p, y)))
                        return "phi_p not multiplicative at p=" + std::to_string(p);
                    if (gr_frobenius_lift(p, gr_add(x, y)) !=
                        gr_add(gr_frobenius_lift(p, x), gr_frobenius_lift(p, y)))
                        return "phi_p not additive";
                }
            }
            return "";
        });
        check("frobenius-lifts-commute", 60, [](Rng& rng) -> std::string {
            FgAbelianGroup g(1, {6});
            for (int c = 0; c < 60; ++c) {
                auto x = random_group_ring(g, rng);
                for (auto [p, q] : std::vector<std::pair<int64_t, int64_t>>{{2, 3}, {2, 5}, {3, 5}})
                    if (!lambda_commute_check(p, q, x))
                        return "phi_p phi_q != phi_q phi_p";
            }
            return "";
        });
        check("frobenius-congruence-mod-p", 60, [](Rng& rng) -> std::string {
            FgAbelianGroup g(0, {5});
            FgAbelianGroup h(1, {4});
            for (int c = 0; c < 60; ++c) {
                for (const auto& grp : {g, h}) {
                    auto x = random_group_ring(grp, rng, 5, 3, 5);
                    for (int64_t p : {2, 3, 5}) frobenius_congruence_check(p, x);  // throws on failure
                }
            }
            return "";
        });
        check("witt-bridge-homomorphism", 10, [](Rng& rng) -> std::string {
            auto Q = RingDescriptor::rationals();
            FgAbelianGroup g(2, {});
            WittAssignment asg(g, Q, {Q.from_int(2), Q.from_int(3)});
            for (int c = 0; c < 10; ++c) {
                auto x = random_group_ring(g, rng, 3, 2, 2);
                auto y = random_group_ring(g, rng, 3, 2, 2);
                if (!wr_equal(to_witt(gr_mul(x, y), asg), wr_mul(to_witt(x, asg), to_witt(y, asg))))
                    return "to_witt not multiplicative";
                if (!wr_equal(to_witt(gr_add(x, y), asg), wr_add(to_witt(x, asg), to_witt(y, asg))))
                    return "to_witt not additive";
            }
            return "";
        });
        check("witt-bridge-frobenius-compat", 10, [](Rng& rng) -> std::string {
            auto Q = RingDescriptor::rationals();
            FgAbelianGroup g(2, {});
            WittAssignment asg(g, Q, {Q.from_int(2), Q.from_int(3)});
            for (int c = 0; c < 10; ++c) {
                auto x = random_group_ring(g, rng, 3, 2, 2);
                if (!frobenius_compat_check(2, x, asg)) return "phi_2 vs F_2 mismatch";
            }
            auto C5 = RingDescriptor::cyclotomic_field(5);
            FgAbelianGroup tg(0, {5});
            WittAssignment tasg(tg, C5, {C5.zeta()});
            for (int c = 0; c < 5; ++c) {
                auto x = random_group_ring(tg, rng, 3, 3, 2);
                if (!frobenius_compat_check(3, x, tasg)) return "phi_3 vs F_3 over Q(zeta_5)";
            }
            return "";
        });
    }

    void suite_dual() {
        check("snf-reverification-random", 40, [](Rng& rng) -> std::string {
            for (int c = 0; c < 40; ++c) {
                size_t r = static_cast<size_t>(rng.int_in(1, 4));
                size_t k = static_cast<size_t>(rng.int_in(1, 4));
                IntegerMatrix A(r, k);
                for (auto& v : A.a) v = BigInt(rng.int_in(-9, 9));
                auto s = smith_normal_form(A);  // verifies U A V = D internally
                auto d = s.diagonal();
                for (size_t i = 0; i + 1 < d.size(); ++i)
                    if (!d[i].is_zero() && !d[i + 1].is_zero() && !d[i + 1].divisible_by(d[i]))
                        return "divisibility chain broken";
                if (mat_det(s.U).abs() != BigInt(1) || mat_det(s.V).abs() != BigInt(1))
                    return "transform not unimodular";
            }
            return "";
        });
        check("ext-hom-invariant-factors", 12, [](Rng&) -> std::string {
            if (!ext_to_Z(FgAbelianGroup(1, {})).is_trivial()) return "Ext(Z,Z) != 0";
            for (int64_t n : {2, 3, 4, 5, 6}) {
                if (ext_to_Z(FgAbelianGroup(0, {n})) != FgAbelianGroup(0, {n}))
                    return "Ext(Z/n,Z) != Z/n";
            }
            if (ext_to_Z(FgAbelianGroup(1, {4, 12})) != FgAbelianGroup(0, {4, 12}))
                return "Ext mixed case failed";
            if (hom_to_Z(FgAbelianGroup(1, {4, 12})) != FgAbelianGroup(1, {}))
                return "Hom mixed case failed";
            return "";
        });
        check("overlattice-count-sigma", 30, [](Rng&) -> std::string {
            for (int64_t n = 1; n <= 30; ++n) {
                int64_t sigma = 0;
                for (int64_t d = 1; d <= n; ++d)
                    if (n % d == 0) sigma += d;
                if (static_cast<int64_t>(enumerate_overlattices(2, n).size()) != sigma)
                    return "count != sigma(n) at n=" + std::to_string(n);
            }
            return "";
        });
        check("deck-group-order-equals-index", 12, [](Rng&) -> std::string {
            for (int64_t n = 1; n <= 12; ++n)
                for (const auto& N : enumerate_overlattices(2, n))
                    if (covering_deck_group(N).order() != BigInt(n))
                        return "deck order wrong at n=" + std::to_string(n);
            return "";
        });
        check("deck-transition-functorial", 6, [](Rng&) -> std::string {
            for (int64_t n : {2, 3, 4}) {
                auto small = enumerate_overlattices(2, n);
                auto big = enumerate_overlattices(2, n * n);
                for (const auto& s : small)
                    for (const auto& b : big) {
                        try {
                            auto t = deck_transition(s, b);
                            if (!t.is_surjective()) return "transition not surjective";
                        } catch (const DomainError&) {
                            // not nested; fine
                        }
                    }
            }
            return "";
        });
        check("solenoid-chain-surjections", 8, [](Rng&) -> std::string {
            std::vector<int64_t> chain{2, 4, 8, 16, 32, 64, 128, 256};
            auto s = solenoid_stage_chain(chain);
            for (size_t j = 0; j < chain.size(); ++j)
                if (s.stages[j].order() != BigInt(chain[j])) return "stage order wrong";
            for (const auto& t : s.transitions)
                if (!t.is_surjective()) return "transition not surjective";
            auto s2 = solenoid_stage_chain({1, 2, 6, 24});
            if (solenoid_partial_limit_count(s2) != BigInt(24)) return "partial limit count";
            return "";
        });
    }

    void suite_cohom() {
        check("cyclic-tables-vs-closed-form", 75, [](Rng&) -> std::string {
            for (int64_t k = 2; k <= 6; ++k)
                for (int64_t n = 2; n <= 6; ++n) {
                    auto mod = GModule::trivial(FgAbelianGroup(0, {k}), FgAbelianGroup(0, {n}));
                    int64_t g = std::gcd(k, n);
                    FgAbelianGroup want = g == 1 ? FgAbelianGroup() : FgAbelianGroup(0, {g});
                    if (group_cohomology(mod, 0).invariants != FgAbelianGroup(0, {n}))
                        return "H0 wrong at k=" + std::to_string(k) + " n=" + std::to_string(n);
                    for (unsigned p : {1u, 2u})
                        if (group_cohomology(mod, p).invariants != want)
                            return "H^p wrong at k=" + std::to_string(k) +
                                   " n=" + std::to_string(n);
                }
            return "";
        });
        check("integral-cohomology-of-Z2", 3, [](Rng&) -> std::string {
            auto mod = GModule::trivial(FgAbelianGroup(0, {2}), FgAbelianGroup(1, {}));
            if (group_cohomology(mod, 0).invariants != FgAbelianGroup(1, {})) return "H0 != Z";
            if (!group_cohomology(mod, 1).invariants.is_trivial()) return "H1 != 0";
            if (group_cohomology(mod, 2).invariants != FgAbelianGroup(0, {2})) return "H2 != Z/2";
            return "";
        });
        check("bar-differential-squares-to-zero", 6, [](Rng&) -> std::string {
            for (int64_t k : {2, 3, 4}) {
                auto mod = GModule::trivial(FgAbelianGroup(0, {k}), FgAbelianGroup(0, {4}));
                if (!bar_dd_is_zero(mod, 0) || !bar_dd_is_zero(mod, 1)) return "dd != 0";
            }
            auto neg = IntegerMatrix::from_rows({{-1}});
            GModule modNeg(FgAbelianGroup(0, {2}), FgAbelianGroup(1, {}), {neg});
            if (!bar_dd_is_zero(modNeg, 1)) return "dd != 0 with action";
            return "";
        });
        check("cup-product-z2-character", 1, [](Rng&) -> std::string {
            auto mod = GModule::trivial(FgAbelianGroup(0, {2}), FgAbelianGroup(0, {2}));
            Cocycle chi;
            chi.degree = 1;
            chi.group = mod.group;
            chi.module = mod.module;
            chi.action = mod.action;
            chi.values = {{0}, {1}};
            auto cup = cup_product(mod, chi, mod, chi, BilinearPairing::multiplication_mod(2), mod);
            if (!cup.is_cocycle) return "cup not a cocycle";
            if (is_coboundary(mod, cup)) return "cup of the nontrivial character bounds";
            return "";
        });
        check("kummer-pairing-fixtures", 4, [](Rng&) -> std::string {
            auto C3 = RingDescriptor::cyclotomic_field(3);
            KummerExtension ext(3, {{C3.from_int(2), 3}});
            GaloisElement sigma{{1}};
            if (kummer_pairing(ext, sigma, ext.radical_generator(0), 3) != 1) return "<s,y> != 1";
            if (kummer_pairing(ext, sigma, ext.pow(ext.radical_generator(0), 2), 3) != 2)
                return "<s,y^2> != 2";
            if (kummer_pairing(ext, GaloisElement{{0}}, ext.radical_generator(0), 3) != 0)
                return "<1,y> != 0";
            auto C4 = RingDescriptor::cyclotomic_field(4);
            KummerExtension e2(4, {{C4.from_int(2), 2}, {C4.from_int(3), 2}});
            if (kummer_pairing_matrix(e2, 2) != IntegerMatrix::identity(2))
                return "sqrt2/sqrt3 matrix not identity";
            KummerExtension e3(4, {{C4.from_int(2), 2}, {C4.from_int(8), 2}});
            auto m = kummer_pairing_matrix(e3, 2);
            if (!(m.at(1, 0).is_zero() && m.at(1, 1).is_zero()))
                return "sqrt2/sqrt8 matrix not degenerate";
            return "";
        });
        check("hilbert90-resolvents", 8, [this](Rng&) -> std::string {
            auto C3 = RingDescriptor::cyclotomic_field(3);
            KummerExtension e3(3, {{C3.from_int(2), 3}});
            for (unsigned k = 0; k < 3; ++k) {
                auto zeta = C3.pow(C3.zeta(), k);
                auto alpha = hilbert90_resolvent(e3, zeta, 64, seed_);
                if (!e3.eq(e3.apply(GaloisElement{{1}}, alpha), e3.scale(zeta, alpha)))
                    return "sigma(alpha) != zeta alpha over mu_3";
            }
            auto C5 = RingDescriptor::cyclotomic_field(5);
            KummerExtension e5(5, {{C5.from_int(2), 5}});
            for (unsigned k = 0; k < 5; ++k) {
                auto zeta = C5.pow(C5.zeta(), k);
                auto alpha = hilbert90_resolvent(e5, zeta, 64, seed_);
                if (!e5.eq(e5.apply(GaloisElement{{1}}, alpha), e5.scale(zeta, alpha)))
                    return "sigma(alpha) != zeta alpha over mu_5";
            }
            return "";
        });
        check("galois-symbol-additive", 4, [](Rng&) -> std::string {
            auto C4 = RingDescriptor::cyclotomic_field(4);
            KummerExtension ext(4, {{C4.from_int(2), 2}, {C4.from_int(3), 2}});
            auto s2 = galois_symbol(Rational(2), ext, 2);
            auto s3 = galois_symbol(Rational(3), ext, 2);
            auto s6 = galois_symbol(Rational(6), ext, 2);
            for (size_t i = 0; i < s6.values.size(); ++i)
                if (s6.values[i][0] != (s2.values[i][0] + s3.values[i][0]) % 2)
                    return "symbol not additive";
            auto s4 = galois_symbol(Rational(4), ext, 2);
            for (const auto& v : s4.values)
                if (v[0] != 0) return "symbol of a square not zero";
            return "";
        });
    }
};

}  // namespace verify_detail

inline std::vector<std::string> verify_suite_names() {
    return {"witt", "wrat", "lambda", "dual", "cohom"};
}

inline std::vector<SuiteReport> run_verify(const std::string& suite, uint64_t seed) {
    verify_detail::Battery battery(seed);
    std::vector<SuiteReport> reports;
    if (suite == "all") {
        for (const auto& name : verify_suite_names()) reports.push_back(battery.run(name));
    } else {
        reports.push_back(battery.run(suite));
    }
    return reports;
}

inline std::string format_verify_report(const std::vector<SuiteReport>& reports, uint64_t seed) {
    std::ostringstream out;
    out << "verify report (seed " << seed << ")\n";
    size_t total = 0, passed = 0;
    for (const auto& r : reports) {
        out << "suite " << r.suite << ": " << r.passed() << "/" << r.checks.size()
            << " checks passed\n";
        for (const auto& c : r.checks) {
            out << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name << " (" << c.cases
                << " cases)";
            if (!c.passed) out << "\n        counterexample: " << c.counterexample;
            out << "\n";
        }
        total += r.checks.size();
        passed += r.passed();
    }
    out << "total: " << passed << "/" << total << " checks passed\n";
    return out.str();
}

inline bool verify_all_passed(const std::vector<SuiteReport>& reports) {
    for (const auto& r : reports)
        if (r.failed() != 0) return false;
    return true;
}

}  // namespace wittlab

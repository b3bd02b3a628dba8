// Batch CLI over the library. One subcommand per module; exact text I/O on
// stdout, machine-readable error JSON on stderr. Exit codes: 0 success,
// 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <numeric>
#include <iostream>
#include <string>
#include <vector>

#include "wittlab/verify.hpp"

namespace {

using namespace wittlab;

nlohmann::json with_schema(nlohmann::json j) {
    j["schema_version"] = kSchemaVersion;
    return j;
}

void emit(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

struct WittArgs {
    std::string op;
    std::string ring = "Z";
    unsigned depth = 4;
    unsigned index = 1;
    bool json = false;
    std::vector<std::string> args;
};

int run_witt(const WittArgs& a) {
    RingDescriptor ring = RingDescriptor::parse(a.ring);
    auto arg = [&](size_t i) -> const std::string& {
        if (i >= a.args.size()) throw DomainError("missing-argument", "operation needs more inputs");
        return a.args[i];
    };
    auto out_witt = [&](const TruncatedWittVector& u) {
        if (a.json)
            emit(witt_to_json(u));
        else
            std::cout << format_witt(u) << "\n";
    };
    if (a.op == "add") {
        out_witt(witt_add(parse_witt(ring, arg(0), a.depth), parse_witt(ring, arg(1), a.depth)));
    } else if (a.op == "mul") {
        out_witt(witt_mul(parse_witt(ring, arg(0), a.depth), parse_witt(ring, arg(1), a.depth)));
    } else if (a.op == "neg") {
        out_witt(witt_neg(parse_witt(ring, arg(0), a.depth)));
    } else if (a.op == "teich") {
        out_witt(teichmuller(parse_element(ring, arg(0)), ring, a.depth));
    } else if (a.op == "frob") {
        out_witt(frobenius(a.index, parse_witt(ring, arg(0), a.depth)));
    } else if (a.op == "versch") {
        out_witt(verschiebung(a.index, parse_witt(ring, arg(0), a.depth)));
    } else if (a.op == "ghost") {
        GhostVector g = ghost(parse_witt(ring, arg(0), a.depth));
        if (a.json)
            emit(ghost_to_json(g));
        else
            std::cout << format_ghost(g) << "\n";
    } else if (a.op == "ghostinv") {
        GhostVector g(ring, a.depth);
        const std::string& text = arg(0);
        size_t start = 0, i = 0;
        while (start < text.size() && i < a.depth) {
            size_t comma = text.find(',', start);
            if (comma == std::string::npos) comma = text.size();
            g.components[i++] = parse_element(ring, text.substr(start, comma - start));
            start = comma + 1;
        }
        out_witt(ghost_inverse(g));
    } else {
        throw CLI::ValidationError("witt", "unknown operation: " + a.op);
    }
    return 0;
}

struct WratArgs {
    std::string op;
    std::string ring = "Z";
    unsigned depth = 6;
    unsigned index = 1;
    int64_t prime = 2;
    bool json = false;
    std::vector<std::string> args;
};

int run_wrat(const WratArgs& a) {
    RingDescriptor ring = RingDescriptor::parse(a.ring);
    auto arg = [&](size_t i) -> const std::string& {
        if (i >= a.args.size()) throw DomainError("missing-argument", "operation needs more inputs");
        return a.args[i];
    };
    auto out = [&](const RationalWittVector& u) {
        if (a.json)
            emit(wrat_to_json(u));
        else
            std::cout << format_wrat(u) << "\n";
    };
    if (a.op == "add") {
        out(wr_add(parse_wrat(ring, arg(0)), parse_wrat(ring, arg(1))));
    } else if (a.op == "mul") {
        out(wr_mul(parse_wrat(ring, arg(0)), parse_wrat(ring, arg(1))));
    } else if (a.op == "neg") {
        out(wr_neg(parse_wrat(ring, arg(0))));
    } else if (a.op == "frob") {
        out(wr_frobenius(a.index, parse_wrat(ring, arg(0))));
    } else if (a.op == "versch") {
        out(wr_verschiebung(a.index, parse_wrat(ring, arg(0))));
    } else if (a.op == "ghost") {
        GhostVector g = wr_ghost(parse_wrat(ring, arg(0)), a.depth);
        if (a.json)
            emit(ghost_to_json(g));
        else
            std::cout << format_ghost(g) << "\n";
    } else if (a.op == "phi") {
        out(phi_p(BigInt(a.prime)));
    } else if (a.op == "phicheck") {
        GhostVector g = phi_p_minus_scalar_check(BigInt(a.prime), a.depth);
        if (a.json)
            emit(ghost_to_json(g));
        else
            std::cout << format_ghost(g) << "\n";
    } else if (a.op == "embed") {
        TruncatedWittVector u = wr_embed_truncated(parse_wrat(ring, arg(0)), a.depth);
        if (a.json)
            emit(witt_to_json(u));
        else
            std::cout << format_witt(u) << "\n";
    } else {
        throw CLI::ValidationError("wrat", "unknown operation: " + a.op);
    }
    return 0;
}

struct GroupRingArgs {
    std::string op;
    std::string group;
    int64_t prime = 2;
    std::string ring = "Q";
    std::string images;
    bool json = false;
    std::vector<std::string> args;
};

GroupRingElement parse_gr_arg(const FgAbelianGroup& g, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("rank")) j["rank"] = g.rank;
    if (!j.contains("torsion")) j["torsion"] = g.torsion;
    GroupRingElement x = group_ring_from_json(j);
    if (x.group != g) throw DomainError("group-mismatch", "element group differs from --group");
    return x;
}

int run_groupring(const GroupRingArgs& a) {
    FgAbelianGroup g = parse_group(a.group);
    auto arg = [&](size_t i) -> const std::string& {
        if (i >= a.args.size()) throw DomainError("missing-argument", "operation needs more inputs");
        return a.args[i];
    };
    auto out = [&](const GroupRingElement& x) { emit(group_ring_to_json(x)); };
    if (a.op == "mul") {
        out(gr_mul(parse_gr_arg(g, arg(0)), parse_gr_arg(g, arg(1))));
    } else if (a.op == "add") {
        out(gr_add(parse_gr_arg(g, arg(0)), parse_gr_arg(g, arg(1))));
    } else if (a.op == "frob") {
        out(gr_frobenius_lift(a.prime, parse_gr_arg(g, arg(0))));
    } else if (a.op == "congruence") {
        out(frobenius_congruence_check(a.prime, parse_gr_arg(g, arg(0))));
    } else if (a.op == "towitt") {
        RingDescriptor ring = RingDescriptor::parse(a.ring);
        std::vector<RingElement> images;
        size_t start = 0;
        while (start <= a.images.size() && !a.images.empty()) {
            size_t comma = a.images.find(',', start);
            if (comma == std::string::npos) comma = a.images.size();
            images.push_back(parse_element(ring, a.images.substr(start, comma - start)));
            start = comma + 1;
            if (start > a.images.size()) break;
        }
        WittAssignment asg(g, ring, std::move(images));
        RationalWittVector w = to_witt(parse_gr_arg(g, arg(0)), asg);
        if (a.json)
            emit(wrat_to_json(w));
        else
            std::cout << format_wrat(w) << "\n";
    } else {
        throw CLI::ValidationError("groupring", "unknown operation: " + a.op);
    }
    return 0;
}

struct AbelianArgs {
    std::string op;
    std::string group;
    std::string matrix;
    std::string basis;
    std::string basis_big;
    std::string chain;
    unsigned rank = 2;
    int64_t index = 1;
    int64_t index_big = 1;
    bool json = false;
};

std::vector<int64_t> parse_int_list(const std::string& text) {
    std::vector<int64_t> out;
    size_t start = 0;
    while (start < text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(std::stoll(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

int run_abelian(const AbelianArgs& a) {
    auto out_group = [&](const FgAbelianGroup& g) {
        if (a.json)
            emit(with_schema(group_to_json(g)));
        else
            std::cout << format_group(g) << "\n";
    };
    if (a.op == "snf") {
        IntegerMatrix m = matrix_from_json(nlohmann::json::parse(a.matrix));
        SmithDecomposition s = smith_normal_form(m);
        emit(with_schema({{"U", matrix_to_json(s.U)},
                          {"D", matrix_to_json(s.D)},
                          {"V", matrix_to_json(s.V)}}));
    } else if (a.op == "ext") {
        out_group(ext_to_Z(parse_group(a.group)));
    } else if (a.op == "hom") {
        out_group(hom_to_Z(parse_group(a.group)));
    } else if (a.op == "pi0dual") {
        out_group(pi0_path_dual(parse_group(a.group)));
    } else if (a.op == "pi0spec") {
        out_group(pi0_spec_group_algebra(parse_group(a.group)));
    } else if (a.op == "covers") {
        auto lattices = enumerate_overlattices(a.rank, a.index);
        if (a.json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& N : lattices) arr.push_back(overlattice_to_json(N));
            emit(with_schema({{"count", lattices.size()}, {"overlattices", arr}}));
        } else {
            std::cout << lattices.size() << " overlattices of index " << a.index << " in rank "
                      << a.rank << "\n";
            for (const auto& N : lattices)
                std::cout << "  deck " << format_group(covering_deck_group(N)) << "  basis/"
                          << a.index << " " << matrix_to_json(N.scaled_basis).dump() << "\n";
        }
    } else if (a.op == "deck") {
        Overlattice N{a.rank, a.index, matrix_from_json(nlohmann::json::parse(a.basis))};
        out_group(covering_deck_group(N));
    } else if (a.op == "transition") {
        Overlattice small{a.rank, a.index, matrix_from_json(nlohmann::json::parse(a.basis))};
        Overlattice big{a.rank, a.index_big, matrix_from_json(nlohmann::json::parse(a.basis_big))};
        GroupHom t = deck_transition(small, big);
        emit(with_schema({{"domain", group_to_json(t.domain)},
                          {"codomain", group_to_json(t.codomain)},
                          {"matrix", matrix_to_json(t.matrix)},
                          {"surjective", t.is_surjective()}}));
    } else if (a.op == "solenoid") {
        SolenoidStages s = solenoid_stage_chain(parse_int_list(a.chain));
        if (a.json) {
            nlohmann::json stages = nlohmann::json::array();
            for (const auto& g : s.stages) stages.push_back(group_to_json(g));
            nlohmann::json trans = nlohmann::json::array();
            for (const auto& t : s.transitions)
                trans.push_back({{"matrix", matrix_to_json(t.matrix)},
                                 {"surjective", t.is_surjective()}});
            emit(with_schema({{"stages", stages},
                              {"transitions", trans},
                              {"partial_limit_count",
                               solenoid_partial_limit_count(s).to_string()}}));
        } else {
            for (size_t j = 0; j < s.stages.size(); ++j) {
                std::cout << "stage " << j + 1 << ": " << format_group(s.stages[j]);
                if (j + 1 < s.stages.size())
                    std::cout << "  <- surjection from stage " << j + 2;
                std::cout << "\n";
            }
            std::cout << "partial limit count: " << solenoid_partial_limit_count(s).to_string()
                      << "\n";
        }
    } else {
        throw CLI::ValidationError("abelian", "unknown operation: " + a.op);
    }
    return 0;
}

struct CohomArgs {
    std::string op;
    std::string group;
    std::string module;
    unsigned module_rank = 0;
    unsigned degree = 1;
    unsigned base_conductor = 4;
    unsigned n = 0;  // 0: use the lcm of the radical exponents
    std::vector<std::string> radicals;
    std::string sigma;
    std::string alpha;
    unsigned zeta_pow = 0;
    unsigned budget = 64;
    bool json = false;
};

KummerExtension parse_extension(const CohomArgs& a) {
    RingDescriptor base = RingDescriptor::cyclotomic_field(a.base_conductor);
    std::vector<KummerRadical> rads;
    for (const auto& r : a.radicals) {
        // grammar: <base-element>^(1/<m>)
        size_t mark = r.rfind("^(1/");
        if (mark == std::string::npos || r.back() != ')')
            throw DomainError("parse-error", "radical grammar is a^(1/m)");
        RingElement radicand = parse_element(base, r.substr(0, mark));
        unsigned m = static_cast<unsigned>(std::stoul(r.substr(mark + 4, r.size() - mark - 5)));
        rads.push_back({radicand, m});
    }
    return KummerExtension(a.base_conductor, std::move(rads));
}

// element grammar: sum of terms "coeff", "y", "y^2", "y0*y1^2", "coeff*y"
KummerExtension::Element parse_kummer_element(const KummerExtension& ext, const std::string& text) {
    KummerExtension::Element acc = ext.zero();
    size_t start = 0;
    bool first = true;
    int pending_sign = 1;
    while (start <= text.size()) {
        size_t next = text.size();
        int next_sign = 1;
        int depth = 0;
        for (size_t i = start; i < text.size(); ++i) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') --depth;
            if (depth == 0 && (text[i] == '+' || text[i] == '-') && i > start) {
                next = i;
                next_sign = text[i] == '-' ? -1 : 1;
                break;
            }
        }
        std::string term = text.substr(start, next - start);
        // strip spaces
        std::string t;
        for (char c : term)
            if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
        if (t.empty() && first) {
            start = next + 1;
            pending_sign = next_sign;
            first = false;
            continue;
        }
        if (!t.empty() && t[0] == '-') {
            pending_sign = -pending_sign;
            t = t.substr(1);
        } else if (!t.empty() && t[0] == '+') {
            t = t.substr(1);
        }
        RingElement coeff = ext.base().one();
        std::vector<unsigned> exps(ext.radicals().size(), 0);
        size_t pos = 0;
        bool saw_anything = false;
        while (pos < t.size()) {
            if (t[pos] == '*') {
                ++pos;
                continue;
            }
            if (t[pos] == 'y') {
                ++pos;
                size_t idx = 0;
                if (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
                    size_t s0 = pos;
                    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
                    idx = std::stoul(t.substr(s0, pos - s0));
                }
                unsigned e = 1;
                if (pos < t.size() && t[pos] == '^') {
                    ++pos;
                    size_t s0 = pos;
                    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
                    e = static_cast<unsigned>(std::stoul(t.substr(s0, pos - s0)));
                }
                if (idx >= ext.radicals().size())
                    throw DomainError("parse-error", "radical index out of range");
                exps[idx] += e;
                saw_anything = true;
            } else {
                // a base coefficient: up to the next 'y' at depth 0
                size_t end = pos;
                int d2 = 0;
                while (end < t.size()) {
                    if (t[end] == '(') ++d2;
                    if (t[end] == ')') --d2;
                    if (d2 == 0 && (t[end] == 'y' || t[end] == '*')) break;
                    ++end;
                }
                std::string c = t.substr(pos, end - pos);
                if (!c.empty() && c.front() == '(' && c.back() == ')')
                    c = c.substr(1, c.size() - 2);
                coeff = ext.base().mul(coeff, parse_element(ext.base(), c));
                pos = end;
                saw_anything = true;
            }
        }
        if (!saw_anything) throw DomainError("parse-error", "empty term in element");
        if (pending_sign < 0) coeff = ext.base().neg(coeff);
        acc = ext.add(acc, ext.monomial(exps, coeff));
        if (next >= text.size()) break;
        start = next + 1;
        pending_sign = next_sign;
        first = false;
    }
    return acc;
}

unsigned pairing_order(const CohomArgs& a, const KummerExtension& ext) {
    if (a.n) return a.n;
    int64_t l = 1;
    for (const auto& r : ext.radicals()) l = std::lcm<int64_t>(l, r.exponent);
    return static_cast<unsigned>(l);
}

uint64_t resolvent_seed() {
    if (const char* env = std::getenv("WITTLAB_RESOLVENT_SEED")) return std::stoull(env);
    return 0;
}

int run_cohom(const CohomArgs& a) {
    if (a.op == "table") {
        FgAbelianGroup g = parse_group(a.group);
        FgAbelianGroup mod_torsion = a.module.empty() ? FgAbelianGroup() : parse_group(a.module);
        FgAbelianGroup module(a.module_rank + mod_torsion.rank, mod_torsion.torsion);
        GModule mod = GModule::trivial(g, module);
        CohomologyResult r = group_cohomology(mod, a.degree);
        if (a.json)
            emit(cohomology_to_json(r));
        else
            std::cout << "H^" << a.degree << " = " << format_group(r.invariants) << "\n";
    } else if (a.op == "kummer") {
        KummerExtension ext = parse_extension(a);
        GaloisElement sigma{parse_int_list(a.sigma)};
        auto alpha = parse_kummer_element(ext, a.alpha);
        unsigned n = pairing_order(a, ext);
        int64_t k = kummer_pairing(ext, sigma, alpha, n);
        if (a.json)
            emit(with_schema({{"exponent", k}, {"n", n}}));
        else
            std::cout << "pairing exponent " << k << " (zeta_" << n << "^" << k << ")\n";
    } else if (a.op == "pairing-matrix") {
        KummerExtension ext = parse_extension(a);
        IntegerMatrix m = kummer_pairing_matrix(ext, pairing_order(a, ext));
        emit(with_schema({{"matrix", matrix_to_json(m)}}));
    } else if (a.op == "hilbert90") {
        KummerExtension ext = parse_extension(a);
        RingElement zeta = ext.root_of_unity(ext.radicals()[0].exponent);
        zeta = ext.base().pow(zeta, a.zeta_pow);
        auto alpha = hilbert90_resolvent(ext, zeta, a.budget, resolvent_seed());
        nlohmann::json coords = nlohmann::json::array();
        for (const auto& c : alpha) coords.push_back(ext.base().to_string(c));
        emit(with_schema({{"alpha_coordinates", coords},
                          {"verified", true},
                          {"zeta", ext.base().to_string(zeta)}}));
    } else if (a.op == "symbol") {
        KummerExtension ext = parse_extension(a);
        Cocycle c = galois_symbol(Rational::from_string(a.alpha), ext, pairing_order(a, ext));
        emit(with_schema({{"cocycle", cocycle_to_json(c)}}));
    } else {
        throw CLI::ValidationError("cohom", "unknown operation: " + a.op);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Witt vector and Kummer-Galois calculator"};
    app.require_subcommand(1);

    WittArgs wa;
    auto* witt = app.add_subcommand("witt", "truncated big Witt vectors");
    witt->add_option("op", wa.op, "add|mul|neg|ghost|ghostinv|teich|frob|versch")->required();
    witt->add_option("--ring", wa.ring, "ring descriptor (Z, Q, Z/12, Fp/7, Qzeta/5)");
    witt->add_option("--depth,-N", wa.depth, "truncation depth");
    witt->add_option("--index,-m", wa.index, "Frobenius/Verschiebung index");
    witt->add_flag("--json", wa.json, "JSON output");
    witt->add_option("args", wa.args, "series / element literals");

    WratArgs ra;
    auto* wrat = app.add_subcommand("wrat", "rational Witt vectors");
    wrat->add_option("op", ra.op, "add|mul|neg|frob|versch|ghost|phi|phicheck|embed")->required();
    wrat->add_option("--ring", ra.ring, "ring descriptor");
    wrat->add_option("--depth,-N", ra.depth, "ghost/embedding depth");
    wrat->add_option("--index,-m", ra.index, "Frobenius/Verschiebung index");
    wrat->add_option("--prime,-p", ra.prime, "prime for phi");
    wrat->add_flag("--json", ra.json, "JSON output");
    wrat->add_option("args", ra.args, "fraction literals (num)/(den)");

    GroupRingArgs ga;
    auto* gr = app.add_subcommand("groupring", "integer group rings and Frobenius lifts");
    gr->add_option("op", ga.op, "add|mul|frob|congruence|towitt")->required();
    gr->add_option("--group", ga.group, "group descriptor rank=r;torsion=d1,d2")->required();
    gr->add_option("--prime,-p", ga.prime, "prime for frob/congruence");
    gr->add_option("--ring", ga.ring, "target ring for towitt");
    gr->add_option("--images", ga.images, "comma-separated generator images for towitt");
    gr->add_flag("--json", ga.json, "JSON output");
    gr->add_option("args", ga.args, "group ring elements as JSON");

    AbelianArgs aa;
    auto* ab = app.add_subcommand("abelian", "Smith forms, Ext/Hom, covers, solenoid stages");
    ab->add_option("op", aa.op, "snf|ext|hom|pi0dual|pi0spec|covers|deck|transition|solenoid")
        ->required();
    ab->add_option("--group", aa.group, "group descriptor");
    ab->add_option("--matrix", aa.matrix, "integer matrix as JSON rows");
    ab->add_option("--rank", aa.rank, "ambient rank for covers/deck");
    ab->add_option("--index", aa.index, "covering index");
    ab->add_option("--index-big", aa.index_big, "index of the bigger overlattice (transition)");
    ab->add_option("--basis", aa.basis, "scaled basis (index * basis) as JSON rows");
    ab->add_option("--basis-big", aa.basis_big, "scaled basis of the bigger overlattice");
    ab->add_option("--chain", aa.chain, "divisibility chain, e.g. 2,4,8");
    ab->add_flag("--json", aa.json, "JSON output");

    CohomArgs ca;
    auto* co = app.add_subcommand("cohom", "group cohomology and Kummer-Galois computations");
    co->add_option("op", ca.op, "table|kummer|pairing-matrix|hilbert90|symbol")->required();
    co->add_option("--group", ca.group, "finite group, e.g. 6 or 2,4");
    co->add_option("--module", ca.module, "coefficient torsion, e.g. 4");
    co->add_option("--module-rank", ca.module_rank, "free rank of the coefficients");
    co->add_option("--degree", ca.degree, "cohomological degree <= 3");
    co->add_option("--base-conductor", ca.base_conductor, "cyclotomic base conductor");
    co->add_option("--n", ca.n, "Kummer exponent n");
    co->add_option("--radical", ca.radicals, "radical a^(1/m), repeatable");
    co->add_option("--sigma", ca.sigma, "Galois element exponents, comma-separated");
    co->add_option("--alpha", ca.alpha, "extension element (kummer) or rational (symbol)");
    co->add_option("--zeta-pow", ca.zeta_pow, "power of zeta_n for hilbert90");
    co->add_option("--budget", ca.budget, "resolvent trial budget");
    co->add_flag("--json", ca.json, "JSON output");

    std::string suite = "all";
    uint64_t seed = 7;
    auto* ve = app.add_subcommand("verify", "run the seeded property battery");
    ve->add_option("--suite", suite, "witt|wrat|lambda|dual|cohom|all");
    ve->add_option("--seed", seed, "random seed (default 7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (witt->parsed()) return run_witt(wa);
        if (wrat->parsed()) return run_wrat(ra);
        if (gr->parsed()) return run_groupring(ga);
        if (ab->parsed()) return run_abelian(aa);
        if (co->parsed()) return run_cohom(ca);
        if (ve->parsed()) {
            auto reports = run_verify(suite, seed);
            std::cout << format_verify_report(reports, seed);
            return verify_all_passed(reports) ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << nlohmann::json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const wittlab::DomainError& e) {
        std::cerr << nlohmann::json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << nlohmann::json{{"error", "parse-error"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}

#pragma once

// Text and JSON encodings. Polynomials use the ascending grammar
// "1 - 2t + 3t^2" with exact rational coefficients "p/q"; cyclotomic
// coefficients are polynomials in z, parenthesized when attached to a power
// of t. JSON payloads carry a schema_version field and encode coefficients
// as exact strings.

#include <json.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "wittlab/cohomology.hpp"
#include "wittlab/dualtop.hpp"
#include "wittlab/grouplambda.hpp"
#include "wittlab/wittrat.hpp"

namespace wittlab {

inline constexpr int kSchemaVersion = 1;

namespace detail {

struct Scanner {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw DomainError("parse-error", "expected a number");
        return std::string(s.substr(start, pos - start));
    }
};

// rational literal: digits [/ digits]
inline Rational scan_rational(Scanner& sc) {
    std::string num = sc.number();
    if (sc.consume('/')) return Rational(BigInt::from_string(num), BigInt::from_string(sc.number()));
    return Rational(BigInt::from_string(num));
}

// one term of a polynomial in `var`: [coeff][*][var[^k]]
struct Term {
    Rational coeff_rational{1};
    std::vector<std::pair<unsigned, Rational>> cyclo_parts;  // (z-power, coeff)
    bool has_cyclo = false;
    unsigned degree = 0;
};

// z-polynomial body, terminated by ')' or end of input: [+-] coeff [z[^k]] ...
inline void scan_cyclo_body(Scanner& sc, Term& term) {
    term.has_cyclo = true;
    bool first = true;
    while (true) {
        int sign = 1;
        char p = sc.peek();
        if (p == '-') {
            sc.consume('-');
            sign = -1;
        } else if (p == '+') {
            sc.consume('+');
        } else if (!first) {
            break;
        }
        Rational c(1);
        bool saw = false;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            c = scan_rational(sc);
            saw = true;
        }
        sc.consume('*');
        unsigned zdeg = 0;
        if (sc.peek() == 'z') {
            ++sc.pos;
            zdeg = 1;
            if (sc.consume('^')) zdeg = static_cast<unsigned>(std::stoul(sc.number()));
        } else if (!saw) {
            throw DomainError("parse-error", "expected a coefficient");
        }
        if (sign < 0) c = -c;
        term.cyclo_parts.emplace_back(zdeg, c);
        first = false;
    }
}

inline Term scan_term(Scanner& sc, char var) {
    Term t;
    bool saw_coeff = false;
    if (sc.peek() == '(') {
        sc.consume('(');
        scan_cyclo_body(sc, t);
        if (!sc.consume(')')) throw DomainError("parse-error", "unbalanced parenthesis");
        saw_coeff = true;
    } else {
        Rational c(1);
        bool saw_digit = false;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            c = scan_rational(sc);
            saw_digit = true;
        }
        sc.consume('*');
        if (sc.peek() == 'z' && var != 'z') {
            ++sc.pos;
            unsigned zdeg = 1;
            if (sc.consume('^')) zdeg = static_cast<unsigned>(std::stoul(sc.number()));
            t.has_cyclo = true;
            t.cyclo_parts.emplace_back(zdeg, c);
            saw_coeff = true;
        } else if (saw_digit) {
            t.coeff_rational = c;
            saw_coeff = true;
        }
    }
    sc.consume('*');
    if (sc.peek() == var) {
        ++sc.pos;
        if (sc.consume('^')) {
            t.degree = static_cast<unsigned>(std::stoul(sc.number()));
        } else {
            t.degree = 1;
        }
    } else if (!saw_coeff) {
        throw DomainError("parse-error", "expected a term");
    }
    return t;
}

inline RingElement term_coefficient(const Term& t, const RingDescriptor& ring) {
    if (t.has_cyclo) {
        if (ring.kind() != RingDescriptor::Kind::cyclotomic_field)
            throw DomainError("parse-error", "z-coefficients only make sense in cyclotomic fields");
        RingElement acc = ring.zero();
        RingElement z = ring.zeta();
        for (const auto& [deg, c] : t.cyclo_parts)
            acc = ring.add(acc, ring.mul(ring.from_rational(c), ring.pow(z, deg)));
        return acc;
    }
    const Rational& v = t.coeff_rational;
    return v.is_integer() ? ring.from_integer(v.num()) : ring.from_rational(v);
}

}  // namespace detail

// ring element literal; cyclotomic elements are z-polynomials
inline RingElement parse_element(const RingDescriptor& ring, std::string_view text) {
    detail::Scanner sc{text};
    RingElement acc = ring.zero();
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.consume('-'))
            sign = -1;
        else if (sc.consume('+'))
            sign = 1;
        else if (!first)
            throw DomainError("parse-error", "expected + or -");
        detail::Term t = detail::scan_term(sc, '\0');
        RingElement c = detail::term_coefficient(t, ring);
        if (sign < 0) c = ring.neg(c);
        acc = ring.add(acc, c);
        first = false;
    }
    if (first) throw DomainError("parse-error", "empty element literal");
    return acc;
}

inline Polynomial parse_polynomial(const RingDescriptor& ring, std::string_view text,
                                   char var = 't') {
    detail::Scanner sc{text};
    std::vector<detail::Term> terms;
    bool first = true;
    std::vector<int> signs;
    while (!sc.done()) {
        int sign = 1;
        if (sc.consume('-'))
            sign = -1;
        else if (sc.consume('+'))
            sign = 1;
        else if (!first)
            throw DomainError("parse-error", "expected + or - between terms");
        terms.push_back(detail::scan_term(sc, var));
        signs.push_back(sign);
        first = false;
    }
    if (terms.empty()) throw DomainError("parse-error", "empty polynomial");
    unsigned deg = 0;
    for (const auto& t : terms) deg = std::max(deg, t.degree);
    std::vector<RingElement> c(deg + 1, ring.zero());
    for (size_t i = 0; i < terms.size(); ++i) {
        RingElement v = detail::term_coefficient(terms[i], ring);
        if (signs[i] < 0) v = ring.neg(v);
        c[terms[i].degree] = ring.add(c[terms[i].degree], v);
    }
    return Polynomial(ring, std::move(c));
}

namespace detail {

inline bool coefficient_is_single_term(const std::string& s) {
    return s.find_first_of("+- ") == std::string::npos;
}

}  // namespace detail

inline std::string format_polynomial(const Polynomial& f, char var = 't') {
    const RingDescriptor& R = f.ring();
    if (f.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        RingElement c = f.coeffs()[i];
        if (R.is_zero(c)) continue;
        std::string cs = R.to_string(c);
        bool neg = !cs.empty() && cs[0] == '-' && detail::coefficient_is_single_term(cs.substr(1));
        if (neg) cs = cs.substr(1);
        std::string body;
        if (i == 0) {
            body = detail::coefficient_is_single_term(cs) ? cs : "(" + cs + ")";
        } else {
            if (cs == "1")
                body = "";
            else
                body = detail::coefficient_is_single_term(cs) ? cs : "(" + cs + ")";
            body += var;
            if (i > 1) body += "^" + std::to_string(i);
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

// ---- Witt vectors ----

inline std::string format_witt(const TruncatedWittVector& u) {
    return format_polynomial(u.to_series());
}

inline TruncatedWittVector parse_witt(const RingDescriptor& ring, std::string_view text,
                                      unsigned depth) {
    Polynomial f = parse_polynomial(ring, text);
    if (f.is_zero() || !ring.is_one(f.constant_term()))
        throw DomainError("parse-error", "Witt vector series must have constant term 1");
    if (f.degree() > static_cast<int>(depth))
        throw DomainError("parse-error", "series degree exceeds the truncation depth");
    return TruncatedWittVector::from_series(f, depth);
}

inline nlohmann::json witt_to_json(const TruncatedWittVector& u) {
    nlohmann::json tail = nlohmann::json::array();
    for (const auto& a : u.tail) tail.push_back(u.ring.to_string(a));
    return {{"schema_version", kSchemaVersion},
            {"ring", u.ring.to_string()},
            {"N", u.depth},
            {"tail", tail}};
}

inline TruncatedWittVector witt_from_json(const nlohmann::json& j) {
    RingDescriptor ring = RingDescriptor::parse(j.at("ring").get<std::string>());
    unsigned depth = j.at("N").get<unsigned>();
    TruncatedWittVector u(ring, depth);
    const auto& tail = j.at("tail");
    for (size_t i = 0; i < tail.size() && i < depth; ++i)
        u.tail[i] = parse_element(ring, tail[i].get<std::string>());
    return u;
}

inline nlohmann::json ghost_to_json(const GhostVector& g) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : g.components) comps.push_back(g.ring.to_string(c));
    return {{"schema_version", kSchemaVersion},
            {"ring", g.ring.to_string()},
            {"N", g.depth},
            {"components", comps}};
}

inline std::string format_ghost(const GhostVector& g) {
    std::string out = "(";
    for (unsigned i = 0; i < g.depth; ++i) {
        if (i) out += ", ";
        out += g.ring.to_string(g.components[i]);
    }
    return out + ")";
}

// ---- rational Witt vectors ----

inline std::string format_wrat(const RationalWittVector& u) {
    if (u.den.is_one()) return format_polynomial(u.num);
    return "(" + format_polynomial(u.num) + ")/(" + format_polynomial(u.den) + ")";
}

inline RationalWittVector parse_wrat(const RingDescriptor& ring, std::string_view text) {
    // "(num)/(den)" with balanced parentheses, or a plain polynomial,
    // possibly wrapped in one redundant pair of parentheses
    if (!text.empty() && text.front() == '(') {
        int depth = 0;
        for (size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') --depth;
            if (depth == 0) {
                size_t rest = i + 1;
                while (rest < text.size() && std::isspace(static_cast<unsigned char>(text[rest])))
                    ++rest;
                if (rest < text.size() && text[rest] == '/') {
                    std::string_view num = text.substr(1, i - 1);
                    std::string_view den = text.substr(rest + 1);
                    size_t l = den.find('(');
                    size_t r = den.rfind(')');
                    if (l == std::string_view::npos || r == std::string_view::npos || l > r)
                        throw DomainError("parse-error", "expected (num)/(den)");
                    return wr_normalize(parse_polynomial(ring, num),
                                        parse_polynomial(ring, den.substr(l + 1, r - l - 1)));
                }
                if (rest >= text.size())
                    return wr_normalize(parse_polynomial(ring, text.substr(1, i - 1)),
                                        Polynomial::constant(ring, ring.one()));
                break;
            }
        }
    }
    return wr_normalize(parse_polynomial(ring, text),
                        Polynomial::constant(ring, ring.one()));
}

inline nlohmann::json wrat_to_json(const RationalWittVector& u) {
    auto poly_coeffs = [&](const Polynomial& f) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : f.coeffs()) a.push_back(u.ring.to_string(c));
        return a;
    };
    return {{"schema_version", kSchemaVersion},
            {"ring", u.ring.to_string()},
            {"num", poly_coeffs(u.num)},
            {"den", poly_coeffs(u.den)}};
}

inline RationalWittVector wrat_from_json(const nlohmann::json& j) {
    RingDescriptor ring = RingDescriptor::parse(j.at("ring").get<std::string>());
    auto read_poly = [&](const nlohmann::json& a) {
        std::vector<RingElement> c;
        for (const auto& s : a) c.push_back(parse_element(ring, s.get<std::string>()));
        return Polynomial(ring, std::move(c));
    };
    return wr_normalize(read_poly(j.at("num")), read_poly(j.at("den")));
}

// ---- groups and group rings ----

inline std::string format_group(const FgAbelianGroup& g) {
    if (g.is_trivial()) return "trivial";
    std::string out;
    if (g.rank > 0) out = "rank=" + std::to_string(g.rank);
    if (!g.torsion.empty()) {
        if (!out.empty()) out += ";";
        out += "torsion=";
        for (size_t i = 0; i < g.torsion.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(g.torsion[i]);
        }
    }
    return out;
}

inline FgAbelianGroup parse_group(std::string_view text) {
    if (text == "trivial" || text == "0") return FgAbelianGroup();
    unsigned rank = 0;
    std::vector<int64_t> torsion;
    auto parse_list = [&torsion](std::string_view v) {
        size_t start = 0;
        while (start < v.size()) {
            size_t comma = v.find(',', start);
            if (comma == std::string_view::npos) comma = v.size();
            torsion.push_back(std::stoll(std::string(v.substr(start, comma - start))));
            start = comma + 1;
        }
    };
    if (text.find('=') == std::string_view::npos) {
        // bare list of invariant factors, e.g. "6" or "2,4"
        parse_list(text);
        return FgAbelianGroup(0, std::move(torsion));
    }
    size_t start = 0;
    while (start < text.size()) {
        size_t semi = text.find(';', start);
        if (semi == std::string_view::npos) semi = text.size();
        std::string_view part = text.substr(start, semi - start);
        if (part.rfind("rank=", 0) == 0)
            rank = static_cast<unsigned>(std::stoul(std::string(part.substr(5))));
        else if (part.rfind("torsion=", 0) == 0)
            parse_list(part.substr(8));
        else if (!part.empty())
            throw DomainError("parse-error", "bad group descriptor segment");
        start = semi + 1;
    }
    return FgAbelianGroup(rank, std::move(torsion));
}

inline nlohmann::json group_to_json(const FgAbelianGroup& g) {
    return {{"rank", g.rank}, {"torsion", g.torsion}};
}

inline nlohmann::json group_ring_to_json(const GroupRingElement& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : x.terms)
        terms.push_back({{"exp", m}, {"coeff", c.to_string()}});
    return {{"schema_version", kSchemaVersion},
            {"rank", x.group.rank},
            {"torsion", x.group.torsion},
            {"terms", terms}};
}

inline GroupRingElement group_ring_from_json(const nlohmann::json& j) {
    FgAbelianGroup g(j.at("rank").get<unsigned>(), j.at("torsion").get<std::vector<int64_t>>());
    GroupRingElement x(g);
    for (const auto& t : j.at("terms"))
        x.add_term(t.at("exp").get<std::vector<int64_t>>(),
                   BigInt::from_string(t.at("coeff").get<std::string>()));
    return x;
}

// ---- matrices, overlattices, cohomology ----

inline nlohmann::json matrix_to_json(const IntegerMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < m.cols; ++j) {
            auto v = m.at(i, j).to_int64();
            if (!v) throw DomainError("overflow", "matrix entry exceeds 64 bits");
            row.push_back(*v);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntegerMatrix matrix_from_json(const nlohmann::json& j) {
    std::vector<std::vector<int64_t>> rows;
    for (const auto& r : j) rows.push_back(r.get<std::vector<int64_t>>());
    return IntegerMatrix::from_rows(rows);
}

inline nlohmann::json overlattice_to_json(const Overlattice& N) {
    return {{"schema_version", kSchemaVersion},
            {"rank", N.rank},
            {"index", N.index},
            {"scaled_basis", matrix_to_json(N.scaled_basis)}};
}

inline nlohmann::json cocycle_to_json(const Cocycle& c) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : c.values) values.push_back(v);
    return {{"degree", c.degree},
            {"group", group_to_json(c.group)},
            {"module", group_to_json(c.module)},
            {"is_cocycle", c.is_cocycle},
            {"values", values}};
}

inline nlohmann::json cohomology_to_json(const CohomologyResult& r) {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& c : r.representatives) reps.push_back(cocycle_to_json(c));
    return {{"schema_version", kSchemaVersion},
            {"invariants", group_to_json(r.invariants)},
            {"representatives", reps}};
}

}  // namespace wittlab

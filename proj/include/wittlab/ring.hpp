#pragma once

// Runtime-described coefficient rings and their elements. A RingDescriptor
// names one of: Z, Q, Z/n, F_p, Q(zeta_N), Frac(R); a RingElement carries the
// payload for exactly one descriptor and only interoperates under it.
// Elements are immutable values; every operation is a pure function.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wittlab/bigint.hpp"
#include "wittlab/cyclo.hpp"
#include "wittlab/rational.hpp"

namespace wittlab {

// Domain errors carry a short machine-readable kind next to the message.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class RingElement;

class RingDescriptor {
public:
    enum class Kind {
        integers,
        rationals,
        integers_mod,
        prime_field,
        cyclotomic_field,
        fraction_field,
    };

    RingDescriptor() : kind_(Kind::integers) {}

    static RingDescriptor integers() { return RingDescriptor(); }

    static RingDescriptor rationals() {
        RingDescriptor r;
        r.kind_ = Kind::rationals;
        return r;
    }

    static RingDescriptor integers_mod(BigInt n) {
        if (n < BigInt(2)) throw DomainError("bad-modulus", "IntegersMod requires n >= 2");
        RingDescriptor r;
        r.kind_ = Kind::integers_mod;
        r.modulus_ = std::move(n);
        return r;
    }

    static RingDescriptor prime_field(BigInt p) {
        if (!is_prime(p)) throw DomainError("not-prime", "PrimeField requires a prime modulus");
        RingDescriptor r;
        r.kind_ = Kind::prime_field;
        r.modulus_ = std::move(p);
        return r;
    }

    static RingDescriptor cyclotomic_field(unsigned conductor) {
        if (conductor == 0)
            throw DomainError("bad-conductor", "CyclotomicField requires conductor >= 1");
        RingDescriptor r;
        r.kind_ = Kind::cyclotomic_field;
        r.conductor_ = conductor;
        return r;
    }

    static RingDescriptor fraction_field(const RingDescriptor& base) {
        if (!base.is_integral_domain())
            throw DomainError("not-a-domain", "FractionField requires an integral domain base");
        RingDescriptor r;
        r.kind_ = Kind::fraction_field;
        r.base_ = std::make_shared<RingDescriptor>(base);
        return r;
    }

    Kind kind() const { return kind_; }
    const BigInt& modulus() const { return modulus_; }
    unsigned conductor() const { return conductor_; }
    const RingDescriptor& base() const { return *base_; }

    bool is_integral_domain() const {
        switch (kind_) {
            case Kind::integers:
            case Kind::rationals:
            case Kind::prime_field:
            case Kind::cyclotomic_field:
            case Kind::fraction_field:
                return true;
            case Kind::integers_mod:
                return is_prime(modulus_);
        }
        return false;
    }

    bool is_field() const {
        switch (kind_) {
            case Kind::rationals:
            case Kind::prime_field:
            case Kind::cyclotomic_field:
            case Kind::fraction_field:
                return true;
            case Kind::integers_mod:
                return is_prime(modulus_);
            case Kind::integers:
                return false;
        }
        return false;
    }

    bool is_integrally_closed() const {
        if (kind_ == Kind::integers) return true;
        if (kind_ == Kind::integers_mod) return is_prime(modulus_);
        return is_field();
    }

    bool has_characteristic_zero() const {
        switch (kind_) {
            case Kind::integers:
            case Kind::rationals:
            case Kind::cyclotomic_field:
                return true;
            case Kind::fraction_field:
                return base_->has_characteristic_zero();
            default:
                return false;
        }
    }

    bool contains_rationals() const {
        switch (kind_) {
            case Kind::rationals:
            case Kind::cyclotomic_field:
                return true;
            case Kind::fraction_field:
                return base_->has_characteristic_zero();
            default:
                return false;
        }
    }

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
        if (a.kind_ != b.kind_) return false;
        switch (a.kind_) {
            case Kind::integers_mod:
            case Kind::prime_field:
                return a.modulus_ == b.modulus_;
            case Kind::cyclotomic_field:
                return a.conductor_ == b.conductor_;
            case Kind::fraction_field:
                return *a.base_ == *b.base_;
            default:
                return true;
        }
    }
    friend bool operator!=(const RingDescriptor& a, const RingDescriptor& b) { return !(a == b); }

    std::string to_string() const {
        switch (kind_) {
            case Kind::integers:
                return "Z";
            case Kind::rationals:
                return "Q";
            case Kind::integers_mod:
                return "Z/" + modulus_.to_string();
            case Kind::prime_field:
                return "Fp/" + modulus_.to_string();
            case Kind::cyclotomic_field:
                return "Qzeta/" + std::to_string(conductor_);
            case Kind::fraction_field:
                return "Frac(" + base_->to_string() + ")";
        }
        return "?";
    }

    // Mini-grammar: Z | Q | Z/<n> | Fp/<p> | Qzeta/<N> | Frac(<desc>)
    static RingDescriptor parse(std::string_view s) {
        try {
            if (s == "Z") return integers();
            if (s == "Q") return rationals();
            if (s.rfind("Z/", 0) == 0) return integers_mod(BigInt::from_string(s.substr(2)));
            if (s.rfind("Fp/", 0) == 0) return prime_field(BigInt::from_string(s.substr(3)));
            if (s.rfind("Qzeta/", 0) == 0) {
                auto n = BigInt::from_string(s.substr(6)).to_int64();
                if (!n || *n <= 0) throw DomainError("bad-conductor", "bad cyclotomic conductor");
                return cyclotomic_field(static_cast<unsigned>(*n));
            }
            if (s.rfind("Frac(", 0) == 0 && s.back() == ')')
                return fraction_field(parse(s.substr(5, s.size() - 6)));
        } catch (const std::invalid_argument&) {
            // fall through to the uniform error below
        }
        throw DomainError("bad-ring", "unrecognized ring descriptor: " + std::string(s));
    }

    // ---- element operations (defined after RingElement) ----
    RingElement zero() const;
    RingElement one() const;
    RingElement from_integer(const BigInt& v) const;
    RingElement from_int(int64_t v) const;
    RingElement from_rational(const Rational& v) const;
    RingElement zeta() const;  // cyclotomic generator zeta_N
    RingElement make_fraction(const RingElement& num, const RingElement& den) const;

    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement sub(const RingElement& a, const RingElement& b) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    RingElement neg(const RingElement& a) const;
    RingElement inv(const RingElement& a) const;
    RingElement div(const RingElement& a, const RingElement& b) const;
    RingElement pow(const RingElement& a, int64_t e) const;
    bool is_zero(const RingElement& a) const;
    bool is_one(const RingElement& a) const;
    bool eq(const RingElement& a, const RingElement& b) const;
    bool is_unit(const RingElement& a) const;
    std::string to_string(const RingElement& a) const;
    size_t hash(const RingElement& a) const;

    // exact Rational for payloads that are (or embed) rationals; throws otherwise
    Rational to_rational(const RingElement& a) const;

private:
    Kind kind_;
    BigInt modulus_;
    unsigned conductor_ = 0;
    std::shared_ptr<const RingDescriptor> base_;
};

struct FracPair;

class RingElement {
public:
    RingElement() = default;

private:
    friend class RingDescriptor;
    using Payload =
        std::variant<std::monostate, BigInt, Rational, std::vector<Rational>,
                     std::shared_ptr<const FracPair>>;
    Payload v_;

    explicit RingElement(Payload v) : v_(std::move(v)) {}
};

struct FracPair {
    RingElement num;
    RingElement den;
};

namespace detail {

// rational-coefficient polynomial helpers used for cyclotomic inversion
using QPoly = std::vector<Rational>;

inline void qpoly_strip(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qpoly_strip(r);
    return r;
}

inline QPoly qpoly_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qpoly_strip(a);
    return a;
}

inline QPoly qpoly_rem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qpoly_strip(a);
    }
    return a;
}

// Bezout coefficient u with u*a + v*m = 1, for a coprime to m.
inline QPoly qpoly_inverse_mod(const QPoly& a, const QPoly& m) {
    QPoly r0 = m, r1 = a;
    QPoly u0, u1{Rational(1)};  // coefficients of a
    while (!r1.empty()) {
        // r0 = q*r1 + r
        QPoly q;
        QPoly rem = r0;
        q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rational(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            qpoly_strip(rem);
        }
        qpoly_strip(q);
        QPoly un = qpoly_sub(u0, qpoly_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(un);
    }
    if (r0.size() != 1)
        throw DomainError("not-invertible", "cyclotomic element is not invertible");
    Rational lead = r0[0];
    for (auto& c : u0) c /= lead;
    return u0;
}

}  // namespace detail

// ---- RingDescriptor operation bodies ----

inline RingElement RingDescriptor::zero() const { return from_integer(BigInt(0)); }
inline RingElement RingDescriptor::one() const { return from_integer(BigInt(1)); }
inline RingElement RingDescriptor::from_int(int64_t v) const { return from_integer(BigInt(v)); }

inline RingElement RingDescriptor::from_integer(const BigInt& v) const {
    switch (kind_) {
        case Kind::integers:
            return RingElement(RingElement::Payload{v});
        case Kind::rationals:
            return RingElement(RingElement::Payload{Rational(v)});
        case Kind::integers_mod:
        case Kind::prime_field:
            return RingElement(RingElement::Payload{v.mod_euclid(modulus_)});
        case Kind::cyclotomic_field: {
            std::vector<Rational> c(euler_phi(conductor_), Rational(0));
            if (!c.empty()) c[0] = Rational(v);
            return RingElement(RingElement::Payload{std::move(c)});
        }
        case Kind::fraction_field: {
            auto p = std::make_shared<FracPair>();
            p->num = base_->from_integer(v);
            p->den = base_->one();
            return RingElement(RingElement::Payload{std::move(p)});
        }
    }
    throw std::logic_error("unreachable");
}

inline RingElement RingDescriptor::from_rational(const Rational& v) const {
    switch (kind_) {
        case Kind::rationals:
            return RingElement(RingElement::Payload{v});
        case Kind::cyclotomic_field: {
            std::vector<Rational> c(euler_phi(conductor_), Rational(0));
            if (!c.empty()) c[0] = v;
            return RingElement(RingElement::Payload{std::move(c)});
        }
        case Kind::integers:
            if (!v.is_integer())
                throw DomainError("not-integral", "rational value outside Z");
            return from_integer(v.num());
        case Kind::fraction_field:
            if (base_->has_characteristic_zero())
                return make_fraction(base_->from_integer(v.num()), base_->from_integer(v.den()));
            throw DomainError("no-rationals", "ring does not contain the rationals");
        default:
            throw DomainError("no-rationals", "ring does not contain the rationals");
    }
}

inline RingElement RingDescriptor::zeta() const {
    if (kind_ != Kind::cyclotomic_field)
        throw DomainError("not-cyclotomic", "zeta only exists in cyclotomic fields");
    std::vector<Rational> c(euler_phi(conductor_), Rational(0));
    if (c.size() == 1) {
        // conductors 1 and 2: zeta is 1 resp. -1
        c[0] = Rational(conductor_ == 1 ? 1 : -1);
    } else {
        c[1] = Rational(1);
    }
    return RingElement(RingElement::Payload{std::move(c)});
}

inline RingElement RingDescriptor::make_fraction(const RingElement& num,
                                                 const RingElement& den) const {
    if (kind_ != Kind::fraction_field)
        throw DomainError("not-a-fraction-field", "make_fraction on non-fraction ring");
    const RingDescriptor& B = *base_;
    if (B.is_zero(den)) throw DomainError("zero-denominator", "fraction with zero denominator");
    RingElement n = num, d = den;
    if (B.is_field()) {
        n = B.div(n, d);
        d = B.one();
    } else {
        // base is Z: reduce and force positive denominator
        BigInt ni = std::get<BigInt>(n.v_), di = std::get<BigInt>(d.v_);
        if (di.sign() < 0) {
            ni = -ni;
            di = -di;
        }
        BigInt g = BigInt::gcd(ni, di);
        if (!g.is_one() && !g.is_zero()) {
            ni = ni.divide_exact(g);
            di = di.divide_exact(g);
        }
        if (ni.is_zero()) di = BigInt(1);
        n = B.from_integer(ni);
        d = B.from_integer(di);
    }
    auto p = std::make_shared<FracPair>();
    p->num = std::move(n);
    p->den = std::move(d);
    return RingElement(RingElement::Payload{std::move(p)});
}

inline RingElement RingDescriptor::add(const RingElement& a, const RingElement& b) const {
    switch (kind_) {
        case Kind::integers:
            return RingElement(RingElement::Payload{std::get<BigInt>(a.v_) + std::get<BigInt>(b.v_)});
        case Kind::rationals:
            return RingElement(
                RingElement::Payload{std::get<Rational>(a.v_) + std::get<Rational>(b.v_)});
        case Kind::integers_mod:
        case Kind::prime_field:
            return RingElement(RingElement::Payload{
                (std::get<BigInt>(a.v_) + std::get<BigInt>(b.v_)).mod_euclid(modulus_)});
        case Kind::cyclotomic_field: {
            auto c = std::get<std::vector<Rational>>(a.v_);
            const auto& d = std::get<std::vector<Rational>>(b.v_);
            for (size_t i = 0; i < c.size(); ++i) c[i] += d[i];
            return RingElement(RingElement::Payload{std::move(c)});
        }
        case Kind::fraction_field: {
            const auto& p = *std::get<std::shared_ptr<const FracPair>>(a.v_);
            const auto& q = *std::get<std::shared_ptr<const FracPair>>(b.v_);
            const RingDescriptor& B = *base_;
            return make_fraction(B.add(B.mul(p.num, q.den), B.mul(q.num, p.den)),
                                 B.mul(p.den, q.den));
        }
    }
    throw std::logic_error("unreachable");
}

inline RingElement RingDescriptor::neg(const RingElement& a) const {
    switch (kind_) {
        case Kind::integers:
            return RingElement(RingElement::Payload{-std::get<BigInt>(a.v_)});
        case Kind::rationals:
            return RingElement(RingElement::Payload{-std::get<Rational>(a.v_)});
        case Kind::integers_mod:
        case Kind::prime_field:
            return RingElement(
                RingElement::Payload{(-std::get<BigInt>(a.v_)).mod_euclid(modulus_)});
        case Kind::cyclotomic_field: {
            auto c = std::get<std::vector<Rational>>(a.v_);
            for (auto& x : c) x = -x;
            return RingElement(RingElement::Payload{std::move(c)});
        }
        case Kind::fraction_field: {
            const auto& p = *std::get<std::shared_ptr<const FracPair>>(a.v_);
            return make_fraction(base_->neg(p.num), p.den);
        }
    }
    throw std::logic_error("unreachable");
}

inline RingElement RingDescriptor::sub(const RingElement& a, const RingElement& b) const {
    return add(a, neg(b));
}

inline RingElement RingDescriptor::mul(const RingElement& a, const RingElement& b) const {
    switch (kind_) {
        case Kind::integers:
            return RingElement(RingElement::Payload{std::get<BigInt>(a.v_) * std::get<BigInt>(b.v_)});
        case Kind::rationals:
            return RingElement(
                RingElement::Payload{std::get<Rational>(a.v_) * std::get<Rational>(b.v_)});
        case Kind::integers_mod:
        case Kind::prime_field:
            return RingElement(RingElement::Payload{
                (std::get<BigInt>(a.v_) * std::get<BigInt>(b.v_)).mod_euclid(modulus_)});
        case Kind::cyclotomic_field: {
            const auto& c = std::get<std::vector<Rational>>(a.v_);
            const auto& d = std::get<std::vector<Rational>>(b.v_);
            return RingElement(
                RingElement::Payload{detail::cyclo_reduce(detail::qpoly_mul(c, d), conductor_)});
        }
        case Kind::fraction_field: {
            const auto& p = *std::get<std::shared_ptr<const FracPair>>(a.v_);
            const auto& q = *std::get<std::shared_ptr<const FracPair>>(b.v_);
            const RingDescriptor& B = *base_;
            return make_fraction(B.mul(p.num, q.num), B.mul(p.den, q.den));
        }
    }
    throw std::logic_error("unreachable");
}

inline bool RingDescriptor::is_zero(const RingElement& a) const {
    switch (kind_) {
        case Kind::integers:
        case Kind::integers_mod:
        case Kind::prime_field:
            return std::get<BigInt>(a.v_).is_zero();
        case Kind::rationals:
            return std::get<Rational>(a.v_).is_zero();
        case Kind::cyclotomic_field: {
            for (const auto& c : std::get<std::vector<Rational>>(a.v_))
                if (!c.is_zero()) return false;
            return true;
        }
        case Kind::fraction_field:
            return base_->is_zero(std::get<std::shared_ptr<const FracPair>>(a.v_)->num);
    }
    throw std::logic_error("unreachable");
}

inline bool RingDescriptor::eq(const RingElement& a, const RingElement& b) const {
    return is_zero(sub(a, b));
}

inline bool RingDescriptor::is_one(const RingElement& a) const { return eq(a, one()); }

inline bool RingDescriptor::is_unit(const RingElement& a) const {
    switch (kind_) {
        case Kind::integers: {
            const BigInt& v = std::get<BigInt>(a.v_);
            return v.is_one() || v.is_neg_one();
        }
        case Kind::integers_mod:
            return BigInt::gcd(std::get<BigInt>(a.v_), modulus_).is_one();
        default:
            return !is_zero(a);
    }
}

inline RingElement RingDescriptor::inv(const RingElement& a) const {
    switch (kind_) {
        case Kind::integers: {
            const BigInt& v = std::get<BigInt>(a.v_);
            if (v.is_one() || v.is_neg_one()) return RingElement(RingElement::Payload{v});
            throw DomainError("not-a-unit", "integer is not invertible");
        }
        case Kind::rationals: {
            const Rational& v = std::get<Rational>(a.v_);
            if (v.is_zero()) throw DomainError("not-a-unit", "zero is not invertible");
            return RingElement(RingElement::Payload{v.inverse()});
        }
        case Kind::integers_mod:
        case Kind::prime_field: {
            BigInt x, y;
            BigInt g = BigInt::gcd_ext(std::get<BigInt>(a.v_), modulus_, x, y);
            if (!g.is_one()) throw DomainError("not-a-unit", "element not invertible mod n");
            return RingElement(RingElement::Payload{x.mod_euclid(modulus_)});
        }
        case Kind::cyclotomic_field: {
            if (is_zero(a)) throw DomainError("not-a-unit", "zero is not invertible");
            detail::QPoly c = std::get<std::vector<Rational>>(a.v_);
            detail::qpoly_strip(c);
            const auto& phi = cyclotomic_coeffs(conductor_);
            detail::QPoly m(phi.size());
            for (size_t i = 0; i < phi.size(); ++i) m[i] = Rational(phi[i]);
            detail::QPoly u = detail::qpoly_inverse_mod(c, m);
            return RingElement(RingElement::Payload{detail::cyclo_reduce(std::move(u), conductor_)});
        }
        case Kind::fraction_field: {
            const auto& p = *std::get<std::shared_ptr<const FracPair>>(a.v_);
            if (base_->is_zero(p.num))
                throw DomainError("not-a-unit", "zero is not invertible");
            return make_fraction(p.den, p.num);
        }
    }
    throw std::logic_error("unreachable");
}

inline RingElement RingDescriptor::div(const RingElement& a, const RingElement& b) const {
    if (kind_ == Kind::integers) {
        const BigInt& x = std::get<BigInt>(a.v_);
        const BigInt& y = std::get<BigInt>(b.v_);
        if (y.is_zero()) throw DomainError("division-by-zero", "division by zero");
        if (!x.divisible_by(y))
            throw DomainError("not-divisible", "inexact integer division");
        return RingElement(RingElement::Payload{x.divide_exact(y)});
    }
    return mul(a, inv(b));
}

inline RingElement RingDescriptor::pow(const RingElement& a, int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    RingElement acc = one(), base = a;
    uint64_t k = static_cast<uint64_t>(e);
    while (k) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

inline Rational RingDescriptor::to_rational(const RingElement& a) const {
    switch (kind_) {
        case Kind::integers:
            return Rational(std::get<BigInt>(a.v_));
        case Kind::rationals:
            return std::get<Rational>(a.v_);
        case Kind::cyclotomic_field: {
            const auto& c = std::get<std::vector<Rational>>(a.v_);
            for (size_t i = 1; i < c.size(); ++i)
                if (!c[i].is_zero())
                    throw DomainError("not-rational", "cyclotomic element is not rational");
            return c.empty() ? Rational(0) : c[0];
        }
        case Kind::fraction_field: {
            const auto& p = *std::get<std::shared_ptr<const FracPair>>(a.v_);
            return base_->to_rational(p.num) / base_->to_rational(p.den);
        }
        default:
            throw DomainError("not-rational", "no exact rational value in this ring");
    }
}

inline std::string RingDescriptor::to_string(const RingElement& a) const {
    switch (kind_) {
        case Kind::integers:
        case Kind::integers_mod:
        case Kind::prime_field:
            return std::get<BigInt>(a.v_).to_string();
        case Kind::rationals:
            return std::get<Rational>(a.v_).to_string();
        case Kind::cyclotomic_field: {
            const auto& c = std::get<std::vector<Rational>>(a.v_);
            std::string out;
            for (size_t i = 0; i < c.size(); ++i) {
                if (c[i].is_zero()) continue;
                std::string term;
                Rational v = c[i];
                bool neg = v.sign() < 0;
                if (neg) v = -v;
                if (i == 0)
                    term = v.to_string();
                else {
                    if (!v.is_one()) term = v.to_string() + "*";
                    term += "z";
                    if (i > 1) term += "^" + std::to_string(i);
                }
                if (out.empty())
                    out = neg ? "-" + term : term;
                else
                    out += (neg ? " - " : " + ") + term;
            }
            return out.empty() ? "0" : out;
        }
        case Kind::fraction_field: {
            const auto& p = *std::get<std::shared_ptr<const FracPair>>(a.v_);
            if (base_->is_one(p.den)) return base_->to_string(p.num);
            return "(" + base_->to_string(p.num) + ")/(" + base_->to_string(p.den) + ")";
        }
    }
    throw std::logic_error("unreachable");
}

inline size_t RingDescriptor::hash(const RingElement& a) const {
    switch (kind_) {
        case Kind::integers:
        case Kind::integers_mod:
        case Kind::prime_field:
            return std::get<BigInt>(a.v_).hash();
        case Kind::rationals:
            return std::get<Rational>(a.v_).hash();
        case Kind::cyclotomic_field: {
            size_t h = 7;
            for (const auto& c : std::get<std::vector<Rational>>(a.v_)) h = h * 131 + c.hash();
            return h;
        }
        case Kind::fraction_field: {
            const auto& p = *std::get<std::shared_ptr<const FracPair>>(a.v_);
            return base_->hash(p.num) * 39119 + base_->hash(p.den);
        }
    }
    return 0;
}

}  // namespace wittlab

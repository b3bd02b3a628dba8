#pragma once

// Exact rationals over BigInt, always reduced with positive denominator.

#include <stdexcept>
#include <string>
#include <string_view>

#include "wittlab/bigint.hpp"

namespace wittlab {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static Rational from_string(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    Rational pow(int64_t e) const {
        if (e < 0) return inverse().pow(-e);
        Rational base = *this, acc(1);
        uint64_t k = static_cast<uint64_t>(e);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    size_t hash() const { return num_.hash() * 31 + den_.hash(); }

private:
    BigInt num_, den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
    }
};

}  // namespace wittlab

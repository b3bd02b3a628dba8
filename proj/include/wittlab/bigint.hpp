#pragma once

// Arbitrary-precision signed integers, sign-magnitude with 32-bit limbs.
// Small values (one limb) take fast paths through 64-bit arithmetic.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wittlab {

class BigInt {
public:
    BigInt() = default;

    BigInt(int64_t v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on INT64_MIN
        uint64_t m = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
        push_u64(m);
    }

    static BigInt from_string(std::string_view s) {
        BigInt r;
        bool neg = false;
        size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<uint32_t>(s[i] - '0'));
        }
        if (!r.mag_.empty()) r.sign_ = neg ? -1 : 1;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_neg_one() const { return sign_ == -1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }
    bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return r;
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        if (a.mag_.size() == 1 && b.mag_.size() == 1) {
            uint64_t p = static_cast<uint64_t>(a.mag_[0]) * b.mag_[0];
            r.push_u64(p);
        } else {
            r.mag_ = mul_mag(a.mag_, b.mag_);
        }
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    // Truncated division (C semantics): quotient toward zero, remainder has
    // the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) {
            q = BigInt();
            r = BigInt();
            return;
        }
        std::vector<uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q.mag_ = std::move(qm);
        r.mag_ = std::move(rm);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    // Exact quotient; throws if b does not divide a.
    BigInt divide_exact(const BigInt& b) const {
        BigInt q, r;
        divmod(*this, b, q, r);
        if (!r.is_zero()) throw std::domain_error("BigInt: inexact division");
        return q;
    }

    bool divisible_by(const BigInt& b) const {
        BigInt q, r;
        divmod(*this, b, q, r);
        return r.is_zero();
    }

    // Representative in [0, |n|).
    BigInt mod_euclid(const BigInt& n) const {
        BigInt r = *this % n;
        if (r.sign_ < 0) r = r + n.abs();
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.sign_ == 0 ? 0 : 1;
        b.sign_ = b.sign_ == 0 ? 0 : 1;
        while (!b.is_zero()) {
            BigInt r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    static BigInt lcm(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        return (a * b).abs().divide_exact(gcd(a, b));
    }

    // Extended gcd: g = gcd(a,b) >= 0 with a*x + b*y = g.
    static BigInt gcd_ext(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
        BigInt r0 = a, r1 = b;
        BigInt x0(1), x1(0), y0(0), y1(1);
        while (!r1.is_zero()) {
            BigInt q, r;
            divmod(r0, r1, q, r);
            r0 = std::move(r1);
            r1 = std::move(r);
            BigInt xn = x0 - q * x1;
            x0 = std::move(x1);
            x1 = std::move(xn);
            BigInt yn = y0 - q * y1;
            y0 = std::move(y1);
            y1 = std::move(yn);
        }
        if (r0.sign_ < 0) {
            r0 = -r0;
            x0 = -x0;
            y0 = -y0;
        }
        x = x0;
        y = y0;
        return r0;
    }

    BigInt pow(uint64_t e) const {
        BigInt base = *this, acc(1);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // Exact integer n-th root if *this is a perfect n-th power.
    std::optional<BigInt> nth_root_exact(unsigned n) const {
        if (n == 0) throw std::invalid_argument("BigInt: 0th root");
        if (is_zero()) return BigInt(0);
        if (sign_ < 0 && n % 2 == 0) return std::nullopt;
        BigInt m = abs();
        // binary search for floor root
        BigInt lo(1), hi(2);
        while (hi.pow(n) < m) hi = hi * BigInt(2);
        while (lo < hi) {
            BigInt mid = (lo + hi + BigInt(1)) / BigInt(2);
            if (mid.pow(n) <= m)
                lo = mid;
            else
                hi = mid - BigInt(1);
        }
        if (lo.pow(n) != m) return std::nullopt;
        if (sign_ < 0) lo = -lo;
        return lo;
    }

    std::optional<int64_t> to_int64() const {
        if (mag_.size() > 2) return std::nullopt;
        uint64_t m = 0;
        if (mag_.size() >= 1) m = mag_[0];
        if (mag_.size() == 2) m |= static_cast<uint64_t>(mag_[1]) << 32;
        if (sign_ >= 0) {
            if (m > static_cast<uint64_t>(INT64_MAX)) return std::nullopt;
            return static_cast<int64_t>(m);
        }
        if (m > static_cast<uint64_t>(INT64_MAX) + 1) return std::nullopt;
        return -static_cast<int64_t>(m - 1) - 1;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            // divide by 10^9, collect remainder
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

    size_t hash() const {
        size_t h = static_cast<size_t>(sign_ + 1);
        for (uint32_t limb : mag_) h = h * 1000003u + limb;
        return h;
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;  // little-endian, no trailing zero limbs

    void push_u64(uint64_t m) {
        mag_.clear();
        if (m == 0) return;
        mag_.push_back(static_cast<uint32_t>(m));
        if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
    }

    void mul_small_inplace(uint32_t f) {
        uint64_t carry = 0;
        for (auto& limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * f + carry;
            limb = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }

    void add_small_inplace(uint32_t v) {
        uint64_t carry = v;
        for (size_t i = 0; carry && i < mag_.size(); ++i) {
            uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static void strip(std::vector<uint32_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size());
        uint64_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size());
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
            borrow = cur < 0;
            if (cur < 0) cur += (int64_t{1} << 32);
            r[i] = static_cast<uint32_t>(cur);
        }
        strip(r);
        return r;
    }

    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a[i];
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(r[i + j]) + ai * b[j] + carry;
                r[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.size();
            while (carry) {
                uint64_t cur = static_cast<uint64_t>(r[k]) + carry;
                r[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        strip(r);
        return r;
    }

    // Knuth algorithm D on magnitudes.
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        if (cmp_mag(a, b) < 0) {
            q.clear();
            r = a;
            return;
        }
        if (b.size() == 1) {
            q.assign(a.size(), 0);
            uint64_t rem = 0;
            for (size_t i = a.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            strip(q);
            r.clear();
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        // normalize so the top divisor limb has its high bit set
        int shift = 0;
        for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        std::vector<uint32_t> u = shl_bits(a, shift);
        std::vector<uint32_t> v = shl_bits(b, shift);
        size_t n = v.size(), m = u.size() - n;
        u.push_back(0);
        q.assign(m + 1, 0);
        const uint64_t base = uint64_t{1} << 32;
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
                borrow = t < 0;
                if (t < 0) t += static_cast<int64_t>(base);
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large: add back
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(cur);
                    c2 = cur >> 32;
                }
                t += static_cast<int64_t>(c2);
            }
            u[j + n] = static_cast<uint32_t>(t);
            q[j] = static_cast<uint32_t>(qhat);
        }
        strip(q);
        u.resize(n);
        r = shr_bits(u, shift);
    }

    static std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<uint32_t> r(a.size() + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << s;
            r[i + 1] = a[i] >> (32 - s);
        }
        strip(r);
        return r;
    }

    static std::vector<uint32_t> shr_bits(std::vector<uint32_t> a, int s) {
        if (s == 0) {
            strip(a);
            return a;
        }
        for (size_t i = 0; i < a.size(); ++i) {
            a[i] >>= s;
            if (i + 1 < a.size()) a[i] |= a[i + 1] << (32 - s);
        }
        strip(a);
        return a;
    }
};

inline BigInt operator*(int64_t a, const BigInt& b) { return BigInt(a) * b; }

}  // namespace wittlab

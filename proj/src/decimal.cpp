#include "trs/decimal.hpp"

#include <bit>
#include <cstring>

#include "trs/errors.hpp"

namespace trs {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Mag = Dec30::Mag;
using Wide = std::array<u64, 8>;

constexpr u64 kTenTo15 = 1'000'000'000'000'000ULL;

int cmp_mag(const Mag& a, const Mag& b) {
    for (int i = 3; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

bool mag_zero(const Mag& a) { return (a[0] | a[1] | a[2] | a[3]) == 0; }

Mag add_mag(const Mag& a, const Mag& b) {
    Mag r{};
    u128 carry = 0;
    for (int i = 0; i < 4; ++i) {
        u128 s = static_cast<u128>(a[i]) + b[i] + carry;
        r[i] = static_cast<u64>(s);
        carry = s >> 64;
    }
    if (carry) throw Error("decimal overflow");
    return r;
}

Mag sub_mag(const Mag& a, const Mag& b) {  // requires a >= b
    Mag r{};
    u128 borrow = 0;
    for (int i = 0; i < 4; ++i) {
        u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
        r[i] = static_cast<u64>(d);
        borrow = (d >> 64) ? 1 : 0;
    }
    return r;
}

Wide mul_mag(const Mag& a, const Mag& b) {
    Wide r{};
    for (int i = 0; i < 4; ++i) {
        u128 carry = 0;
        for (int j = 0; j < 4; ++j) {
            u128 cur = static_cast<u128>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<u64>(cur);
            carry = cur >> 64;
        }
        r[i + 4] = static_cast<u64>(carry);
    }
    return r;
}

// in-place division by a 64-bit divisor, returns remainder
template <std::size_t N>
u64 div_small(std::array<u64, N>& a, u64 d) {
    u128 rem = 0;
    for (int i = static_cast<int>(N) - 1; i >= 0; --i) {
        u128 cur = (rem << 64) | a[i];
        a[i] = static_cast<u64>(cur / d);
        rem = cur % d;
    }
    return static_cast<u64>(rem);
}

template <std::size_t N>
void mul_small(std::array<u64, N>& a, u64 m) {
    u128 carry = 0;
    for (std::size_t i = 0; i < N; ++i) {
        u128 cur = static_cast<u128>(a[i]) * m + carry;
        a[i] = static_cast<u64>(cur);
        carry = cur >> 64;
    }
    if (carry) throw Error("decimal overflow");
}

template <std::size_t N>
void shift_right(std::array<u64, N>& a, unsigned bits) {
    unsigned limbs = bits / 64, rest = bits % 64;
    for (std::size_t i = 0; i < N; ++i) {
        std::size_t src = i + limbs;
        u64 lo = src < N ? a[src] : 0;
        u64 hi = (rest && src + 1 < N) ? a[src + 1] : 0;
        a[i] = rest ? (lo >> rest) | (hi << (64 - rest)) : lo;
    }
}

Mag narrow(const Wide& w) {
    if (w[4] | w[5] | w[6] | w[7]) throw Error("decimal overflow");
    return Mag{w[0], w[1], w[2], w[3]};
}

// truncating product of two scaled magnitudes: a*b / 10^30
Mag mul_scaled(const Mag& a, const Mag& b) {
    Wide p = mul_mag(a, b);
    div_small(p, kTenTo15);
    div_small(p, kTenTo15);
    return narrow(p);
}

unsigned bit_width_mag(const Mag& a) {
    for (int i = 3; i >= 0; --i) {
        if (a[i]) return static_cast<unsigned>(i * 64 + std::bit_width(a[i]));
    }
    return 0;
}

const Dec30& ln2() {
    static const Dec30 v = Dec30::parse("0.693147180559945309417232121458");
    return v;
}

}  // namespace

Dec30 Dec30::make(bool neg, const Mag& mag) {
    Dec30 d;
    d.neg_ = neg && !mag_zero(mag);
    d.mag_ = mag;
    return d;
}

Dec30 Dec30::from_int(std::int64_t v) {
    bool neg = v < 0;
    Mag m{neg ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v), 0, 0, 0};
    mul_small(m, kTenTo15);
    mul_small(m, kTenTo15);
    return make(neg, m);
}

Dec30 Dec30::from_money(Money money) {
    std::int64_t v = money.units();
    bool neg = v < 0;
    Mag m{neg ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v), 0, 0, 0};
    mul_small(m, kTenTo15);
    mul_small(m, 1'000'000'000ULL);  // 10^24 total: units are ETH * 10^-6
    return make(neg, m);
}

Dec30 Dec30::parse(std::string_view text) {
    if (text.empty()) throw Error("empty decimal literal");
    bool neg = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        i = 1;
    }
    Mag m{0, 0, 0, 0};
    bool any = false;
    for (; i < text.size() && text[i] != '.'; ++i) {
        if (text[i] < '0' || text[i] > '9') throw Error("bad decimal literal: " + std::string(text));
        mul_small(m, 10);
        m = add_mag(m, Mag{static_cast<u64>(text[i] - '0'), 0, 0, 0});
        any = true;
    }
    int frac = 0;
    if (i < text.size()) {
        for (++i; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9') throw Error("bad decimal literal: " + std::string(text));
            if (frac == 30) throw Error("decimal literal finer than 10^-30");
            mul_small(m, 10);
            m = add_mag(m, Mag{static_cast<u64>(text[i] - '0'), 0, 0, 0});
            ++frac;
            any = true;
        }
    }
    if (!any) throw Error("bad decimal literal: " + std::string(text));
    for (; frac < 30; ++frac) mul_small(m, 10);
    return make(neg, m);
}

bool Dec30::is_zero() const { return mag_zero(mag_); }

bool Dec30::is_integer() const {
    Mag m = mag_;
    if (div_small(m, kTenTo15)) return false;
    return div_small(m, kTenTo15) == 0;
}

Dec30 Dec30::operator-() const { return make(!neg_, mag_); }

Dec30 operator+(const Dec30& a, const Dec30& b) {
    if (a.neg_ == b.neg_) return Dec30::make(a.neg_, add_mag(a.mag_, b.mag_));
    int c = cmp_mag(a.mag_, b.mag_);
    if (c == 0) return Dec30{};
    if (c > 0) return Dec30::make(a.neg_, sub_mag(a.mag_, b.mag_));
    return Dec30::make(b.neg_, sub_mag(b.mag_, a.mag_));
}

Dec30 operator-(const Dec30& a, const Dec30& b) { return a + (-b); }

Dec30 operator*(const Dec30& a, const Dec30& b) {
    return Dec30::make(a.neg_ != b.neg_, mul_scaled(a.mag_, b.mag_));
}

int Dec30::compare(const Dec30& o) const {
    bool an = is_negative(), on = o.is_negative();
    if (an != on) return an ? -1 : 1;
    int c = cmp_mag(mag_, o.mag_);
    return an ? -c : c;
}

// Integer-only initial reciprocal estimate (about 60 significant bits),
// refined with Newton iterations r <- r(2 - d r). Divisor restricted to
// [1, 16) which covers every internal use.
Dec30 Dec30::reciprocal_small(const Dec30& d) {
    if (d.is_zero() || d.neg_) throw Error("reciprocal domain");
    unsigned k = bit_width_mag(d.mag_);
    // top 63 bits of the magnitude
    Mag top = d.mag_;
    unsigned shift = k > 63 ? k - 63 : 0;
    shift_right(top, shift);
    u64 dtop = top[0];
    u64 r0 = static_cast<u64>((static_cast<u128>(1) << 126) / dtop);
    // seed = r0 * 10^60 >> (63 + k); arrives scaled by 10^30
    Wide acc{r0, 0, 0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) mul_small(acc, kTenTo15);
    shift_right(acc, 63 + k);
    Dec30 r = make(false, Mag{acc[0], acc[1], acc[2], acc[3]});
    const Dec30 two = from_int(2);
    for (int i = 0; i < 4; ++i) r = r * (two - d * r);
    return r;
}

Dec30 Dec30::ln_of_int(std::int64_t m) {
    if (m <= 0) throw Error("ln domain");
    if (m == 1) return Dec30{};
    unsigned k = std::bit_width(static_cast<u64>(m)) - 1;
    Dec30 t = from_int(m);
    if (k > 0) {
        Mag mag = t.mag_;
        div_small(mag, u64{1} << k);  // exact: 10^30 carries 2^30
        t = make(false, mag);
    }
    const Dec30 one = from_int(1);
    Dec30 z = (t - one) * reciprocal_small(t + one);
    Dec30 z2 = z * z;
    Dec30 term = z;
    Dec30 sum = z;
    for (u64 j = 1; j <= 36; ++j) {
        term = term * z2;
        Mag q = term.mag_;
        div_small(q, 2 * j + 1);
        sum = sum + make(term.neg_, q);
    }
    Dec30 lnt = sum + sum;  // 2 * atanh(z)
    Mag kln2 = ln2().mag_;
    mul_small(kln2, k);
    return lnt + make(false, kln2);
}

Dec30 Dec30::exp() const {
    if (is_negative()) throw Error("exp domain (negative)");
    Dec30 x = *this;
    const Dec30 l2 = ln2();
    unsigned n = 0;
    Mag half = l2.mag_;
    div_small(half, 2);
    const Dec30 half_ln2 = make(false, half);
    while (x > half_ln2) {
        x = x - l2;
        ++n;
        if (n > 512) throw Error("exp argument out of range");
    }
    // x may be slightly negative after reduction; series handles it
    Dec30 term = from_int(1);
    Dec30 sum = term;
    for (u64 kk = 1; kk <= 26; ++kk) {
        term = term * x;
        Mag q = term.mag_;
        div_small(q, kk);
        term = make(term.neg_, q);
        sum = sum + term;
    }
    Mag mag = sum.mag_;
    unsigned left = n;
    while (left > 0) {
        unsigned step = left > 32 ? 32 : left;
        mul_small(mag, u64{1} << step);
        left -= step;
    }
    return make(sum.neg_, mag);
}

Dec30 Dec30::int_pow(std::int64_t m, unsigned e) {
    if (m <= 0) throw Error("int_pow domain");
    Dec30 r = from_int(1);
    Dec30 base = from_int(m);
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
}

Dec30 Dec30::pow_int_base(std::int64_t m, const Dec30& beta) {
    if (m <= 0) throw Error("pow domain");
    if (beta.is_negative()) throw Error("exponent must be positive");
    if (beta.is_integer()) {
        std::int64_t e = beta.floor_int();
        if (e > 60) throw Error("integer exponent out of range");
        return int_pow(m, static_cast<unsigned>(e));
    }
    if (m == 1) return from_int(1);
    return (beta * ln_of_int(m)).exp();
}

Money Dec30::scale_money(Money amount) const {
    std::int64_t units = amount.units();
    bool neg = (units < 0) != is_negative();
    u64 abs_units = units < 0 ? static_cast<u64>(-(units + 1)) + 1 : static_cast<u64>(units);
    Wide p{};
    u128 carry = 0;
    for (int i = 0; i < 4; ++i) {
        u128 cur = static_cast<u128>(mag_[i]) * abs_units + carry;
        p[i] = static_cast<u64>(cur);
        carry = cur >> 64;
    }
    p[4] = static_cast<u64>(carry);
    u64 rem1 = div_small(p, kTenTo15);
    u64 rem2 = div_small(p, kTenTo15);
    if (p[2] | p[3] | p[4] | p[5] | p[6] | p[7] || p[1] >> 63)
        throw Error("money overflow");
    u128 q = (static_cast<u128>(p[1]) << 64) | p[0];
    u128 rem = static_cast<u128>(rem2) * kTenTo15 + rem1;
    u128 full = static_cast<u128>(kTenTo15) * kTenTo15;
    u128 twice = rem * 2;
    if (twice > full || (twice == full && (q & 1))) ++q;
    if (q > static_cast<u128>(INT64_MAX)) throw Error("money overflow");
    auto v = static_cast<std::int64_t>(q);
    return Money::micro(neg ? -v : v);
}

std::string Dec30::str() const {
    Mag m = mag_;
    std::string digits;
    while (!mag_zero(m)) {
        u64 r = div_small(m, 10);
        digits.push_back(static_cast<char>('0' + r));
    }
    while (digits.size() < 31) digits.push_back('0');
    std::string out;
    if (is_negative()) out.push_back('-');
    for (std::size_t i = digits.size(); i > 30; --i) out.push_back(digits[i - 1]);
    out.push_back('.');
    for (std::size_t i = 30; i > 0; --i) out.push_back(digits[i - 1]);
    return out;
}

std::int64_t Dec30::floor_int() const {
    Mag m = mag_;
    div_small(m, kTenTo15);
    div_small(m, kTenTo15);
    if (m[1] | m[2] | m[3] || m[0] >> 63) throw Error("floor out of range");
    auto ip = static_cast<std::int64_t>(m[0]);
    if (is_negative() && !is_integer()) return -ip - 1;
    return is_negative() ? -ip : ip;
}

}  // namespace trs

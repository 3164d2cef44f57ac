#include "sbp/rational.hpp"

#include "sbp/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace sbp {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 abs_i128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr std::int64_t kInlineMax = INT64_MAX;

} // namespace

// ---------------------------------------------------------------------------
// BigInt

BigInt::BigInt(long long v) { *this = from_i128(v); }

BigInt BigInt::from_i128(i128 v) {
    BigInt out;
    if (v == 0) return out;
    out.sign_ = v < 0 ? -1 : 1;
    u128 m = abs_i128(v);
    while (m != 0) {
        out.mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
    return out;
}

void BigInt::normalize() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = std::int64_t(a[i]) - borrow - (i < b.size() ? std::int64_t(b[i]) : 0);
        if (s < 0) {
            s += std::int64_t(1) << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<std::uint32_t>(s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] + std::uint64_t(a[i]) * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
        return r;
    }
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return r; // zero
    if (c > 0) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
        r.sign_ = b.sign_;
        r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    return r;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

namespace {

std::size_t bit_length(const std::vector<std::uint32_t>& m) {
    if (m.empty()) return 0;
    std::uint32_t top = m.back();
    std::size_t bits = (m.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool get_bit(const std::vector<std::uint32_t>& m, std::size_t i) {
    return (m[i / 32] >> (i % 32)) & 1u;
}

// In-place: m = m*2 + bit
void shl1_add(std::vector<std::uint32_t>& m, bool bit) {
    std::uint32_t carry = bit ? 1u : 0u;
    for (auto& limb : m) {
        std::uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) m.push_back(carry);
}

} // namespace

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw Error(ErrorKind::invalid_argument, "division by zero");
    q = BigInt();
    r = BigInt();
    if (a.sign_ == 0) return;
    std::size_t nbits = bit_length(a.mag_);
    std::vector<std::uint32_t> quot((a.mag_.size()), 0);
    std::vector<std::uint32_t> rem;
    for (std::size_t i = nbits; i-- > 0;) {
        shl1_add(rem, get_bit(a.mag_, i));
        if (cmp_mag(rem, b.mag_) >= 0) {
            rem = sub_mag(rem, b.mag_);
            quot[i / 32] |= (1u << (i % 32));
        }
    }
    q.mag_ = std::move(quot);
    q.normalize();
    r.mag_ = std::move(rem);
    r.normalize();
    // truncated toward zero: quotient sign from operand signs, remainder sign of a
    if (!q.mag_.empty()) q.sign_ = a.sign_ * b.sign_;
    if (!r.mag_.empty()) r.sign_ = a.sign_;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a, y = b;
    x.sign_ = x.mag_.empty() ? 0 : 1;
    y.sign_ = y.mag_.empty() ? 0 : 1;
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

bool BigInt::fits_int64() const noexcept {
    if (mag_.size() > 2) return false;
    if (mag_.empty()) return true;
    std::uint64_t v = mag_[0];
    if (mag_.size() == 2) v |= std::uint64_t(mag_[1]) << 32;
    return v <= std::uint64_t(kInlineMax);
}

std::int64_t BigInt::to_int64() const {
    std::uint64_t v = mag_.empty() ? 0 : mag_[0];
    if (mag_.size() >= 2) v |= std::uint64_t(mag_[1]) << 32;
    return sign_ < 0 ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
}

BigInt BigInt::from_decimal(std::string_view text) {
    if (text.empty()) throw_parse("empty integer literal");
    bool neg = false;
    std::size_t pos = 0;
    if (text[0] == '-') {
        neg = true;
        pos = 1;
        if (text.size() == 1) throw_parse("malformed integer literal '-'");
    }
    BigInt out;
    BigInt ten_pow9(1000000000LL);
    std::size_t i = pos;
    while (i < text.size()) {
        std::size_t chunk_len = std::min<std::size_t>(9, text.size() - i);
        std::int64_t chunk = 0;
        for (std::size_t k = 0; k < chunk_len; ++k) {
            char c = text[i + k];
            if (c < '0' || c > '9') throw_parse("malformed integer literal");
            chunk = chunk * 10 + (c - '0');
        }
        BigInt scale(1);
        for (std::size_t k = 0; k < chunk_len; ++k) scale = scale * BigInt(10);
        out = out * scale + BigInt(chunk);
        i += chunk_len;
    }
    if (neg) out = -out;
    return out;
}

std::string BigInt::to_decimal() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        // divide magnitude by 10^9, collecting remainder
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
    if (o.big_) big_ = std::make_unique<Big>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
    if (this != &o) {
        n_ = o.n_;
        d_ = o.d_;
        big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
    }
    return *this;
}

Rational Rational::from_i128(i128 n, i128 d) {
    u128 g = gcd_u128(abs_i128(n), u128(d));
    if (g > 1) {
        n /= i128(g);
        d /= i128(g);
    }
    if (n == 0) d = 1;
    if (abs_i128(n) <= u128(kInlineMax) && u128(d) <= u128(kInlineMax)) {
        Rational r;
        r.n_ = static_cast<std::int64_t>(n);
        r.d_ = static_cast<std::int64_t>(d);
        return r;
    }
    Rational r;
    r.big_ = std::make_unique<Big>(Big{BigInt::from_i128(n), BigInt::from_i128(d)});
    return r;
}

Rational Rational::from_big(BigInt n, BigInt d) {
    BigInt g = BigInt::gcd(n, d);
    if (!(g == BigInt(1)) && !g.is_zero()) {
        BigInt q, r;
        BigInt::divmod(n, g, q, r);
        n = std::move(q);
        BigInt::divmod(d, g, q, r);
        d = std::move(q);
    }
    if (n.is_zero()) d = BigInt(1);
    if (n.fits_int64() && d.fits_int64()) {
        Rational out;
        out.n_ = n.to_int64();
        out.d_ = d.to_int64();
        return out;
    }
    Rational out;
    out.big_ = std::make_unique<Big>(Big{std::move(n), std::move(d)});
    return out;
}

Rational::Rational(long long n) : n_(0), d_(1) { *this = from_i128(n, 1); }

Rational::Rational(long long n, long long d) {
    if (d == 0) throw Error(ErrorKind::parse, "zero denominator");
    i128 nn = n, dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    *this = from_i128(nn, dd);
}

Rational::Rational(const BigInt& n, const BigInt& d) {
    if (d.is_zero()) throw Error(ErrorKind::parse, "zero denominator");
    BigInt nn = n, dd = d;
    if (dd.sign() < 0) {
        nn = -nn;
        dd = -dd;
    }
    *this = from_big(std::move(nn), std::move(dd));
}

Rational::Big Rational::to_big() const {
    if (big_) return *big_;
    return Big{BigInt::from_i128(n_), BigInt::from_i128(d_)};
}

int Rational::sign() const noexcept {
    if (big_) return big_->num.sign();
    return n_ < 0 ? -1 : (n_ > 0 ? 1 : 0);
}

BigInt Rational::numerator() const { return big_ ? big_->num : BigInt::from_i128(n_); }
BigInt Rational::denominator() const { return big_ ? big_->den : BigInt::from_i128(d_); }

Rational Rational::operator-() const {
    if (!big_) {
        Rational r;
        r.n_ = -n_;
        r.d_ = d_;
        return r;
    }
    Rational r;
    r.big_ = std::make_unique<Big>(Big{-big_->num, big_->den});
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 n = i128(a.n_) * b.d_ + i128(b.n_) * a.d_;
        i128 d = i128(a.d_) * b.d_;
        return Rational::from_i128(n, d);
    }
    auto ab = a.to_big(), bb = b.to_big();
    return Rational::from_big(ab.num * bb.den + bb.num * ab.den, ab.den * bb.den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        // cross-reduce first so most products stay inline
        u128 g1 = gcd_u128(abs_i128(a.n_), u128(b.d_));
        u128 g2 = gcd_u128(abs_i128(b.n_), u128(a.d_));
        i128 an = a.n_ / i128(g1), bd = b.d_ / i128(g1);
        i128 bn = b.n_ / i128(g2), ad = a.d_ / i128(g2);
        return Rational::from_i128(an * bn, ad * bd);
    }
    auto ab = a.to_big(), bb = b.to_big();
    return Rational::from_big(ab.num * bb.num, ab.den * bb.den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw Error(ErrorKind::invalid_argument, "division by zero");
    if (!a.big_ && !b.big_) {
        i128 n = i128(a.n_) * b.d_;
        i128 d = i128(a.d_) * b.n_;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        return Rational::from_i128(n, d);
    }
    auto ab = a.to_big(), bb = b.to_big();
    BigInt n = ab.num * bb.den;
    BigInt d = ab.den * bb.num;
    if (d.sign() < 0) {
        n = -n;
        d = -d;
    }
    return Rational::from_big(std::move(n), std::move(d));
}

int Rational::compare(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 lhs = i128(a.n_) * b.d_;
        i128 rhs = i128(b.n_) * a.d_;
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }
    auto ab = a.to_big(), bb = b.to_big();
    return BigInt::compare(ab.num * bb.den, bb.num * ab.den);
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    return Rational::compare(a, b) == 0;
}

long long Rational::ceil_i64() const {
    if (!big_) {
        std::int64_t q = n_ / d_;
        std::int64_t r = n_ % d_;
        return r > 0 ? q + 1 : q;
    }
    BigInt q, r;
    BigInt::divmod(big_->num, big_->den, q, r);
    if (r.sign() > 0) q = q + BigInt(1);
    if (!q.fits_int64()) throw Error(ErrorKind::invalid_argument, "ceil out of int64 range");
    return q.to_int64();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw_parse("empty rational literal");
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(BigInt::from_decimal(text), BigInt(1));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (num.empty() || den.empty()) throw_parse("malformed rational '" + std::string(text) + "'");
    if (den[0] == '-') throw_parse("denominator must be positive");
    BigInt d = BigInt::from_decimal(den);
    if (d.is_zero()) throw_parse("zero denominator");
    return Rational(BigInt::from_decimal(num), d);
}

std::string Rational::str() const {
    if (!big_) {
        std::string s = std::to_string(n_);
        if (d_ != 1) {
            s += '/';
            s += std::to_string(d_);
        }
        return s;
    }
    std::string s = big_->num.to_decimal();
    if (!(big_->den == BigInt(1))) {
        s += '/';
        s += big_->den.to_decimal();
    }
    return s;
}

} // namespace sbp

#ifndef SBP_RATIONAL_HPP
#define SBP_RATIONAL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace sbp {

// Arbitrary-precision signed integer, sign-magnitude over base-2^32 limbs.
// Only the operations the rational layer needs; division is shift-subtract
// (the big path is rare, small values never reach it).
class BigInt {
public:
    BigInt() = default;
    explicit BigInt(long long v);
    static BigInt from_i128(__int128 v);
    static BigInt from_decimal(std::string_view text); // digits with optional leading '-'

    std::string to_decimal() const;

    int sign() const noexcept { return sign_; }
    bool is_zero() const noexcept { return sign_ == 0; }
    bool fits_int64() const noexcept;
    std::int64_t to_int64() const; // precondition: fits_int64()

    BigInt operator-() const;
    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division; b must be nonzero.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    static BigInt gcd(const BigInt& a, const BigInt& b); // non-negative result

    static int compare(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }

private:
    int sign_ = 0;                   // -1, 0, +1
    std::vector<std::uint32_t> mag_; // little-endian, no leading zero limb, empty iff zero

    void normalize();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b); // a >= b
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

// Exact rational in canonical form: gcd(|num|, den) = 1, den > 0.
//
// Values whose canonical numerator and denominator both fit in int64 are kept
// inline and all arithmetic on them runs through __int128 with no allocation;
// anything larger spills into a BigInt pair. The representation is unique
// (inline iff it fits), so equality can compare representations directly.
class Rational {
public:
    Rational() noexcept : n_(0), d_(1) {}
    Rational(long long n);
    Rational(long long n, long long d);          // reduces; throws on d == 0
    Rational(const BigInt& n, const BigInt& d);  // reduces; throws on zero d

    // "p" or "p/q" with integer p and positive integer q; arbitrary precision.
    static Rational parse(std::string_view text);
    std::string str() const; // canonical: "p" when q == 1, else "p/q"

    int sign() const noexcept;
    bool is_zero() const noexcept { return sign() == 0; }

    BigInt numerator() const;
    BigInt denominator() const;

    // Smallest integer >= value; throws if it does not fit int64.
    long long ceil_i64() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b); // throws on zero divisor
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    static int compare(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

    Rational(const Rational& o);
    Rational(Rational&& o) noexcept = default;
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&& o) noexcept = default;
    ~Rational() = default;

    bool is_inline() const noexcept { return big_ == nullptr; } // exposed for tests

private:
    struct Big {
        BigInt num;
        BigInt den; // positive
    };

    std::int64_t n_, d_; // canonical when big_ == nullptr
    std::unique_ptr<Big> big_;

    static Rational from_i128(__int128 n, __int128 d); // d > 0, not yet reduced
    static Rational from_big(BigInt n, BigInt d);      // d > 0, not yet reduced
    Big to_big() const;
};

} // namespace sbp

#endif

#ifndef SERGEEV_RATIONAL_HPP
#define SERGEEV_RATIONAL_HPP

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

#include "sergeev/errors.hpp"

namespace sergeev {

/// Exact rational number.
///
/// Values that fit are kept as a reduced int64 pair (den > 0); anything larger
/// is promoted to a GMP rational and demoted back as soon as it fits again.
/// Every operation is exact; overflow is impossible by construction.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(long long num, long long den);

    static Rational from_string(const std::string& text);

    bool is_zero() const { return big_ ? sgn(*big_) == 0 : num_ == 0; }
    bool is_one() const { return big_ ? *big_ == 1 : (num_ == 1 && den_ == 1); }
    bool is_negative() const { return big_ ? sgn(*big_) < 0 : num_ < 0; }
    /// -1, 0, or +1.
    int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }
    bool is_integer() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    bool operator==(const Rational& o) const;
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    Rational inverse() const;

    /// Always of the form "num/den", e.g. "-3/4", "5/1".
    std::string to_fraction_string() const;
    /// "num" when den == 1, "num/den" otherwise.
    std::string to_string() const;

    /// Exact conversion; also the reference representation in tests.
    mpq_class to_mpq() const;
    static Rational from_mpq(const mpq_class& q);

    /// True while the value is held in the int64 fast path (diagnostic).
    bool is_small() const { return !big_; }
    /// Components of the int64 fast path; only meaningful when is_small().
    long long small_num() const { return num_; }
    long long small_den() const { return den_; }

    /// Exact reduced value of a 128-bit fraction (den != 0).
    static Rational from_fraction128(__int128 num, __int128 den) { return reduce128(num, den); }

private:
    long long num_, den_;           // reduced, den_ > 0; ignored when big_ set
    std::shared_ptr<const mpq_class> big_;

    static Rational reduce128(__int128 num, __int128 den);
    void demote();

    friend class Scalar;
};

} // namespace sergeev

#endif

#ifndef SERGEEV_SCALAR_HPP
#define SERGEEV_SCALAR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sergeev/rational.hpp"

namespace sergeev {

/// One summand (re + im*i)*sqrt(d) of a Scalar; d is squarefree, d >= 1,
/// and d == 1 carries the rational (Gaussian) part.
struct ScalarTerm {
    std::uint64_t d;
    Rational re;
    Rational im;

    bool operator==(const ScalarTerm& o) const { return d == o.d && re == o.re && im == o.im; }
};

/// Element of the field Q(i, sqrt(2), sqrt(3), sqrt(5), ...).
///
/// Canonical form: terms sorted by radicand d, every radicand squarefree,
/// no term with a zero coefficient.  Two scalars are equal iff their term
/// lists are identical, so operator== is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long v) { if (v != 0) terms_.push_back({1, Rational(v), Rational()}); }
    Scalar(const Rational& q) { if (!q.is_zero()) terms_.push_back({1, q, Rational()}); }

    /// The imaginary unit.
    static Scalar i();
    /// sqrt(v) for an integer v >= 0, with the square part extracted.
    static Scalar sqrt_int(std::uint64_t v);
    /// sqrt(q) for a rational q >= 0 (nonnegative branch).
    /// Throws NegativeRadicand for q < 0.
    static Scalar sqrt_rational(const Rational& q);
    /// coeff * sqrt(v), v >= 0 integer.
    static Scalar radical(const Rational& coeff, std::uint64_t v);
    /// Adopts a term list that is already canonical: strictly ascending
    /// squarefree d, no all-zero coefficient pairs. Used by product kernels.
    static Scalar from_sorted_terms(std::vector<ScalarTerm> terms);

    bool is_zero() const { return terms_.empty(); }
    /// True iff the value lies in Q (no radical, no imaginary part).
    bool is_rational() const;
    /// The rational value; throws InternalError unless is_rational().
    Rational rational_value() const;
    /// Coefficient pair (re, im) of sqrt(d); zero pair if absent.
    ScalarTerm coefficient(std::uint64_t d) const;

    const std::vector<ScalarTerm>& terms() const { return terms_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    /// Multiplicative inverse; throws ZeroDivision on zero.
    Scalar inverse() const;
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    Scalar pow(unsigned e) const;

    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// this += sign * a * b.  The accumulation primitive of element products.
    void acc_mul(const Scalar& a, const Scalar& b, int sign);
    /// this += sign * a.
    void acc(const Scalar& a, int sign);
    void scale(const Rational& q);

    /// Diagnostic rendering, e.g. "1/2 + (3 + i)*sqrt(6)".
    std::string to_string() const;

private:
    std::vector<ScalarTerm> terms_;

    void add_term(std::uint64_t d, const Rational& re, const Rational& im);
};

/// Distinct prime factors of a squarefree integer v >= 1, ascending.
std::vector<std::uint64_t> squarefree_primes(std::uint64_t v);

} // namespace sergeev

#endif

#include "sergeev/rational.hpp"

#include <cctype>
#include <limits>

namespace sergeev {

namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

uint128 abs128(int128 v) { return v < 0 ? uint128(-(v + 1)) + 1 : uint128(v); }

uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr int128 kMin64 = std::numeric_limits<long long>::min();
constexpr int128 kMax64 = std::numeric_limits<long long>::max();

bool fits64(int128 v) { return v >= kMin64 && v <= kMax64; }

mpz_class mpz_from128(int128 v) {
    bool neg = v < 0;
    uint128 a = abs128(v);
    mpz_class hi(static_cast<unsigned long>(a >> 64));
    mpz_class out = (hi << 64) + static_cast<unsigned long>(a & ~0ULL);
    return neg ? mpz_class(-out) : out;
}

} // namespace

Rational::Rational(long long num, long long den) : num_(0), den_(1) {
    if (den == 0) throw ZeroDivision("Rational with zero denominator");
    *this = reduce128(num, den);
}

Rational Rational::reduce128(int128 num, int128 den) {
    if (den == 0) throw ZeroDivision("Rational with zero denominator");
    if (num == 0) return Rational();
    if (den < 0) {
        // den = INT128_MIN cannot occur: inputs are products/sums of int64s.
        num = -num;
        den = -den;
    }
    uint128 g = gcd128(abs128(num), uint128(den));
    uint128 un = abs128(num) / g;
    uint128 ud = uint128(den) / g;
    int128 rn = num < 0 ? -int128(un) : int128(un);
    int128 rd = int128(ud);
    Rational r;
    if (fits64(rn) && fits64(rd)) {
        r.num_ = static_cast<long long>(rn);
        r.den_ = static_cast<long long>(rd);
    } else {
        mpq_class q(mpz_from128(rn), mpz_from128(rd));
        q.canonicalize();
        r.big_ = std::make_shared<const mpq_class>(std::move(q));
    }
    return r;
}

void Rational::demote() {
    if (!big_) return;
    if (big_->get_num().fits_slong_p() && big_->get_den().fits_slong_p()) {
        num_ = big_->get_num().get_si();
        den_ = big_->get_den().get_si();
        big_.reset();
    }
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(static_cast<long>(num_), static_cast<long>(den_));
    q.canonicalize(); // already reduced; keeps GMP invariants explicit
    return q;
}

Rational Rational::from_mpq(const mpq_class& q) {
    Rational r;
    r.big_ = std::make_shared<const mpq_class>(q);
    r.demote();
    return r;
}

Rational Rational::operator-() const {
    if (big_) {
        Rational r;
        r.big_ = std::make_shared<const mpq_class>(-*big_);
        r.demote(); // -min64 case
        return r;
    }
    if (num_ == kMin64) return reduce128(-int128(num_), den_);
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        int128 n = int128(num_) * o.den_ + int128(o.num_) * den_;
        int128 d = int128(den_) * o.den_;
        *this = reduce128(n, d);
        return *this;
    }
    Rational r = from_mpq(to_mpq() + o.to_mpq());
    *this = r;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (!big_ && !o.big_) {
        int128 n = int128(num_) * o.den_ - int128(o.num_) * den_;
        int128 d = int128(den_) * o.den_;
        *this = reduce128(n, d);
        return *this;
    }
    Rational r = from_mpq(to_mpq() - o.to_mpq());
    *this = r;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        *this = reduce128(int128(num_) * o.num_, int128(den_) * o.den_);
        return *this;
    }
    Rational r = from_mpq(to_mpq() * o.to_mpq());
    *this = r;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDivision("Rational division by zero");
    if (!big_ && !o.big_) {
        *this = reduce128(int128(num_) * o.den_, int128(den_) * o.num_);
        return *this;
    }
    Rational r = from_mpq(to_mpq() / o.to_mpq());
    *this = r;
    return *this;
}

bool Rational::operator==(const Rational& o) const {
    if (!big_ && !o.big_) return num_ == o.num_ && den_ == o.den_;
    return to_mpq() == o.to_mpq();
}

bool Rational::operator<(const Rational& o) const {
    if (!big_ && !o.big_) return int128(num_) * o.den_ < int128(o.num_) * den_;
    return to_mpq() < o.to_mpq();
}

Rational Rational::inverse() const {
    if (is_zero()) throw ZeroDivision("inverse of zero");
    if (!big_) return reduce128(den_, num_);
    Rational r;
    r.big_ = std::make_shared<const mpq_class>(1 / *big_);
    r.demote();
    return r;
}

bool Rational::is_integer() const {
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

std::string Rational::to_fraction_string() const {
    if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_string() const {
    if (big_) {
        if (big_->get_den() == 1) return big_->get_num().get_str();
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    size_t i = 0;
    auto digits = [&](size_t from) {
        size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (text[i] == '+' || text[i] == '-') ++i;
    size_t e = digits(i);
    if (e == i) throw ParseError("bad rational literal '" + text + "'");
    if (e < text.size()) {
        if (text[e] != '/') throw ParseError("bad rational literal '" + text + "'");
        size_t f = digits(e + 1);
        if (f == e + 1 || f != text.size()) throw ParseError("bad rational literal '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw ZeroDivision("rational literal with zero denominator");
    q.canonicalize();
    return from_mpq(q);
}

} // namespace sergeev

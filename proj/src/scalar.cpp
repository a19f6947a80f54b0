#include "sergeev/scalar.hpp"

#include <algorithm>
#include <numeric>

namespace sergeev {

namespace {

// Radicands stay tiny in practice (products of box contents); this bound only
// guards against degenerate inputs that trial division could not handle.
constexpr std::uint64_t kMaxRadicand = 1ULL << 40;

// v = s*s*d with d squarefree; returns (s, d).
std::pair<std::uint64_t, std::uint64_t> extract_square(std::uint64_t v) {
    if (v > kMaxRadicand) throw InternalError("radicand too large to factor: " + std::to_string(v));
    std::uint64_t s = 1, d = 1;
    for (std::uint64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        if (v % p != 0) continue;
        unsigned e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        for (unsigned k = 0; k + 1 < e; k += 2) s *= p;
        if (e % 2 == 1) d *= p;
    }
    d *= v; // leftover prime
    return {s, d};
}

} // namespace

std::vector<std::uint64_t> squarefree_primes(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        if (v % p == 0) {
            out.push_back(p);
            v /= p;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

Scalar Scalar::i() {
    Scalar s;
    s.terms_.push_back({1, Rational(), Rational(1)});
    return s;
}

Scalar Scalar::sqrt_int(std::uint64_t v) {
    if (v == 0) return Scalar();
    auto [s, d] = extract_square(v);
    Scalar out;
    out.terms_.push_back({d, Rational(static_cast<long long>(s)), Rational()});
    return out;
}

Scalar Scalar::radical(const Rational& coeff, std::uint64_t v) {
    Scalar out = sqrt_int(v);
    out.scale(coeff);
    return out;
}

Scalar Scalar::from_sorted_terms(std::vector<ScalarTerm> terms) {
    Scalar out;
    out.terms_ = std::move(terms);
    return out;
}

Scalar Scalar::sqrt_rational(const Rational& q) {
    if (q.is_negative()) throw NegativeRadicand("sqrt of " + q.to_string());
    if (q.is_zero()) return Scalar();
    // sqrt(p/r) = sqrt(p*r)/r.
    mpq_class v = q.to_mpq();
    mpz_class prod = v.get_num() * v.get_den();
    if (!prod.fits_ulong_p()) throw InternalError("sqrt_rational radicand too large");
    Scalar out = sqrt_int(prod.get_ui());
    out.scale(Rational::from_mpq(mpq_class(1, v.get_den())));
    return out;
}

bool Scalar::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_[0].d == 1 && terms_[0].im.is_zero();
}

Rational Scalar::rational_value() const {
    if (terms_.empty()) return Rational();
    if (!is_rational()) throw InternalError("rational_value of irrational scalar " + to_string());
    return terms_[0].re;
}

ScalarTerm Scalar::coefficient(std::uint64_t d) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                               [](const ScalarTerm& t, std::uint64_t key) { return t.d < key; });
    if (it != terms_.end() && it->d == d) return *it;
    return {d, Rational(), Rational()};
}

void Scalar::add_term(std::uint64_t d, const Rational& re, const Rational& im) {
    if (re.is_zero() && im.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                               [](const ScalarTerm& t, std::uint64_t key) { return t.d < key; });
    if (it != terms_.end() && it->d == d) {
        it->re += re;
        it->im += im;
        if (it->re.is_zero() && it->im.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {d, re, im});
    }
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    for (auto& t : out.terms_) {
        t.re = -t.re;
        t.im = -t.im;
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& t : o.terms_) add_term(t.d, t.re, t.im);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (const auto& t : o.terms_) add_term(t.d, -t.re, -t.im);
    return *this;
}

void Scalar::acc(const Scalar& a, int sign) {
    if (sign >= 0)
        *this += a;
    else
        *this -= a;
}

void Scalar::scale(const Rational& q) {
    if (q.is_zero()) {
        terms_.clear();
        return;
    }
    for (auto& t : terms_) {
        t.re *= q;
        t.im *= q;
    }
}

void Scalar::acc_mul(const Scalar& a, const Scalar& b, int sign) {
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            std::uint64_t g = std::gcd(ta.d, tb.d);
            std::uint64_t d = (ta.d / g) * (tb.d / g);
            Rational gq(static_cast<long long>(sign > 0 ? g : -(long long)g));
            // (re_a + i im_a)(re_b + i im_b) * g
            Rational re = (ta.re * tb.re - ta.im * tb.im) * gq;
            Rational im = (ta.re * tb.im + ta.im * tb.re) * gq;
            add_term(d, re, im);
        }
    }
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    out.acc_mul(a, b, +1);
    return out;
}

Scalar Scalar::pow(unsigned e) const {
    Scalar out(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

Scalar Scalar::inverse() const {
    if (terms_.empty()) throw ZeroDivision("inverse of zero scalar");
    // Cascade of radical conjugations: multiplying a value by its conjugate
    // under sqrt(p) -> -sqrt(p) kills every radicand divisible by p, so after
    // one pass per prime the running product lies in Q(i).  The accumulated
    // co-factor times the Gaussian inverse of that product is the inverse.
    Scalar cur = *this;
    Scalar cofactor(1);
    for (;;) {
        std::uint64_t with_radical = 1;
        for (const auto& t : cur.terms_)
            if (t.d > 1) { with_radical = t.d; break; }
        if (with_radical == 1) break;
        std::uint64_t p = squarefree_primes(with_radical).front();
        Scalar conj;
        for (const auto& t : cur.terms_) {
            if (t.d % p == 0)
                conj.terms_.push_back({t.d, -t.re, -t.im});
            else
                conj.terms_.push_back({t.d, t.re, t.im});
        }
        cofactor = cofactor * conj;
        cur = cur * conj;
    }
    if (cur.terms_.empty()) throw InternalError("norm of nonzero scalar vanished");
    if (cur.terms_.size() != 1 || cur.terms_[0].d != 1)
        throw InternalError("conjugate cascade left a radical behind");
    // Gaussian inverse: 1/(x + iy) = (x - iy)/(x^2 + y^2).
    const Rational& x = cur.terms_[0].re;
    const Rational& y = cur.terms_[0].im;
    Rational nrm = x * x + y * y;
    if (nrm.is_zero()) throw InternalError("zero Gaussian norm for nonzero scalar");
    Scalar ginv;
    ginv.terms_.push_back({1, x / nrm, -(y / nrm)});
    if (ginv.terms_[0].re.is_zero() && ginv.terms_[0].im.is_zero()) ginv.terms_.clear();
    return cofactor * ginv;
}

std::string Scalar::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string coeff;
        if (t.im.is_zero()) {
            coeff = t.re.to_string();
        } else if (t.re.is_zero()) {
            coeff = t.im.to_string() + "*i";
        } else {
            coeff = "(" + t.re.to_string() + " + " + t.im.to_string() + "*i)";
        }
        std::string part = coeff;
        if (t.d != 1) {
            if (t.re.is_one() && t.im.is_zero())
                part = "sqrt(" + std::to_string(t.d) + ")";
            else
                part = coeff + "*sqrt(" + std::to_string(t.d) + ")";
        }
        if (!first) out += " + ";
        out += part;
        first = false;
    }
    return out;
}

} // namespace sergeev

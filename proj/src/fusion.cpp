#include "sergeev/fusion.hpp"

#include <chrono>
#include <mutex>

#include "sergeev/errors.hpp"
#include "sergeev/idempotents.hpp"

namespace sergeev {

void ScalarPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ScalarPoly::ScalarPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ScalarPoly ScalarPoly::constant(const Scalar& c) { return ScalarPoly(std::vector<Scalar>{c}); }

Scalar ScalarPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Scalar();
}

Scalar ScalarPoly::at(const Scalar& u) const {
    Scalar acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * u + coeffs_[k];
    return acc;
}

ScalarPoly ScalarPoly::scaled(const Scalar& s) const {
    std::vector<Scalar> out(coeffs_);
    for (Scalar& c : out) c = c * s;
    return ScalarPoly(std::move(out));
}

ScalarPoly ScalarPoly::deflate(const Scalar& root) const {
    if (coeffs_.empty()) return ScalarPoly();
    if (coeffs_.size() == 1) {
        if (!coeffs_[0].is_zero()) throw InternalError("deflating by a non-root");
        return ScalarPoly();
    }
    const std::size_t d = coeffs_.size() - 1;
    std::vector<Scalar> q(d);
    q[d - 1] = coeffs_[d];
    for (std::size_t k = d - 1; k-- > 0;) q[k] = coeffs_[k + 1] + q[k + 1] * root;
    if (!(coeffs_[0] + q[0] * root).is_zero()) throw InternalError("deflating by a non-root");
    return ScalarPoly(std::move(q));
}

ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
    std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
    return ScalarPoly(std::move(out));
}

ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) {
    std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
    return ScalarPoly(std::move(out));
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.is_zero() || b.is_zero()) return ScalarPoly();
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j].acc_mul(a.coeffs_[i], b.coeffs_[j], 1);
    return ScalarPoly(std::move(out));
}

void AlgebraPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

AlgebraPoly::AlgebraPoly(int n, std::vector<AlgebraElement> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
    for (const AlgebraElement& c : coeffs_)
        if (c.n() != n_) throw SizeMismatch("polynomial coefficient size");
    trim();
}

AlgebraPoly AlgebraPoly::constant(const AlgebraElement& e) {
    return AlgebraPoly(e.n(), std::vector<AlgebraElement>{e});
}

AlgebraElement AlgebraPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : AlgebraElement::zero(n_);
}

AlgebraElement AlgebraPoly::at(const Scalar& u) const {
    AlgebraElement acc = AlgebraElement::zero(n_);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc.scaled(u) + coeffs_[k];
    return acc;
}

AlgebraPoly AlgebraPoly::scaled(const Scalar& s) const {
    std::vector<AlgebraElement> out;
    out.reserve(coeffs_.size());
    for (const AlgebraElement& c : coeffs_) out.push_back(c.scaled(s));
    return AlgebraPoly(n_, std::move(out));
}

AlgebraPoly AlgebraPoly::times(const ScalarPoly& p) const {
    if (is_zero() || p.is_zero()) return AlgebraPoly(n_);
    std::vector<AlgebraElement> out(coeffs_.size() + p.coeffs().size() - 1,
                                    AlgebraElement::zero(n_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < p.coeffs().size(); ++j)
            out[i + j] += coeffs_[i].scaled(p.coeffs()[j]);
    return AlgebraPoly(n_, std::move(out));
}

std::pair<AlgebraPoly, AlgebraElement> AlgebraPoly::divide_linear(const Scalar& root) const {
    if (coeffs_.empty()) return {AlgebraPoly(n_), AlgebraElement::zero(n_)};
    if (coeffs_.size() == 1) return {AlgebraPoly(n_), coeffs_[0]};
    const std::size_t d = coeffs_.size() - 1;
    std::vector<AlgebraElement> q(d, AlgebraElement::zero(n_));
    q[d - 1] = coeffs_[d];
    for (std::size_t k = d - 1; k-- > 0;) q[k] = coeffs_[k + 1] + q[k + 1].scaled(root);
    AlgebraElement rem = coeffs_[0] + q[0].scaled(root);
    return {AlgebraPoly(n_, std::move(q)), std::move(rem)};
}

AlgebraPoly operator+(const AlgebraPoly& a, const AlgebraPoly& b) {
    if (a.n_ != b.n_) throw SizeMismatch("polynomial sizes");
    std::vector<AlgebraElement> out;
    const std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
    out.reserve(len);
    for (std::size_t k = 0; k < len; ++k) out.push_back(a.coeff(k) + b.coeff(k));
    return AlgebraPoly(a.n_, std::move(out));
}

AlgebraPoly operator*(const AlgebraPoly& a, const AlgebraPoly& b) {
    if (a.n_ != b.n_) throw SizeMismatch("polynomial sizes");
    if (a.is_zero() || b.is_zero()) return AlgebraPoly(a.n_);
    std::vector<AlgebraElement> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                                    AlgebraElement::zero(a.n_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return AlgebraPoly(a.n_, std::move(out));
}

RationalElement::RationalElement(AlgebraPoly num, ScalarPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDivision("rational element with zero denominator");
    const Scalar lead = den_.coeffs().back();
    if (!(lead == Scalar(1))) {
        const Scalar inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalElement RationalElement::constant(const AlgebraElement& e) {
    return RationalElement(AlgebraPoly::constant(e), ScalarPoly::constant(Scalar(1)));
}

RationalElement operator*(const RationalElement& a, const RationalElement& b) {
    return RationalElement(a.num_ * b.num_, a.den_ * b.den_);
}

AlgebraElement phi_factor(int n, int a, int b, const Scalar& u, const Scalar& v) {
    const Scalar d = u * u - v * v;
    if (d.is_zero()) throw PoleAtEvaluation("phi factor evaluated at u^2 = v^2");
    const AlgebraElement lin = gen_c(n, a).scaled(u) - gen_c(n, b).scaled(v);
    return AlgebraElement::one(n) +
           (gen_t_ab(n, a, b) * lin).scaled(Scalar::sqrt_int(2) * d.inverse());
}

RationalElement phi_factor(int n, int a, int b, VariableSide side, const Scalar& value) {
    const AlgebraElement one = AlgebraElement::one(n);
    const Scalar rt2 = Scalar::sqrt_int(2);
    const AlgebraElement tca = gen_t_ab(n, a, b) * gen_c(n, a);
    const AlgebraElement tcb = gen_t_ab(n, a, b) * gen_c(n, b);
    std::vector<AlgebraElement> num;
    std::vector<Scalar> den;
    if (side == VariableSide::Left) {
        const Scalar& v = value;
        num = {one.scaled(-(v * v)) - tcb.scaled(rt2 * v), tca.scaled(rt2), one};
        den = {-(v * v), Scalar(), Scalar(1)};
    } else {
        const Scalar& u = value;
        num = {one.scaled(u * u) + tca.scaled(rt2 * u), tcb.scaled(-rt2), -one};
        den = {u * u, Scalar(), Scalar(-1)};
    }
    return RationalElement(AlgebraPoly(n, std::move(num)), ScalarPoly(std::move(den)));
}

AlgebraElement evaluate_at(const RationalElement& r, const Scalar& kappa) {
    ScalarPoly den = r.denominator();
    AlgebraPoly num = r.numerator();
    while (den.at(kappa).is_zero()) {
        den = den.deflate(kappa);
        auto [q, rem] = num.divide_linear(kappa);
        if (!rem.is_zero())
            throw NonRemovablePole("numerator remainder is nonzero at a denominator root");
        num = std::move(q);
    }
    return num.at(kappa).scaled(den.at(kappa).inverse());
}

AlgebraElement fusion_evaluate(const ShiftedTableau& t) {
    const int n = t.n();
    AlgebraElement e = AlgebraElement::one(n);
    for (int k = 2; k <= n; ++k) {
        RationalElement r = RationalElement::constant(e);
        for (int a = 1; a < k; ++a)
            r = r * phi_factor(n, a, k, VariableSide::Right, t.signed_content(a));
        e = evaluate_at(r, t.signed_content(k));
    }
    return e;
}

namespace {

// u - k
ScalarPoly u_minus(const Scalar& k) { return ScalarPoly(std::vector<Scalar>{-k, Scalar(1)}); }

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace

ScalarRational a_factor(const Scalar& kappa) {
    const Scalar q = kappa * kappa;
    // 1 - 1/(u-kappa)^2 - 1/(u+kappa)^2 = ((u^2-q)^2 - 2u^2 - 2q) / (u^2-q)^2
    ScalarPoly num(std::vector<Scalar>{q * q - Scalar(2) * q, Scalar(),
                                       Scalar(-2) * q - Scalar(2), Scalar(), Scalar(1)});
    ScalarPoly den(std::vector<Scalar>{q * q, Scalar(), Scalar(-2) * q, Scalar(), Scalar(1)});
    return {std::move(num), std::move(den)};
}

Scalar evaluate_scalar(const ScalarRational& r, const Scalar& kappa) {
    ScalarPoly num = r.num, den = r.den;
    if (den.is_zero()) throw ZeroDivision("zero denominator");
    while (den.at(kappa).is_zero()) {
        den = den.deflate(kappa);
        if (!num.at(kappa).is_zero())
            throw NonRemovablePole("scalar numerator does not vanish at the pole");
        num = num.deflate(kappa);
    }
    return num.at(kappa) * den.at(kappa).inverse();
}

CheckReport verify_prjm_lemma(const ShiftedTableau& v, int n) {
    CheckReport rep;
    rep.suite = "fusion";
    rep.n = n;
    const int r = v.n();
    if (r < 1 || r >= n) {
        rep.fail("lemma needs 1 <= boxes < n");
        return rep;
    }
    const AlgebraElement ev = embed(idempotent(v).element, n);
    const AlgebraElement xrn = gen_jm_x(r, n);

    ++rep.checks;
    if (!(xrn * ev == ev * xrn)) rep.fail("x_{rn} does not commute with e at " + v.to_text());

    RationalElement lhs = RationalElement::constant(ev);
    for (int a = r; a >= 1; --a)
        lhs = lhs * phi_factor(n, n, a, VariableSide::Left, v.signed_content(a));

    const AlgebraPoly rhs_num(n, {-(xrn * ev), ev});
    const ScalarPoly rhs_den = u_minus(Scalar());
    ++rep.checks;
    if (!(lhs.numerator().times(rhs_den) == rhs_num.times(lhs.denominator())))
        rep.fail("projection relation fails at " + v.to_text());
    return rep;
}

CheckReport verify_ratf_identities(const ShiftedTableau& v, const Box& target, bool barred) {
    CheckReport rep;
    rep.suite = "fusion";
    const int n = v.n() + 1;
    rep.n = n;

    const std::vector<ShiftedTableau> ups = branch_up(v);
    const ShiftedTableau* u_tab = nullptr;
    for (const auto& w : ups) {
        const Box b = w.box_of(n);
        if (b.row == target.row && b.col == target.col && w.barred(n) == barred) u_tab = &w;
    }
    if (!u_tab) {
        rep.fail("target box is not addable at " + v.to_text());
        return rep;
    }
    const Scalar kn = u_tab->signed_content(n);
    const AlgebraElement ev = embed(idempotent(v).element, n);

    // branching decomposition of the smaller idempotent
    AlgebraElement sum = AlgebraElement::zero(n);
    for (const auto& w : ups) sum += idempotent(w).element;
    ++rep.checks;
    if (!(sum == ev)) rep.fail("branching decomposition fails at " + v.to_text());

    // R = sum_W e_W (u - kn)/(u - k_W) over the common denominator
    ScalarPoly den = ScalarPoly::constant(Scalar(1));
    for (const auto& w : ups) den = den * u_minus(w.signed_content(n));
    AlgebraPoly num(n);
    for (const auto& w : ups) {
        ScalarPoly fac = u_minus(kn);
        for (const auto& w2 : ups)
            if (&w2 != &w) fac = fac * u_minus(w2.signed_content(n));
        num = num + AlgebraPoly::constant(idempotent(w).element).times(fac);
    }
    const RationalElement rat(std::move(num), std::move(den));

    // (u - x_n) R = (u - kn) e_V pins R as the spectral quotient
    const AlgebraElement xn = jm_x(n, n);
    const AlgebraPoly left = AlgebraPoly(n, {-xn, AlgebraElement::one(n)}) * rat.numerator();
    const AlgebraPoly right = AlgebraPoly(n, {ev.scaled(-kn), ev}).times(rat.denominator());
    ++rep.checks;
    if (!(left == right)) rep.fail("spectral quotient identity fails at " + v.to_text());

    ++rep.checks;
    if (!(evaluate_at(rat, kn) == idempotent(*u_tab).element))
        rep.fail("pole removal does not land on the larger idempotent at " + v.to_text());

    // u/(u - kn) prod_a A(u, kappa_a) evaluated at kn
    ScalarRational s{ScalarPoly(std::vector<Scalar>{Scalar(), Scalar(1)}), u_minus(kn)};
    for (int a = 1; a < n; ++a) s = s * a_factor(v.signed_content(a));
    const Scalar expected(
        Rational(n * g_lambda_formula(v.shape()), g_lambda_formula(u_tab->shape())));
    ++rep.checks;
    if (!(evaluate_scalar(s, kn) == expected))
        rep.fail("scalar evaluation differs at " + v.to_text());
    return rep;
}

CheckReport verify_fusion(int n, Exec exec) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    rep.suite = "fusion";
    rep.n = n;
    std::mutex mu;

    std::vector<ShiftedTableau> levels[2];
    for (int k = 1; k <= n; ++k) {
        std::vector<ShiftedTableau> level;
        for (const auto& shape : enumerate_strict_partitions(k))
            for (const auto& t : enumerate_standard_tableaux(shape, true)) level.push_back(t);
        parallel_for(exec, level.size(), [&](std::size_t i) { idempotent(level[i]); });
        if (k >= n - 1) levels[k - (n - 1)] = std::move(level);
    }
    const std::vector<ShiftedTableau>& tabs = levels[1];

    parallel_for(exec, tabs.size(), [&](std::size_t i) {
        const ShiftedTableau& t = tabs[i];
        const Scalar ratio(Rational(factorial(n), g_lambda_formula(t.shape())));
        const bool ok = fusion_evaluate(t) == idempotent(t).element.scaled(ratio);
        std::lock_guard<std::mutex> lock(mu);
        ++rep.checks;
        if (!ok) rep.fail("fusion value differs at " + t.to_text());
    });

    for (int r = 1; r < n; ++r)
        for (const auto& shape : enumerate_strict_partitions(r))
            for (const auto& t : enumerate_standard_tableaux(shape, true))
                rep.absorb(verify_prjm_lemma(t, n));

    if (n >= 2)
        for (const auto& t : levels[0])
            for (const auto& cand : addable_signed_contents(t.shape()))
                rep.absorb(verify_ratf_identities(t, cand.box, cand.barred));

    rep.duration_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    return rep;
}

} // namespace sergeev

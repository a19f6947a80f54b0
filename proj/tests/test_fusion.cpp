#include "doctest.h"

#include <string>
#include <vector>

#include "sergeev/algebra.hpp"
#include "sergeev/errors.hpp"
#include "sergeev/fusion.hpp"
#include "sergeev/idempotents.hpp"
#include "sergeev/tableaux.hpp"

using namespace sergeev;

namespace {

ShiftedTableau tab(const std::string& text) { return ShiftedTableau::from_text(text); }

StrictPartition sp(std::vector<int> parts) { return StrictPartition(std::move(parts)); }

Scalar rt(long long m) { return Scalar::sqrt_int(m); }

ScalarPoly u_minus(const Scalar& k) { return ScalarPoly(std::vector<Scalar>{-k, Scalar(1)}); }

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

void check_report(const CheckReport& rep) {
    const std::string why = rep.suite + "/" + std::to_string(rep.n) + ": " +
                            (rep.failures.empty() ? std::string() : rep.failures.front());
    INFO(why);
    CHECK(rep.pass);
    CHECK(rep.checks > 0);
}

} // namespace

TEST_SUITE("fusion") {

TEST_CASE("polynomial division building blocks") {
    const Scalar r2 = rt(2);
    ScalarPoly p = u_minus(r2) * u_minus(-r2); // u^2 - 2
    CHECK(p == ScalarPoly(std::vector<Scalar>{Scalar(-2), Scalar(), Scalar(1)}));
    CHECK(p.at(r2).is_zero());
    CHECK(p.deflate(r2) == u_minus(-r2));
    CHECK_THROWS_AS(p.deflate(Scalar(1)), InternalError);
    CHECK((p - p).is_zero());
    CHECK(p.scaled(Scalar(3)).coeff(2) == Scalar(3));

    const AlgebraElement one = AlgebraElement::one(2);
    const AlgebraElement c1 = gen_c(2, 1);
    const AlgebraPoly q(2, {c1, one}); // u + c_1
    const AlgebraPoly prod = q.times(u_minus(r2));
    auto [quot, rem] = prod.divide_linear(r2);
    CHECK(quot == q);
    CHECK(rem.is_zero());
    auto [quot0, rem0] = prod.divide_linear(Scalar());
    CHECK(rem0 == prod.at(Scalar()));
    CHECK_FALSE(rem0.is_zero());
    CHECK(quot0.degree() == 1);
    // (u + c_1)(u - c_1) = u^2 + 1 since c_1^2 = -1
    CHECK(q * AlgebraPoly(2, {-c1, one}) ==
          AlgebraPoly(2, {one, AlgebraElement::zero(2), one}));
}

TEST_CASE("factor at fixed arguments") {
    // phi_12(0, sqrt2) = 1 + t_12 c_2
    const AlgebraElement expect =
        AlgebraElement::one(3) + gen_t_ab(3, 1, 2) * gen_c(3, 2);
    CHECK(phi_factor(3, 1, 2, Scalar(), rt(2)) == expect);

    CHECK_THROWS_AS(phi_factor(3, 1, 2, rt(2), rt(2)), PoleAtEvaluation);
    CHECK_THROWS_AS(phi_factor(3, 1, 2, rt(2), -rt(2)), PoleAtEvaluation);
    CHECK_THROWS_AS(phi_factor(3, 1, 1, Scalar(), rt(2)), IndexOutOfRange);

    // scattering value: phi_ab(u,v) phi_ba(v,u) = A(u,v)
    const Scalar av = evaluate_scalar(a_factor(rt(6)), Scalar());
    CHECK(av == Scalar(Rational(2, 3)));
    CHECK(phi_factor(3, 1, 2, Scalar(), rt(6)) * phi_factor(3, 2, 1, rt(6), Scalar()) ==
          AlgebraElement::one(3).scaled(av));
    // neighbouring row contents annihilate each other
    CHECK((phi_factor(3, 1, 2, Scalar(), rt(2)) * phi_factor(3, 2, 1, rt(2), Scalar()))
              .is_zero());
    CHECK((phi_factor(3, 1, 2, rt(2), rt(6)) * phi_factor(3, 2, 1, rt(6), rt(2))).is_zero());
}

TEST_CASE("factors with a symbolic argument multiply to the scattering scalar") {
    const int n = 4;
    const AlgebraPoly one_poly = AlgebraPoly::constant(AlgebraElement::one(n));
    for (const Scalar& v : {Scalar(), rt(2), rt(6)}) {
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                if (a == b) continue;
                const RationalElement lhs =
                    phi_factor(n, a, b, VariableSide::Left, v) *
                    phi_factor(n, b, a, VariableSide::Right, v);
                const ScalarRational rhs = a_factor(v);
                CHECK(lhs.numerator().times(rhs.den) ==
                      one_poly.times(rhs.num).times(lhs.denominator()));
            }
        }
    }
}

TEST_CASE("evaluation removes exactly the cancelling poles") {
    const AlgebraElement x = gen_c(2, 1) + gen_t_ab(2, 1, 2).scaled(rt(2));
    const RationalElement c = RationalElement::constant(x);
    CHECK(evaluate_at(c, rt(2)) == x);

    const Scalar r2 = rt(2);
    const RationalElement r(AlgebraPoly::constant(x).times(u_minus(r2)), u_minus(r2));
    CHECK(evaluate_at(r, r2) == x);
    CHECK(evaluate_at(r, Scalar()) == x);

    const RationalElement bad(AlgebraPoly::constant(x), u_minus(r2));
    CHECK_THROWS_AS(evaluate_at(bad, r2), NonRemovablePole);
    CHECK(evaluate_at(bad, Scalar()) == x.scaled(-r2.inverse()));

    CHECK_THROWS_AS(RationalElement(AlgebraPoly::constant(x), ScalarPoly()), ZeroDivision);

    ScalarRational s{u_minus(Scalar(1)), u_minus(r2) * u_minus(r2)};
    CHECK_THROWS_AS(evaluate_scalar(s, r2), NonRemovablePole);
}

TEST_CASE("consecutive evaluation on the three-box hook") {
    const AlgebraElement one = AlgebraElement::one(3);
    const AlgebraElement c2 = gen_c(3, 2);
    const AlgebraElement t12 = gen_t_ab(3, 1, 2);
    const AlgebraElement t13 = gen_t_ab(3, 1, 3);
    const AlgebraElement t23 = gen_t_ab(3, 2, 3);
    const AlgebraElement expect = (one + t12 * c2) * (one + c2 * (t13 - t23));

    const ShiftedTableau u = tab("1,2/3");
    CHECK(idempotent(u).element.scaled(Scalar(6)) == expect);
    CHECK(fusion_evaluate(u) == expect);

    // the u_3 pole of the middle factor alone is genuine ...
    const RationalElement phi13 = phi_factor(3, 1, 3, VariableSide::Right, Scalar());
    CHECK_THROWS_AS(evaluate_at(phi13, Scalar()), NonRemovablePole);

    // ... and cancels in the ordered product before evaluating at u_3 = 0
    RationalElement m = RationalElement::constant(phi_factor(3, 1, 2, Scalar(), rt(2)));
    m = m * phi13;
    m = m * phi_factor(3, 2, 3, VariableSide::Right, rt(2));
    CHECK(evaluate_at(m, Scalar()) == expect);

    // closed form through the multiplicative elements
    const AlgebraElement x2 = jm_x(3, 2);
    const AlgebraElement x3 = jm_x(3, 3);
    const AlgebraElement closed =
        (one.scaled(rt(2)) + x2).scaled((Scalar(2) * rt(2)).inverse()) *
        (one.scaled(Scalar(6)) - x3 * x3).scaled(Scalar(Rational(1, 6)));
    CHECK(idempotent(u).element == closed);
}

TEST_CASE("single-row idempotents from the simultaneous product") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> row(1, n);
        const ShiftedTableau u = enumerate_standard_tableaux(sp(row), false).at(0);
        AlgebraElement prod = AlgebraElement::one(n);
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                prod = prod * phi_factor(n, a, b, rt(a * (a - 1)), rt(b * (b - 1)));
        const AlgebraElement e = idempotent(u).element;
        const std::string why = "n = " + std::to_string(n);
        INFO(why);
        CHECK(prod == e.scaled(Scalar(factorial(n))));
        CHECK(fusion_evaluate(u) == e.scaled(Scalar(factorial(n))));
    }
}

TEST_CASE("scattering factors telescope along a row") {
    for (int p = 1; p <= 6; ++p) {
        ScalarRational prod{ScalarPoly::constant(Scalar(1)), ScalarPoly::constant(Scalar(1))};
        for (int j = 1; j <= p; ++j) prod = prod * a_factor(rt(j * (j - 1)));
        const ScalarPoly num(
            std::vector<Scalar>{Scalar(-p * (p + 1)), Scalar(), Scalar(1)});
        const ScalarPoly den(
            std::vector<Scalar>{Scalar(-p * (p - 1)), Scalar(), Scalar(1)});
        CHECK(prod.num * den == num * prod.den);
    }
}

TEST_CASE("projection lemma for the last letter") {
    check_report(verify_prjm_lemma(tab("1"), 2));
    check_report(verify_prjm_lemma(tab("1"), 3));
    check_report(verify_prjm_lemma(tab("1,2"), 3));
    check_report(verify_prjm_lemma(tab("1,2b"), 3));
    check_report(verify_prjm_lemma(tab("1,2,3"), 4));
    check_report(verify_prjm_lemma(tab("1,2b,3b"), 4));
    check_report(verify_prjm_lemma(tab("1,2/3"), 4));
    check_report(verify_prjm_lemma(tab("1,2b/3"), 4));

    CHECK_FALSE(verify_prjm_lemma(tab("1,2,3"), 3).pass);
}

TEST_CASE("rational evaluation identities at specific corners") {
    check_report(verify_ratf_identities(tab("1"), Box{1, 2}));
    check_report(verify_ratf_identities(tab("1,2"), Box{2, 2}));
    check_report(verify_ratf_identities(tab("1,2"), Box{1, 3}));
    check_report(verify_ratf_identities(tab("1,2"), Box{1, 3}, true));
    check_report(verify_ratf_identities(tab("1,2,3"), Box{1, 4}));
    check_report(verify_ratf_identities(tab("1,2b,3"), Box{2, 2}));
    // (2,1) only extends along the first row: (2,2) and (2,1,1) are not strict
    check_report(verify_ratf_identities(tab("1,2/3"), Box{1, 3}));
    check_report(verify_ratf_identities(tab("1,2b/3"), Box{1, 3}, true));

    CHECK_FALSE(verify_ratf_identities(tab("1,2"), Box{3, 3}).pass);
    CHECK_FALSE(verify_ratf_identities(tab("1,2"), Box{2, 2}, true).pass);
}

TEST_CASE("scalar evaluation matches the dimension ratio") {
    // row of length 2 extended on the diagonal: 3 g_(2) / g_(2,1) = 3
    ScalarRational s{ScalarPoly(std::vector<Scalar>{Scalar(), Scalar(1)}), u_minus(Scalar())};
    s = s * a_factor(Scalar()) * a_factor(rt(2));
    CHECK(evaluate_scalar(s, Scalar()) == Scalar(3));
}

TEST_CASE("full sweep") {
    for (int n = 1; n <= 4; ++n) check_report(verify_fusion(n));
}

TEST_CASE("five-letter spot checks") {
    for (const char* text : {"1,2,3,4/5", "1,2,4b,5/3"}) {
        const ShiftedTableau u = tab(text);
        const Scalar ratio(Rational(factorial(5), g_lambda_formula(u.shape())));
        const std::string why = std::string("tableau ") + text;
        INFO(why);
        CHECK(fusion_evaluate(u) == idempotent(u).element.scaled(ratio));
    }
}

} // TEST_SUITE

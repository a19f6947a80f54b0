#include "doctest.h"

#include <vector>

#include "sergeev/idempotents.hpp"
#include "sergeev/linalg.hpp"

using namespace sergeev;

namespace {

ShiftedTableau tab(const std::string& text) { return ShiftedTableau::from_text(text); }

Scalar sc(long long v) { return Scalar(Rational(v)); }

AlgebraElement shift(const AlgebraElement& e, const Scalar& s) {
    return AlgebraElement::one(e.n()).scaled(s);
}

std::vector<ShiftedTableau> barred_level(int n) {
    std::vector<ShiftedTableau> out;
    for (const auto& shape : enumerate_strict_partitions(n))
        for (auto& t : enumerate_standard_tableaux(shape, true)) out.push_back(std::move(t));
    return out;
}

void collect_reduced_words(const Permutation& w, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (w.is_identity()) {
        out.push_back(cur);
        return;
    }
    const Permutation winv = w.inverse();
    for (int a = 1; a < w.n(); ++a) {
        if (winv(a) > winv(a + 1)) {
            cur.push_back(a);
            collect_reduced_words(Permutation::adjacent(w.n(), a).compose(w), cur, out);
            cur.pop_back();
        }
    }
}

ShiftedTableau bar_boxes(const ShiftedTableau& t, const std::vector<Box>& beta) {
    ShiftedTableau out = t;
    for (const Box& b : beta) out = out.with_bar(out.entry_at(b), true);
    return out;
}

} // namespace

TEST_SUITE("idempotents") {

TEST_CASE("base case and the six rank-3 elements") {
    CHECK(idempotent(tab("1")).element == AlgebraElement::one(1));

    const AlgebraElement x2 = jm_x(3, 2), x3 = jm_x(3, 3);
    const Scalar rt2 = Scalar::sqrt_int(2), rt6 = Scalar::sqrt_int(6);
    const Scalar inv2rt2 = (sc(2) * rt2).inverse();

    const AlgebraElement ep = (x2 + shift(x2, rt2)).scaled(inv2rt2);
    const AlgebraElement em = (shift(x2, rt2) - x2).scaled(inv2rt2);
    const AlgebraElement fp = (x3 * (x3 + shift(x3, rt6))).scaled(Scalar(Rational(1, 12)));
    const AlgebraElement fm = (x3 * (x3 - shift(x3, rt6))).scaled(Scalar(Rational(1, 12)));
    const AlgebraElement f0 = (shift(x3, sc(6)) - x3 * x3).scaled(Scalar(Rational(1, 6)));

    CHECK(idempotent(tab("1,2,3")).element == ep * fp);
    CHECK(idempotent(tab("1,2,3b")).element == ep * fm);
    CHECK(idempotent(tab("1,2b,3")).element == em * fp);
    CHECK(idempotent(tab("1,2b,3b")).element == em * fm);
    CHECK(idempotent(tab("1,2/3")).element == ep * f0);
    CHECK(idempotent(tab("1,2b/3")).element == em * f0);

    auto kap = idempotent(tab("1,2,4b/3")).kappa;
    REQUIRE(kap.size() == 4);
    CHECK(kap[0].is_zero());
    CHECK(kap[1] == rt2);
    CHECK(kap[2].is_zero());
    CHECK(kap[3] == -rt6);
}

TEST_CASE("idempotent system sweeps") {
    for (int n = 1; n <= 4; ++n) {
        CheckReport rep = verify_idempotent_system(n, Exec::Serial);
        CHECK(rep.pass);
        if (!rep.pass)
            for (const auto& f : rep.failures) MESSAGE(f);
    }
    CheckReport par = verify_idempotent_system(3, Exec::Par);
    CHECK(par.pass);
    CHECK(barred_level(3).size() == 6);
    CHECK(barred_level(4).size() == 16);
}

TEST_CASE("factored application agrees with dense products") {
    // every ordered pair at n = 3, a sample at n = 4
    const auto l3 = barred_level(3);
    for (const auto& u : l3)
        for (const auto& v : l3)
            CHECK(apply_idempotent_factors(u, idempotent(v).element) ==
                  idempotent(u).element * idempotent(v).element);

    const auto l4 = barred_level(4);
    for (std::size_t i = 0; i < l4.size(); i += 5)
        for (std::size_t j = 0; j < l4.size(); j += 7)
            CHECK(apply_idempotent_factors(l4[i], idempotent(l4[j]).element) ==
                  idempotent(l4[i]).element * idempotent(l4[j]).element);

    // applying to a non-eigenvector is still the plain product
    const AlgebraElement y = gen_t(3, 1) * gen_c(3, 2) + jm_x(3, 3).scaled(Scalar::sqrt_int(2));
    for (const auto& u : l3)
        CHECK(apply_idempotent_factors(u, y) == idempotent(u).element * y);

    CHECK_THROWS_AS(apply_idempotent_factors(tab("1,2/3"), AlgebraElement::one(2)), SizeMismatch);
}

TEST_CASE("bar flips and diagonal commutation") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& u : barred_level(n)) {
            const AlgebraElement& e = idempotent(u).element;
            for (int a = 1; a <= n; ++a) {
                if (u.is_diagonal(a)) {
                    CHECK(e * gen_c(n, a) == gen_c(n, a) * e);
                } else if (!u.barred(a)) {
                    const AlgebraElement& ef = idempotent(u.with_bar(a, true)).element;
                    CHECK(e * gen_c(n, a) == gen_c(n, a) * ef);
                    CHECK(ef * gen_c(n, a) == gen_c(n, a) * e);
                }
            }
        }
    }
}

TEST_CASE("clifford sign-pattern idempotents") {
    auto single = clifford_idempotents(tab("1,2,3"));
    REQUIRE(single.size() == 1);
    CHECK(single[0].element == AlgebraElement::one(3));

    auto two = clifford_idempotents(tab("1,2/3"));
    REQUIRE(two.size() == 2);
    // diagonal entries 1 and 3: (1 ± i c_1 c_3)/2
    const AlgebraElement pair13 = gen_c(3, 1) * gen_c(3, 3);
    CHECK(two[0].element ==
          (AlgebraElement::one(3) + pair13.scaled(Scalar::i())).scaled(Scalar(Rational(1, 2))));
    CHECK(two[1].element ==
          (AlgebraElement::one(3) - pair13.scaled(Scalar::i())).scaled(Scalar(Rational(1, 2))));
    CHECK(two[0].sign_pattern == std::vector<int>{1});
    CHECK(two[1].sign_pattern == std::vector<int>{-1});
    for (const auto& ei : two)
        for (const auto& ej : two) {
            const AlgebraElement prod = ei.element * ej.element;
            if (ei.sign_pattern == ej.sign_pattern)
                CHECK(prod == ei.element);
            else
                CHECK(prod.is_zero());
        }
    CHECK(two[0].element + two[1].element == AlgebraElement::one(3));

    // l = 3: still one pair of diagonals, the third is left out
    auto three = clifford_idempotents(tab("1,2,3/4,5/6"));
    REQUIRE(three.size() == 2);
    CHECK(three[0].element + three[1].element == AlgebraElement::one(6));
    CHECK(three[0].element * three[1].element == AlgebraElement::zero(6));
    CHECK(three[0].element * three[0].element == three[0].element);

    // family members commute with the main idempotent
    const AlgebraElement& e21 = idempotent(tab("1,2/3")).element;
    for (const auto& ci : two) CHECK(ci.element * e21 == e21 * ci.element);
}

TEST_CASE("refined idempotents and ideal ranks") {
    CHECK(refined_idempotent(tab("1,2,3"), 1) == idempotent(tab("1,2,3")).element);

    const AlgebraElement r1 = refined_idempotent(tab("1,2/3"), 1);
    const AlgebraElement r2 = refined_idempotent(tab("1,2/3"), 2);
    CHECK(r1 + r2 == idempotent(tab("1,2/3")).element);
    CHECK(r1 * r1 == r1);
    CHECK(r2 * r2 == r2);
    CHECK((r1 * r2).is_zero());
    CHECK_THROWS_AS(refined_idempotent(tab("1,2/3"), 3), IndexOutOfRange);

    // ranks at n = 3: full ideal 2^n g, refined 2^{n - floor(l/2)} g
    for (const auto& u : barred_level(3)) {
        const int l = static_cast<int>(u.shape().length());
        const long long g = g_lambda_formula(u.shape());
        const std::size_t full = right_ideal_rank(idempotent(u).element);
        CHECK(full == static_cast<std::size_t>((1LL << 3) * g));
        const int m = l / 2;
        for (int r = 1; r <= (1 << m); ++r) {
            const std::size_t refined = right_ideal_rank(refined_idempotent(u, r), Exec::Par);
            CHECK(refined == static_cast<std::size_t>((1LL << (3 - m)) * g));
        }
        // trace shortcut: rank of a projection equals its trace
        const Scalar tr = idempotent(u).element.coefficient(Permutation(3), 0) * sc(8 * 6);
        CHECK(tr == sc(static_cast<long long>(full)));
    }
}

TEST_CASE("intertwiner relations") {
    for (int n = 3; n <= 4; ++n) {
        for (int a = 1; a + 1 < n; ++a)
            CHECK(intertwiner_phi(n, a) * intertwiner_phi(n, a + 1) * intertwiner_phi(n, a) ==
                  intertwiner_phi(n, a + 1) * intertwiner_phi(n, a) * intertwiner_phi(n, a + 1));
        for (int a = 1; a < n; ++a) {
            const AlgebraElement xa = jm_x(n, a), xb = jm_x(n, a + 1);
            const AlgebraElement sq = xa * xa - xb * xb;
            CHECK(intertwiner_phi(n, a) * intertwiner_phi(n, a) ==
                  (xa * xa + xb * xb).scaled(sc(2)) - sq * sq);
        }
    }
    CHECK(intertwiner_phi(4, 1) * intertwiner_phi(4, 3) ==
          intertwiner_phi(4, 3) * intertwiner_phi(4, 1));

    // phi_w is reduced-word independent over Sym_4
    auto codes = all_perm_codes(4);
    for (auto code : codes) {
        const Permutation w = Permutation::unpacked(4, code);
        std::vector<std::vector<int>> words;
        std::vector<int> cur;
        collect_reduced_words(w, cur, words);
        const AlgebraElement canonical = phi_w(w);
        for (const auto& word : words) {
            AlgebraElement prod = AlgebraElement::one(4);
            for (int a : word) prod = prod * intertwiner_phi(4, a);
            CHECK(prod == canonical);
        }
    }

    // phi_w c_a = c_{w(a)} phi_w, and star realizes phi*
    for (auto code : all_perm_codes(3)) {
        const Permutation w = Permutation::unpacked(3, code);
        for (int a = 1; a <= 3; ++a)
            CHECK(phi_w(w) * gen_c(3, a) == gen_c(3, w(a)) * phi_w(w));
        CHECK(phi_star_w(w) == anti_involution_star(phi_w(w)));
        CHECK(phi_star_w(w) == phi_w(w.inverse()));
    }

    // phi_a e_U = e_{s_a U} phi_a, with e = 0 for non-standard swaps
    for (int n = 2; n <= 4; ++n) {
        for (const auto& u : barred_level(n)) {
            for (int a = 1; a < n; ++a) {
                const AlgebraElement lhs = intertwiner_phi(n, a) * idempotent(u).element;
                auto swapped = u.swap_adjacent(a);
                const AlgebraElement rhs =
                    swapped ? idempotent(*swapped).element * intertwiner_phi(n, a)
                            : AlgebraElement::zero(n);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("zeta elements") {
    CHECK(zeta(tab("1,2,3"), tab("1,2,3"), {}) == idempotent(tab("1,2,3")).element);
    CHECK_THROWS_AS(zeta(tab("1,2,3"), tab("1,2/3"), {}), ShapeMismatch);
    CHECK_THROWS_AS(zeta(tab("1,2b,3"), tab("1,2,3"), {}), NotStandard);

    // all equivalent expressions agree at n = 3
    for (const auto& shape : enumerate_strict_partitions(3)) {
        const auto standard = enumerate_standard_tableaux(shape, false);
        const auto boxes = row_tableau(shape).nondiagonal_boxes();
        for (std::uint32_t bm = 0; bm < (1u << boxes.size()); ++bm) {
            std::vector<Box> beta;
            for (std::size_t i = 0; i < boxes.size(); ++i)
                if (bm & (1u << i)) beta.push_back(boxes[i]);
            ShiftedTableau rb = bar_boxes(row_tableau(shape), beta);
            for (const auto& t : standard) {
                for (const auto& u : standard) {
                    const AlgebraElement z = zeta(t, u, beta);
                    const AlgebraElement ph = phi_w(permutation_d(t));
                    const AlgebraElement ps = phi_star_w(permutation_d(u));
                    const AlgebraElement et = idempotent(bar_boxes(t, beta)).element;
                    const AlgebraElement eu = idempotent(bar_boxes(u, beta)).element;
                    CHECK(z == et * ph * ps);
                    CHECK(z == ph * ps * eu);
                    CHECK(z == et * ph * ps * eu);
                    CHECK(z == ph * idempotent(rb).element * ps * eu);
                }
            }
        }
    }

    // one larger spot check
    {
        const ShiftedTableau t4 = tab("1,2,4/3");
        std::vector<Box> beta{Box{1, 2}};
        const AlgebraElement z = zeta(t4, t4, beta);
        const AlgebraElement et = idempotent(bar_boxes(t4, beta)).element;
        CHECK(z == et * phi_w(permutation_d(t4)) * phi_star_w(permutation_d(t4)));
    }
}

TEST_CASE("zeta basis rank") {
    CheckReport r2 = verify_zeta_basis(2, Exec::Serial);
    CHECK(r2.pass);
    CheckReport r3 = verify_zeta_basis(3, Exec::Par);
    CHECK(r3.pass);
    if (!r3.pass)
        for (const auto& f : r3.failures) MESSAGE(f);
}

TEST_CASE("spectral decomposition of the top JM element") {
    CHECK(jm_spectral_decomposition(1).is_zero());

    const AlgebraElement lhs = jm_spectral_decomposition(2);
    const Scalar rt2 = Scalar::sqrt_int(2);
    CHECK(lhs == idempotent(tab("1,2")).element.scaled(rt2) -
                     idempotent(tab("1,2b")).element.scaled(rt2));
    CHECK(lhs == jm_x(2, 2));

    CHECK(jm_spectral_decomposition(3) == jm_x(3, 3));
    CHECK(jm_spectral_decomposition(4) == jm_x(4, 4));
}

} // TEST_SUITE

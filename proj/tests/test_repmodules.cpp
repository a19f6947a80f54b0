#include "doctest.h"

#include <map>
#include <vector>

#include "sergeev/idempotents.hpp"
#include "sergeev/linalg.hpp"
#include "sergeev/repmodules.hpp"

using namespace sergeev;

namespace {

ShiftedTableau tab(const std::string& text) { return ShiftedTableau::from_text(text); }

StrictPartition sp(std::vector<int> parts) { return StrictPartition(std::move(parts)); }

std::vector<RepMatrix> all_generators(const StrictPartition& shape, ModuleFlavor flavor) {
    const int n = shape.size();
    std::vector<RepMatrix> out;
    const auto act = flavor == ModuleFlavor::Uhat ? uhat_action : seminormal_action;
    for (int a = 1; a < n; ++a) out.push_back(act(shape, "s" + std::to_string(a)));
    for (int a = 1; a <= n; ++a) out.push_back(act(shape, "x" + std::to_string(a)));
    for (int a = 1; a <= n; ++a) out.push_back(act(shape, "c" + std::to_string(a)));
    return out;
}

std::map<std::size_t, Scalar> column_of(const ScalarMatrix& m, std::size_t col) {
    std::map<std::size_t, Scalar> out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m.at(r, col).is_zero()) out[r] = m.at(r, col);
    return out;
}

// theta-style product y_{a_r} ... y_{a_1} for an arbitrary word (a_1, ..., a_r).
AlgebraElement y_product(int n, const std::vector<int>& word) {
    AlgebraElement out = AlgebraElement::one(n);
    for (int a : word) out = gen_y(n, a) * out;
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

} // namespace

TEST_SUITE("repmodules") {

    TEST_CASE("single-row module has no swap terms") {
        for (int n = 2; n <= 4; ++n) {
            const StrictPartition shape = sp({n});
            const ModuleBasis basis(shape, ModuleFlavor::Uhat);
            REQUIRE(basis.tableaux().size() == 1);
            for (int a = 1; a < n; ++a) {
                const ScalarMatrix m = uhat_action(shape, "s" + std::to_string(a)).mat;
                for (std::uint32_t eps = 0; eps < basis.per_tableau(); ++eps) {
                    const auto [sgn, moved] = mask_image(Permutation::adjacent(n, a), eps);
                    (void)sgn;
                    const std::uint32_t cc = moved ^ (1u << (a - 1)) ^ (1u << a);
                    for (const auto& [row, val] : column_of(m, eps)) {
                        (void)val;
                        CHECK((row == moved || row == cc));
                    }
                }
            }
        }
    }

    TEST_CASE("uhat relations and dimensions") {
        CHECK(ModuleBasis(sp({2, 1}), ModuleFlavor::Uhat).dim() == 8);
        for (int n = 1; n <= 4; ++n) {
            for (const auto& shape : enumerate_strict_partitions(n)) {
                const auto mats = all_generators(shape, ModuleFlavor::Uhat);
                const CheckReport rep = verify_module_relations(mats, ModuleFlavor::Uhat);
                const std::string why =
                    shape.to_string() + ": " +
                    (rep.failures.empty() ? std::string() : rep.failures.front());
                INFO(why);
                CHECK(rep.pass);
                CHECK(mats.front().mat.rows() ==
                      (std::size_t{1} << n) * static_cast<std::size_t>(g_lambda_formula(shape)));
            }
        }
    }

    TEST_CASE("jm eigenvalues on barred vectors") {
        for (int n = 1; n <= 4; ++n) {
            for (const auto& shape : enumerate_strict_partitions(n)) {
                const ModuleBasis basis(shape, ModuleFlavor::Uhat);
                std::vector<ScalarMatrix> xs;
                for (int a = 1; a <= n; ++a)
                    xs.push_back(uhat_action(shape, "x" + std::to_string(a)).mat);
                for (const auto& u : enumerate_standard_tableaux(shape, true)) {
                    std::uint32_t mask = 0;
                    for (int a = 1; a <= n; ++a)
                        if (u.barred(a)) mask |= 1u << (a - 1);
                    const std::size_t idx = basis.index_of(basis.tableau_index(u.without_bars()), mask);
                    for (int a = 1; a <= n; ++a) CHECK(xs[a - 1].at(idx, idx) == u.signed_content(a));
                }
            }
        }
    }

    TEST_CASE("barred idempotents cut out weight spaces") {
        // e_U is a polynomial in the diagonal x matrices, so on this module it
        // is the 0/1 diagonal projection onto the x weight of U. Entries on
        // the main diagonal of the shape carry weight zero, so their mask bits
        // are invisible: the image has one basis vector per choice of them.
        for (int n = 1; n <= 4; ++n) {
            for (const auto& shape : enumerate_strict_partitions(n)) {
                const ModuleBasis basis(shape, ModuleFlavor::Uhat);
                for (const auto& u : enumerate_standard_tableaux(shape, true)) {
                    const ScalarMatrix m = uhat_matrix(shape, idempotent(u).element);
                    std::uint32_t bars = 0;
                    for (int a = 1; a <= n; ++a)
                        if (u.barred(a)) bars |= 1u << (a - 1);
                    const ShiftedTableau t = u.without_bars();
                    std::uint32_t free_bits = 0;
                    for (int a = 1; a <= n; ++a)
                        if (t.is_diagonal(a)) free_bits |= 1u << (a - 1);
                    const std::size_t ti = basis.tableau_index(t);
                    for (std::size_t j = 0; j < m.cols(); ++j) {
                        const bool hit = j / basis.per_tableau() == ti &&
                                         ((basis.mask_at(ti, j % basis.per_tableau()) ^ bars) &
                                          ~free_bits) == 0;
                        for (std::size_t i = 0; i < m.rows(); ++i) {
                            const Scalar expect =
                                (hit && i == j) ? Scalar(Rational(1)) : Scalar();
                            CHECK(m.at(i, j) == expect);
                        }
                    }
                }
            }
        }
    }

    TEST_CASE("idempotents of other shapes annihilate the module") {
        const StrictPartition shape = sp({3});
        const ScalarMatrix m = uhat_matrix(shape, idempotent(tab("1,2/3")).element);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) CHECK(m.at(i, j).is_zero());
    }

    TEST_CASE("normalization constants") {
        CHECK(normalization_b(tab("1,2,3")) == Scalar(Rational(1)));
        CHECK(normalization_b(tab("1,2,3/4")) == Scalar(Rational(1)));
        CHECK(normalization_b(tab("1,2,4/3")) == Scalar::radical(Rational(2), 6));

        // b_T read off honestly: the intertwiner column phi_{d(T)} v_R = b_T v_T.
        for (int n = 1; n <= 4; ++n) {
            for (const auto& shape : enumerate_strict_partitions(n)) {
                const ModuleBasis basis(shape, ModuleFlavor::Uhat);
                const std::size_t rcol = basis.index_of(basis.tableau_index(row_tableau(shape)), 0);
                for (const auto& t : basis.tableaux()) {
                    const ScalarMatrix m = uhat_matrix(shape, phi_w(permutation_d(t)));
                    const auto col = column_of(m, rcol);
                    REQUIRE(col.size() == 1);
                    const auto& [row, val] = *col.begin();
                    CHECK(row == basis.index_of(basis.tableau_index(t), 0));
                    CHECK(val == normalization_b(t));
                }
            }
        }

        for (int n = 1; n <= 6; ++n)
            for (const auto& shape : enumerate_strict_partitions(n))
                for (const auto& t : enumerate_standard_tableaux(shape, false))
                    CHECK(!normalization_b(t).is_zero());
    }

    TEST_CASE("seminormal relations and dimensions") {
        CHECK(ModuleBasis(sp({2, 1}), ModuleFlavor::Seminormal).dim() == 4);
        for (int n = 1; n <= 4; ++n) {
            for (const auto& shape : enumerate_strict_partitions(n)) {
                const auto mats = all_generators(shape, ModuleFlavor::Seminormal);
                const CheckReport rep = verify_module_relations(mats, ModuleFlavor::Seminormal);
                const std::string why =
                    shape.to_string() + ": " +
                    (rep.failures.empty() ? std::string() : rep.failures.front());
                INFO(why);
                CHECK(rep.pass);
                const std::size_t expect =
                    (std::size_t{1} << (n - shape.length() / 2)) *
                    static_cast<std::size_t>(g_lambda_formula(shape));
                CHECK(mats.front().mat.rows() == expect);
            }
        }
    }

    TEST_CASE("determined clifford letters act through partners") {
        for (int n = 3; n <= 4; ++n) {
            for (const auto& shape : enumerate_strict_partitions(n)) {
                if (shape.length() < 2) continue;
                const ModuleBasis basis(shape, ModuleFlavor::Seminormal);
                std::vector<ScalarMatrix> cs;
                for (int a = 1; a <= n; ++a)
                    cs.push_back(seminormal_action(shape, "c" + std::to_string(a)).mat);
                for (std::size_t ti = 0; ti < basis.tableaux().size(); ++ti) {
                    const auto diag = basis.tableaux()[ti].diagonal_entries();
                    const std::size_t col = basis.index_of(ti, 0);
                    for (std::size_t j = 1; j < diag.size(); j += 2)
                        for (std::size_t r = 0; r < basis.dim(); ++r)
                            CHECK(cs[diag[j] - 1].at(r, col) ==
                                  Scalar::i() * cs[diag[j - 1] - 1].at(r, col));
                }
            }
        }
    }

    TEST_CASE("seminormal form matches the left ideal") {
        const int n = 3;
        for (const auto& shape : enumerate_strict_partitions(n)) {
            const ShiftedTableau r = row_tableau(shape);
            const AlgebraElement seed =
                idempotent(r).element * clifford_idempotents(r)[0].element;

            const std::size_t expect = (std::size_t{1} << (n - shape.length() / 2)) *
                                       static_cast<std::size_t>(g_lambda_formula(shape));
            CHECK(right_ideal_rank(seed) == expect);

            // The basis map c^eta xi_T -> c^eta phi_{d(T)} seed / b_T intertwines
            // every generator with the seminormal matrices.
            const ModuleBasis basis(shape, ModuleFlavor::Seminormal);
            std::vector<AlgebraElement> sigma;
            for (std::size_t ti = 0; ti < basis.tableaux().size(); ++ti) {
                const ShiftedTableau& t = basis.tableaux()[ti];
                const AlgebraElement stem =
                    phi_w(permutation_d(t)) * seed;
                const Scalar binv = normalization_b(t).inverse();
                for (std::size_t inner = 0; inner < basis.per_tableau(); ++inner)
                    sigma.push_back(AlgebraElement::monomial(Permutation(n), basis.mask_at(ti, inner),
                                                             Scalar(Rational(1))) *
                                    stem.scaled(binv));
            }
            std::vector<std::pair<std::string, AlgebraElement>> gens;
            for (int a = 1; a < n; ++a) gens.push_back({"s" + std::to_string(a), gen_s(n, a)});
            for (int a = 1; a <= n; ++a) gens.push_back({"c" + std::to_string(a), gen_c(n, a)});
            gens.push_back({"x2", jm_x(n, 2)});
            gens.push_back({"x3", jm_x(n, 3)});
            for (const auto& [label, elem] : gens) {
                const ScalarMatrix m = seminormal_action(shape, label).mat;
                for (std::size_t col = 0; col < basis.dim(); ++col) {
                    AlgebraElement rhs = AlgebraElement::zero(n);
                    for (std::size_t row = 0; row < basis.dim(); ++row) {
                        if (m.at(row, col).is_zero()) continue;
                        rhs = rhs + sigma[row].scaled(m.at(row, col));
                    }
                    CHECK(elem * sigma[col] == rhs);
                }
            }
        }
    }

    TEST_CASE("theta words change by a global sign across reduced words") {
        for (int n = 2; n <= 4; ++n) {
            for (const auto& shape : enumerate_strict_partitions(n)) {
                for (const auto& t : enumerate_standard_tableaux(shape, false)) {
                    const AlgebraElement fixed = theta_word(t);
                    CHECK(fixed == y_product(n, reduced_word(t)));
                    std::vector<std::vector<int>> words;
                    std::vector<int> cur;
                    collect_reduced_words(permutation_d(t), cur, words);
                    for (const auto& word : words) {
                        const AlgebraElement alt = y_product(n, word);
                        CHECK((alt == fixed || alt == -fixed));
                    }
                }
            }
        }
    }

    TEST_CASE("theta action on the four-box hook") {
        const StrictPartition shape = sp({3, 1});
        const ModuleBasis basis(shape, ModuleFlavor::ThetaSpan);
        const std::size_t ti = basis.tableau_index(tab("1,2,3/4"));
        const std::size_t ui = basis.tableau_index(tab("1,2,4/3"));
        const std::size_t colT = basis.index_of(ti, 0), colU = basis.index_of(ui, 0);
        const auto c2 = [&](std::size_t t) { return basis.index_of(t, 0b0010); };
        const auto c3 = [&](std::size_t t) { return basis.index_of(t, 0b0100); };

        const ScalarMatrix t1 = spin_theta_action(shape, 1).mat;
        const ScalarMatrix t2 = spin_theta_action(shape, 2).mat;
        const ScalarMatrix t3 = spin_theta_action(shape, 3).mat;

        std::map<std::size_t, Scalar> expect;
        expect = {{c2(ti), Scalar(Rational(1))}};
        CHECK(column_of(t1, colT) == expect);
        expect = {{c2(ti), Scalar(Rational(-1, 2))}, {c3(ti), Scalar::radical(Rational(1, 2), 3)}};
        CHECK(column_of(t2, colT) == expect);
        expect = {{c3(ti), Scalar::radical(Rational(1, 3), 3)}, {colU, Scalar::radical(Rational(1, 3), 6)}};
        CHECK(column_of(t3, colT) == expect);
        expect = {{c2(ui), Scalar(Rational(1))}};
        CHECK(column_of(t1, colU) == expect);
        CHECK(column_of(t2, colU) == expect);
        expect = {{c3(ui), Scalar::radical(Rational(1, 3), 3)}, {colT, Scalar::radical(Rational(1, 3), 6)}};
        CHECK(column_of(t3, colU) == expect);
    }

    TEST_CASE("theta action matches the two-term formula") {
        const Scalar rt2 = Scalar::sqrt_int(2);
        for (int n = 2; n <= 4; ++n) {
            for (const auto& shape : enumerate_strict_partitions(n)) {
                const ModuleBasis basis(shape, ModuleFlavor::ThetaSpan);
                std::vector<RepMatrix> mats;
                for (int a = 1; a < n; ++a) mats.push_back(spin_theta_action(shape, a));
                for (std::size_t ti = 0; ti < basis.tableaux().size(); ++ti) {
                    const ShiftedTableau& t = basis.tableaux()[ti];
                    const Permutation dinv = permutation_d(t).inverse();
                    for (int a = 1; a < n; ++a) {
                        std::map<std::size_t, Scalar> expect;
                        const Scalar ka = t.signed_content(a), kb = t.signed_content(a + 1);
                        const Scalar gap = Scalar(t.content_square(a) - t.content_square(a + 1));
                        if (!ka.is_zero())
                            expect[basis.index_of(ti, 1u << (dinv(a) - 1))] =
                                rt2 * ka * gap.inverse();
                        if (!kb.is_zero())
                            expect[basis.index_of(ti, 1u << (dinv(a + 1) - 1))] =
                                -(rt2 * kb * gap.inverse());
                        if (const auto swapped = t.swap_adjacent(a)) {
                            Scalar y = module_y(t, a);
                            if (spin_epsilon(t, a) < 0) y = -y;
                            if (!y.is_zero())
                                expect[basis.index_of(basis.tableau_index(*swapped), 0)] = y;
                        }
                        CHECK(column_of(mats[a - 1].mat, basis.index_of(ti, 0)) == expect);
                    }
                }
                const CheckReport rep = verify_module_relations(mats, ModuleFlavor::ThetaSpan);
                const std::string why =
                    shape.to_string() + ": " +
                    (rep.failures.empty() ? std::string() : rep.failures.front());
                INFO(why);
                CHECK(rep.pass);
            }
        }
    }

    TEST_CASE("epsilon signs multiply to one across a swap") {
        for (int n = 2; n <= 5; ++n)
            for (const auto& shape : enumerate_strict_partitions(n))
                for (const auto& t : enumerate_standard_tableaux(shape, false))
                    for (int a = 1; a < n; ++a)
                        if (const auto swapped = t.swap_adjacent(a))
                            CHECK(spin_epsilon(t, a) * spin_epsilon(*swapped, a) == 1);
    }

    TEST_CASE("spin module on the four-box hook") {
        const StrictPartition shape = sp({3, 1});
        const ModuleBasis basis(shape, ModuleFlavor::Spin);
        CHECK(basis.dim() == 4);
        const auto mats = spin_module(shape);
        REQUIRE(mats.size() == 3);
        const std::size_t ti = basis.tableau_index(tab("1,2,3/4"));
        const std::size_t ui = basis.tableau_index(tab("1,2,4/3"));
        const std::size_t tp = basis.index_of(ti, 0), tm = basis.index_of(ti, 1);
        const std::size_t up = basis.index_of(ui, 0);

        std::map<std::size_t, Scalar> expect;
        expect = {{tm, Scalar(Rational(1))}};
        CHECK(column_of(mats[0].mat, tp) == expect);
        expect = {{tp, Scalar(Rational(1))}};
        CHECK(column_of(mats[0].mat, tm) == expect);
        expect = {{tm, Scalar::i() * Scalar::radical(Rational(-1, 3), 3)},
                  {up, Scalar::radical(Rational(1, 3), 6)}};
        CHECK(column_of(mats[2].mat, tp) == expect);
    }

    TEST_CASE("spin relations and dimensions") {
        for (int n = 2; n <= 4; ++n) {
            for (const auto& shape : enumerate_strict_partitions(n)) {
                const auto mats = spin_module(shape);
                const CheckReport rep = verify_module_relations(mats, ModuleFlavor::Spin);
                const std::string why =
                    shape.to_string() + ": " +
                    (rep.failures.empty() ? std::string() : rep.failures.front());
                INFO(why);
                CHECK(rep.pass);
                const std::size_t expect =
                    (std::size_t{1} << ((n - shape.length() + 1) / 2)) *
                    static_cast<std::size_t>(g_lambda_formula(shape));
                CHECK(mats.front().mat.rows() == expect);
            }
        }
    }

    TEST_CASE("spin commutants separate the two block types") {
        // The block type goes with the parity of the non-diagonal box count
        // n - l: an even count gives a plain-irreducible module (commutant 1),
        // an odd count leaves a two-dimensional commutant.
        for (int n = 2; n <= 4; ++n)
            for (const auto& shape : enumerate_strict_partitions(n))
                CHECK(commutant_dimension(spin_module(shape)) ==
                      ((n - shape.length()) % 2 ? 2u : 1u));
    }

    TEST_CASE("corrupted matrices are rejected by name") {
        auto mats = all_generators(sp({2, 1}), ModuleFlavor::Uhat);
        REQUIRE(mats[0].generator == "s1");
        mats[0].mat.at(0, 0) += Scalar(Rational(1));
        const CheckReport rep = verify_module_relations(mats, ModuleFlavor::Uhat);
        CHECK(!rep.pass);
        REQUIRE(!rep.failures.empty());
        CHECK(rep.failures.front().find("s1") != std::string::npos);

        auto spin = spin_module(sp({3}));
        spin[0].mat.at(0, 0) += Scalar(Rational(1));
        const CheckReport rep2 = verify_module_relations(spin, ModuleFlavor::Spin);
        CHECK(!rep2.pass);
        REQUIRE(!rep2.failures.empty());
        CHECK(rep2.failures.front().find("t1") != std::string::npos);
    }

    TEST_CASE("basis labels") {
        const ModuleBasis uhat(sp({3, 1}), ModuleFlavor::Uhat);
        const std::size_t ti = uhat.tableau_index(tab("1,2,4/3"));
        CHECK(uhat.label(uhat.index_of(ti, 0)) == "v[1,2,4/3]");
        CHECK(uhat.label(uhat.index_of(ti, 0b0110)) == "c2 c3 v[1,2,4/3]");

        const ModuleBasis semi(sp({2, 1}), ModuleFlavor::Seminormal);
        CHECK(semi.label(2) == "c2 xi[1,2/3]");

        const ModuleBasis spin(sp({3, 1}), ModuleFlavor::Spin);
        const std::size_t si = spin.tableau_index(tab("1,2,3/4"));
        CHECK(spin.label(spin.index_of(si, 0)) == "F[+] theta[1,2,3/4]");
        CHECK(spin.label(spin.index_of(si, 1)) == "F[-] theta[1,2,3/4]");

        const ModuleBasis odd(sp({2, 1}), ModuleFlavor::Spin);
        CHECK(odd.per_tableau() == 2);
        CHECK(odd.label(0) == "F[a0] theta[1,2/3]");
        CHECK(odd.label(1) == "F[a1] theta[1,2/3]");
    }

    TEST_CASE("generator labels are validated") {
        CHECK_THROWS_AS(uhat_action(sp({2, 1}), "s3"), IndexOutOfRange);
        CHECK_THROWS_AS(uhat_action(sp({2, 1}), "t1"), ParseError);
        CHECK_THROWS_AS(uhat_action(sp({2, 1}), "zz"), ParseError);
        CHECK_THROWS_AS(seminormal_action(sp({2, 1}), "x9"), IndexOutOfRange);
        CHECK_THROWS_AS(spin_theta_action(sp({2, 1}), 3), IndexOutOfRange);
        CHECK_THROWS_AS(spin_epsilon(tab("1,2,3"), 1), NotStandard);
    }
}

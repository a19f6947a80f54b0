#include "sergeev/repmodules.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "sergeev/errors.hpp"

namespace sergeev {

namespace {

std::uint32_t bit_of(int letter) { return 1u << (letter - 1); }

// Letters excluded for the seminormal flavor: d_2, d_4, ... of the tableau.
std::vector<int> excluded_letters(const ShiftedTableau& t) {
    const std::vector<int> diag = t.diagonal_entries();
    std::vector<int> out;
    for (std::size_t i = 1; i < diag.size(); i += 2) out.push_back(diag[i]);
    return out;
}

struct GeneratorLabel {
    char kind;
    int index;
};

GeneratorLabel parse_generator(const std::string& label, int n, bool spin) {
    if (label.size() < 2) throw ParseError("generator label '" + label + "'");
    const char kind = label[0];
    int index = 0;
    for (std::size_t i = 1; i < label.size(); ++i) {
        if (label[i] < '0' || label[i] > '9') throw ParseError("generator label '" + label + "'");
        index = index * 10 + (label[i] - '0');
    }
    const bool adjacent = kind == 's' || kind == 't';
    if (spin ? kind != 't' : (kind != 's' && kind != 'x' && kind != 'c'))
        throw ParseError("generator '" + label + "' not valid for this module flavor");
    if (index < 1 || index > (adjacent ? n - 1 : n))
        throw IndexOutOfRange("generator index in '" + label + "'");
    return {kind, index};
}

Rational y_radicand(const ShiftedTableau& t, int a) {
    const Rational p = t.content_square(a);
    const Rational q = t.content_square(a + 1);
    const Rational diff = p - q;
    if (diff.is_zero()) throw InternalError("equal neighbour contents in Y");
    return Rational(1) - Rational(2) * (p + q) / (diff * diff);
}

} // namespace

Scalar module_y(const ShiftedTableau& t, int a) {
    const Rational rad = y_radicand(t, a);
    if (rad.is_negative()) throw InternalError("negative radicand in Y");
    return Scalar::sqrt_rational(rad);
}

ModuleBasis::ModuleBasis(const StrictPartition& shape, ModuleFlavor flavor)
    : shape_(shape), flavor_(flavor), tableaux_(enumerate_standard_tableaux(shape, false)) {
    const int n = shape.size();
    const int l = shape.length();
    switch (flavor) {
        case ModuleFlavor::Uhat:
        case ModuleFlavor::ThetaSpan:
            per_tableau_ = std::size_t{1} << n;
            break;
        case ModuleFlavor::Seminormal:
            per_tableau_ = std::size_t{1} << (n - l / 2);
            break;
        case ModuleFlavor::Spin:
            per_tableau_ = std::size_t{1} << ((n - l + 1) / 2);
            break;
    }
}

std::vector<int> ModuleBasis::allowed_letters(std::size_t tab) const {
    std::vector<int> out;
    if (flavor_ == ModuleFlavor::Seminormal) {
        const std::vector<int> excl = excluded_letters(tableaux_.at(tab));
        for (int a = 1; a <= n(); ++a)
            if (std::find(excl.begin(), excl.end(), a) == excl.end()) out.push_back(a);
    } else {
        for (int a = 1; a <= n(); ++a) out.push_back(a);
    }
    return out;
}

std::uint32_t ModuleBasis::mask_at(std::size_t tab, std::size_t inner) const {
    if (inner >= per_tableau_) throw IndexOutOfRange("basis inner index");
    if (flavor_ == ModuleFlavor::Uhat || flavor_ == ModuleFlavor::ThetaSpan)
        return static_cast<std::uint32_t>(inner);
    if (flavor_ != ModuleFlavor::Seminormal) throw InternalError("no clifford mask in the spin basis");
    const std::vector<int> letters = allowed_letters(tab);
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < letters.size(); ++i)
        if (inner >> i & 1) mask |= bit_of(letters[i]);
    return mask;
}

std::size_t ModuleBasis::inner_of(std::size_t tab, std::uint32_t mask) const {
    if (flavor_ == ModuleFlavor::Uhat || flavor_ == ModuleFlavor::ThetaSpan) return mask;
    if (flavor_ != ModuleFlavor::Seminormal) throw InternalError("no clifford mask in the spin basis");
    const std::vector<int> letters = allowed_letters(tab);
    std::size_t inner = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const std::uint32_t b = bit_of(letters[i]);
        if (mask & b) {
            inner |= std::size_t{1} << i;
            mask ^= b;
        }
    }
    if (mask != 0) throw InternalError("mask uses an excluded clifford letter");
    return inner;
}

std::size_t ModuleBasis::tableau_index(const ShiftedTableau& t) const {
    for (std::size_t i = 0; i < tableaux_.size(); ++i)
        if (tableaux_[i] == t) return i;
    throw ShapeMismatch("tableau does not index this module basis");
}

std::string ModuleBasis::label(std::size_t idx) const {
    if (idx >= dim()) throw IndexOutOfRange("basis index");
    const std::size_t tab = idx / per_tableau_;
    const std::size_t inner = idx % per_tableau_;
    const std::string tabtext = tableaux_[tab].to_text();
    if (flavor_ == ModuleFlavor::Spin) {
        const int k = n() - shape_.length();
        const int p = k / 2, bits = (k + 1) / 2;
        std::string parts;
        for (int j = 1; j <= p; ++j) {
            if (!parts.empty()) parts += ',';
            parts += (inner >> (bits - j) & 1) ? '-' : '+';
        }
        if (k % 2) {
            if (!parts.empty()) parts += ',';
            parts += (inner & 1) ? "a1" : "a0";
        }
        if (parts.empty()) return "theta[" + tabtext + "]";
        return "F[" + parts + "] theta[" + tabtext + "]";
    }
    std::string prefix;
    const std::uint32_t mask = mask_at(tab, inner);
    for (int a = 1; a <= n(); ++a)
        if (mask & bit_of(a)) prefix += "c" + std::to_string(a) + " ";
    const char* stem = flavor_ == ModuleFlavor::Uhat      ? "v"
                       : flavor_ == ModuleFlavor::ThetaSpan ? "theta"
                                                            : "xi";
    return prefix + stem + "[" + tabtext + "]";
}

RepMatrix uhat_action(const StrictPartition& shape, const std::string& generator) {
    const int n = shape.size();
    const GeneratorLabel g = parse_generator(generator, n, false);
    const ModuleBasis basis(shape, ModuleFlavor::Uhat);
    const std::size_t masks = basis.per_tableau();
    ScalarMatrix mat(basis.dim(), basis.dim());

    for (std::size_t tab = 0; tab < basis.tableaux().size(); ++tab) {
        const ShiftedTableau& t = basis.tableaux()[tab];
        for (std::uint32_t eps = 0; eps < masks; ++eps) {
            const std::size_t col = basis.index_of(tab, eps);
            if (g.kind == 'c') {
                const auto [sg, mu] = clifford_merge(bit_of(g.index), eps);
                mat.at(basis.index_of(tab, mu), col) += Scalar(sg);
            } else if (g.kind == 'x') {
                Scalar kappa = t.signed_content(g.index);
                if (eps & bit_of(g.index)) kappa = -kappa;
                mat.at(col, col) += kappa;
            } else {
                const auto [sgn, moved] = mask_image(Permutation::adjacent(n, g.index), eps);
                const Scalar sfac = Scalar(sgn);
                const Scalar ka = t.signed_content(g.index);
                const Scalar kb = t.signed_content(g.index + 1);
                mat.at(basis.index_of(tab, moved), col) += sfac * (kb - ka).inverse();
                const auto [sg2, mu2] = clifford_merge(moved, bit_of(g.index) | bit_of(g.index + 1));
                mat.at(basis.index_of(tab, mu2), col) += sfac * Scalar(sg2) * (kb + ka).inverse();
                if (const auto swapped = t.swap_adjacent(g.index)) {
                    const std::size_t target = basis.tableau_index(*swapped);
                    mat.at(basis.index_of(target, moved), col) += sfac * module_y(t, g.index);
                }
            }
        }
    }
    return {generator, shape, ModuleFlavor::Uhat, std::move(mat)};
}

ScalarMatrix uhat_matrix(const StrictPartition& shape, const AlgebraElement& y) {
    const int n = shape.size();
    if (y.n() != n) throw SizeMismatch("element size vs module size");
    std::vector<ScalarMatrix> smat, cmat;
    for (int a = 1; a < n; ++a) smat.push_back(uhat_action(shape, "s" + std::to_string(a)).mat);
    for (int a = 1; a <= n; ++a) cmat.push_back(uhat_action(shape, "c" + std::to_string(a)).mat);
    const std::size_t dim = ModuleBasis(shape, ModuleFlavor::Uhat).dim();

    ScalarMatrix out(dim, dim);
    for (const auto& [word, coeff] : y.terms()) {
        std::vector<const ScalarMatrix*> factors;
        for (int a : Permutation::unpacked(n, word.perm).lex_min_reduced_word())
            factors.push_back(&smat[a - 1]);
        for (int a = 1; a <= n; ++a)
            if (word.mask & bit_of(a)) factors.push_back(&cmat[a - 1]);
        ScalarMatrix term = ScalarMatrix::identity(dim);
        for (const ScalarMatrix* f : factors) term = term.multiply(*f);
        out = matrix_add(out, matrix_scaled(term, coeff));
    }
    return out;
}

Scalar normalization_b(const ShiftedTableau& t) {
    if (t.n() == 0) return Scalar(1);
    const std::vector<int> word = reduced_word(t);
    ShiftedTableau u = row_tableau(t.shape());
    Scalar b(1);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int a = *it;
        const Rational gap = u.content_square(a) - u.content_square(a + 1);
        b *= Scalar(gap) * module_y(u, a);
        const auto next = u.swap_adjacent(a);
        if (!next) throw InternalError("reduced word leaves the standard tableaux");
        u = *next;
    }
    if (u != t.without_bars()) throw InternalError("reduced word does not reach its tableau");
    return b;
}

namespace {

// c^mask xi_T rewritten over the allowed letters of T: every excluded letter
// d_{2j} is commuted to the right end and replaced through
// c_{d_{2j}} xi_T = i c_{d_{2j-1}} xi_T.
std::pair<Scalar, std::uint32_t> seminormal_reduce(std::uint32_t mask, const ShiftedTableau& t) {
    const std::vector<int> diag = t.diagonal_entries();
    Scalar coeff(1);
    for (;;) {
        int hit = 0;
        std::size_t pos = 0;
        for (std::size_t i = 1; i < diag.size(); i += 2)
            if (mask & bit_of(diag[i])) {
                hit = diag[i];
                pos = i;
                break;
            }
        if (hit == 0) break;
        if (std::popcount(mask >> hit) % 2) coeff = -coeff;
        mask ^= bit_of(hit);
        coeff *= Scalar::i();
        const auto [sg, merged] = clifford_merge(mask, bit_of(diag[pos - 1]));
        coeff *= Scalar(sg);
        mask = merged;
    }
    return {coeff, mask};
}

} // namespace

RepMatrix seminormal_action(const StrictPartition& shape, const std::string& generator) {
    const int n = shape.size();
    const GeneratorLabel g = parse_generator(generator, n, false);
    const ModuleBasis basis(shape, ModuleFlavor::Seminormal);
    ScalarMatrix mat(basis.dim(), basis.dim());

    for (std::size_t tab = 0; tab < basis.tableaux().size(); ++tab) {
        const ShiftedTableau& t = basis.tableaux()[tab];
        for (std::size_t inner = 0; inner < basis.per_tableau(); ++inner) {
            const std::size_t col = basis.index_of(tab, inner);
            const std::uint32_t eta = basis.mask_at(tab, inner);
            if (g.kind == 'x') {
                Scalar kappa = t.signed_content(g.index);
                if (eta & bit_of(g.index)) kappa = -kappa;
                mat.at(col, col) += kappa;
            } else if (g.kind == 'c') {
                const auto [sg, mu] = clifford_merge(bit_of(g.index), eta);
                const auto [red, mu2] = seminormal_reduce(mu, t);
                mat.at(basis.index_of(tab, basis.inner_of(tab, mu2)), col) += Scalar(sg) * red;
            } else {
                const auto [sgn, moved] = mask_image(Permutation::adjacent(n, g.index), eta);
                const Scalar sfac = Scalar(sgn);
                const Scalar ka = t.signed_content(g.index);
                const Scalar kb = t.signed_content(g.index + 1);
                {
                    const auto [red, mu] = seminormal_reduce(moved, t);
                    mat.at(basis.index_of(tab, basis.inner_of(tab, mu)), col) +=
                        sfac * red * (kb - ka).inverse();
                }
                {
                    const auto [sg2, raw] = clifford_merge(moved, bit_of(g.index) | bit_of(g.index + 1));
                    const auto [red, mu] = seminormal_reduce(raw, t);
                    mat.at(basis.index_of(tab, basis.inner_of(tab, mu)), col) +=
                        sfac * Scalar(sg2) * red * (kb + ka).inverse();
                }
                if (const auto swapped = t.swap_adjacent(g.index)) {
                    const std::size_t target = basis.tableau_index(*swapped);
                    const auto [red, mu] = seminormal_reduce(moved, *swapped);
                    mat.at(basis.index_of(target, basis.inner_of(target, mu)), col) +=
                        sfac * red * module_y(t, g.index);
                }
            }
        }
    }
    return {generator, shape, ModuleFlavor::Seminormal, std::move(mat)};
}

int spin_epsilon(const ShiftedTableau& t, int a) {
    if (!t.swap_adjacent(a)) throw NotStandard("epsilon needs a standard swap");
    const std::vector<int> inv = inversion_counts(t);
    const int n = t.n();
    const std::vector<int> word = t.row_word();
    const auto pos = [&](int e) {
        return std::find(word.begin(), word.end(), e) - word.begin();
    };
    const bool length_up = pos(a) < pos(a + 1);
    int exponent = length_up ? inv[a] * (inv[a + 1] + 1) : (inv[a] + 1) * (inv[a + 1] + 1);
    for (int b = a + 2; b <= n; ++b) exponent += inv[b];
    return exponent % 2 ? -1 : 1;
}

AlgebraElement theta_word(const ShiftedTableau& t) {
    const int n = t.n();
    AlgebraElement out = AlgebraElement::one(n);
    for (int a : reduced_word(t)) out = gen_y(n, a) * out;
    return out;
}

AlgebraElement f_delta(const StrictPartition& shape, std::size_t code) {
    const int n = shape.size();
    const ShiftedTableau r = row_tableau(shape);
    std::vector<int> letters;
    for (int a = 1; a <= n; ++a)
        if (!r.is_diagonal(a)) letters.push_back(a);
    const int k = static_cast<int>(letters.size());
    const int p = k / 2, bits = (k + 1) / 2;
    if (code >= std::size_t{1} << bits) throw IndexOutOfRange("delta code");

    AlgebraElement out = AlgebraElement::one(n);
    const Permutation id(n);
    for (int j = 1; j <= p; ++j) {
        const int c1 = letters[2 * j - 2], c2 = letters[2 * j - 1];
        AlgebraElement factor =
            (code >> (bits - j) & 1)
                ? AlgebraElement::monomial(id, bit_of(c1), Scalar(1)) +
                      AlgebraElement::monomial(id, bit_of(c2), Scalar::i())
                : AlgebraElement::one(n) +
                      AlgebraElement::monomial(id, bit_of(c1) | bit_of(c2), Scalar::i());
        out = out * factor;
    }
    if (k % 2 && (code & 1)) out = out * gen_c(n, letters.back());
    return out;
}

namespace {

ScalarMatrix uhat_t_matrix(const StrictPartition& shape, int a) {
    const ScalarMatrix s = uhat_action(shape, "s" + std::to_string(a)).mat;
    const ScalarMatrix ca = uhat_action(shape, "c" + std::to_string(a)).mat;
    const ScalarMatrix cb = uhat_action(shape, "c" + std::to_string(a + 1)).mat;
    const ScalarMatrix y = matrix_scaled(matrix_sub(cb, ca), Scalar::sqrt_int(2).inverse());
    return y.multiply(s);
}

// Columns (tab, inner): the coordinates of prefix_of(inner) · theta_word(T)
// inside the Clifford block of T.
ScalarMatrix clifford_block_basis(const ModuleBasis& basis,
                                  const std::function<AlgebraElement(std::size_t, std::size_t)>& vec,
                                  std::size_t columns_per_tab) {
    const int n = basis.n();
    ScalarMatrix out(basis.tableaux().size() << n, basis.tableaux().size() * columns_per_tab);
    for (std::size_t tab = 0; tab < basis.tableaux().size(); ++tab)
        for (std::size_t inner = 0; inner < columns_per_tab; ++inner) {
            const AlgebraElement v = vec(tab, inner);
            for (const auto& [word, coeff] : v.terms()) {
                if (word.perm != Permutation(n).packed())
                    throw InternalError("clifford vector has a permutation part");
                out.at((tab << n) | word.mask, tab * columns_per_tab + inner) = coeff;
            }
        }
    return out;
}

} // namespace

RepMatrix spin_theta_action(const StrictPartition& shape, int a) {
    const int n = shape.size();
    if (a < 1 || a >= n) throw IndexOutOfRange("spin generator index");
    const ModuleBasis basis(shape, ModuleFlavor::ThetaSpan);
    const Permutation id(n);
    ScalarMatrix p = clifford_block_basis(
        basis,
        [&](std::size_t tab, std::size_t inner) {
            return AlgebraElement::monomial(id, static_cast<std::uint32_t>(inner), Scalar(1)) *
                   theta_word(basis.tableaux()[tab]);
        },
        basis.per_tableau());
    ScalarMatrix rhs = uhat_t_matrix(shape, a).multiply(p);
    return {"t" + std::to_string(a), shape, ModuleFlavor::ThetaSpan, solve(std::move(p), std::move(rhs))};
}

std::vector<RepMatrix> spin_module(const StrictPartition& shape) {
    const int n = shape.size();
    const ModuleBasis basis(shape, ModuleFlavor::Spin);
    const std::size_t q = basis.per_tableau();
    const ScalarMatrix w = clifford_block_basis(
        basis,
        [&](std::size_t tab, std::size_t inner) {
            return f_delta(shape, inner) * theta_word(basis.tableaux()[tab]);
        },
        q);

    ScalarMatrix stacked(w.rows(), basis.dim() * (n - 1));
    for (int a = 1; a < n; ++a) {
        const ScalarMatrix image = uhat_t_matrix(shape, a).multiply(w);
        for (std::size_t i = 0; i < image.rows(); ++i)
            for (std::size_t j = 0; j < image.cols(); ++j)
                stacked.at(i, (a - 1) * basis.dim() + j) = image.at(i, j);
    }
    const ScalarMatrix solved = restrict_to_span(w, std::move(stacked));

    std::vector<RepMatrix> out;
    for (int a = 1; a < n; ++a) {
        ScalarMatrix mat(basis.dim(), basis.dim());
        for (std::size_t i = 0; i < basis.dim(); ++i)
            for (std::size_t j = 0; j < basis.dim(); ++j)
                mat.at(i, j) = solved.at(i, (a - 1) * basis.dim() + j);
        out.push_back({"t" + std::to_string(a), shape, ModuleFlavor::Spin, std::move(mat)});
    }
    return out;
}

namespace {

struct LabeledMatrices {
    int n = 0;
    std::map<std::string, const ScalarMatrix*> by_label;

    const ScalarMatrix* find(char kind, int index) const {
        const auto it = by_label.find(kind + std::to_string(index));
        return it == by_label.end() ? nullptr : it->second;
    }
};

} // namespace

std::vector<RepMatrix> module_generators(const StrictPartition& shape, ModuleFlavor flavor) {
    const int n = shape.size();
    std::vector<RepMatrix> out;
    switch (flavor) {
    case ModuleFlavor::Spin:
        return spin_module(shape);
    case ModuleFlavor::ThetaSpan:
        for (int a = 1; a < n; ++a) out.push_back(spin_theta_action(shape, a));
        return out;
    case ModuleFlavor::Uhat:
    case ModuleFlavor::Seminormal: {
        const auto act = flavor == ModuleFlavor::Uhat ? uhat_action : seminormal_action;
        for (int a = 1; a < n; ++a) out.push_back(act(shape, "s" + std::to_string(a)));
        for (int a = 1; a <= n; ++a) out.push_back(act(shape, "x" + std::to_string(a)));
        for (int a = 1; a <= n; ++a) out.push_back(act(shape, "c" + std::to_string(a)));
        return out;
    }
    }
    throw InternalError("unknown module flavor");
}

CheckReport verify_module_relations(const std::vector<RepMatrix>& matrices, ModuleFlavor flavor) {
    CheckReport rep;
    rep.suite = "modules";
    if (matrices.empty()) {
        rep.fail("no matrices given");
        return rep;
    }
    const StrictPartition& shape = matrices.front().shape;
    const int n = shape.size();
    const int l = shape.length();
    rep.n = n;
    const ModuleBasis basis(shape, flavor);

    ++rep.checks;
    const std::size_t dim = basis.dim();
    LabeledMatrices gens;
    gens.n = n;
    for (const RepMatrix& m : matrices) {
        if (m.mat.rows() != dim || m.mat.cols() != dim)
            rep.fail("dimension of " + m.generator + " differs from the flavor formula");
        gens.by_label[m.generator] = &m.mat;
    }

    const ScalarMatrix id = ScalarMatrix::identity(dim);
    const auto check = [&](bool ok, const std::string& what) {
        ++rep.checks;
        if (!ok) rep.fail(what);
    };

    if (flavor == ModuleFlavor::Spin || flavor == ModuleFlavor::ThetaSpan) {
        for (int a = 1; a < n; ++a)
            if (!gens.find('t', a)) {
                rep.fail("matrix t" + std::to_string(a) + " missing");
                return rep;
            }
        for (int a = 1; a < n; ++a) {
            const ScalarMatrix& t = *gens.find('t', a);
            check(t.multiply(t) == id, "t" + std::to_string(a) + "^2 = 1");
        }
        for (int a = 1; a + 1 < n; ++a) {
            const ScalarMatrix& t = *gens.find('t', a);
            const ScalarMatrix& u = *gens.find('t', a + 1);
            check(t.multiply(u).multiply(t) == u.multiply(t).multiply(u),
                  "t braid at " + std::to_string(a));
        }
        for (int a = 1; a < n; ++a)
            for (int b = a + 2; b < n; ++b) {
                const ScalarMatrix& t = *gens.find('t', a);
                const ScalarMatrix& u = *gens.find('t', b);
                check(t.multiply(u) == matrix_scaled(u.multiply(t), Scalar(-1)),
                      "distant t anticommute " + std::to_string(a) + "," + std::to_string(b));
            }
        return rep;
    }

    for (int a = 1; a < n; ++a)
        if (!gens.find('s', a)) {
            rep.fail("matrix s" + std::to_string(a) + " missing");
            return rep;
        }
    for (int a = 1; a <= n; ++a)
        if (!gens.find('c', a) || !gens.find('x', a)) {
            rep.fail("matrix c/x" + std::to_string(a) + " missing");
            return rep;
        }

    for (int a = 1; a < n; ++a) {
        const ScalarMatrix& s = *gens.find('s', a);
        check(s.multiply(s) == id, "s" + std::to_string(a) + "^2 = 1");
    }
    for (int a = 1; a + 1 < n; ++a) {
        const ScalarMatrix& s = *gens.find('s', a);
        const ScalarMatrix& u = *gens.find('s', a + 1);
        check(s.multiply(u).multiply(s) == u.multiply(s).multiply(u), "s braid at " + std::to_string(a));
    }
    for (int a = 1; a < n; ++a)
        for (int b = a + 2; b < n; ++b)
            check(gens.find('s', a)->multiply(*gens.find('s', b)) ==
                      gens.find('s', b)->multiply(*gens.find('s', a)),
                  "distant s commute " + std::to_string(a) + "," + std::to_string(b));
    for (int a = 1; a <= n; ++a) {
        const ScalarMatrix& c = *gens.find('c', a);
        check(c.multiply(c) == matrix_scaled(id, Scalar(-1)), "c" + std::to_string(a) + "^2 = -1");
    }
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            check(gens.find('c', a)->multiply(*gens.find('c', b)) ==
                      matrix_scaled(gens.find('c', b)->multiply(*gens.find('c', a)), Scalar(-1)),
                  "c anticommute " + std::to_string(a) + "," + std::to_string(b));
    for (int a = 1; a < n; ++a) {
        const ScalarMatrix& s = *gens.find('s', a);
        for (int b = 1; b <= n; ++b) {
            const ScalarMatrix& c = *gens.find('c', b);
            const int image = b == a ? a + 1 : b == a + 1 ? a : b;
            check(s.multiply(c) == gens.find('c', image)->multiply(s),
                  "s" + std::to_string(a) + " c" + std::to_string(b) + " interchange");
        }
    }

    bool x1_zero = true;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (!gens.find('x', 1)->at(i, j).is_zero()) x1_zero = false;
    check(x1_zero, "x1 = 0");
    for (int a = 1; a < n; ++a) {
        const ScalarMatrix& s = *gens.find('s', a);
        const ScalarMatrix rhs = matrix_add(
            matrix_add(s.multiply(*gens.find('x', a)).multiply(s), s),
            gens.find('c', a + 1)->multiply(*gens.find('c', a)).multiply(s));
        check(*gens.find('x', a + 1) == rhs, "x recursion at " + std::to_string(a + 1));
    }

    bool diag_ok = true, eig_ok = true;
    for (int a = 1; a <= n; ++a) {
        const ScalarMatrix& x = *gens.find('x', a);
        for (std::size_t tab = 0; tab < basis.tableaux().size(); ++tab)
            for (std::size_t inner = 0; inner < basis.per_tableau(); ++inner) {
                const std::size_t idx = basis.index_of(tab, inner);
                for (std::size_t r = 0; r < dim; ++r)
                    if (r != idx && !x.at(r, idx).is_zero()) diag_ok = false;
                Scalar kappa = basis.tableaux()[tab].signed_content(a);
                if (basis.mask_at(tab, inner) & bit_of(a)) kappa = -kappa;
                if (x.at(idx, idx) != kappa) eig_ok = false;
            }
    }
    check(diag_ok, "x matrices diagonal");
    check(eig_ok, "x eigenvalues are signed contents");
    return rep;
}

std::size_t commutant_dimension(const std::vector<RepMatrix>& matrices, Exec exec) {
    if (matrices.empty()) throw SizeMismatch("commutant of an empty family");
    const std::size_t d = matrices.front().mat.rows();
    ScalarMatrix sys(matrices.size() * d * d, d * d);
    std::size_t row = 0;
    for (const RepMatrix& m : matrices) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t k = 0; k < d; ++k) {
                    sys.at(row, k * d + j) += m.mat.at(i, k);
                    sys.at(row, i * d + k) -= m.mat.at(k, j);
                }
                ++row;
            }
    }
    return d * d - rank_destructive(sys, exec);
}

} // namespace sergeev

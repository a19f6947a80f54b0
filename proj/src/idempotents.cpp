#include "sergeev/idempotents.hpp"

#include <chrono>
#include <map>
#include <mutex>

#include "sergeev/errors.hpp"
#include "sergeev/linalg.hpp"

namespace sergeev {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<ShiftedTableau> all_barred_tableaux(int n) {
    std::vector<ShiftedTableau> out;
    for (const auto& shape : enumerate_strict_partitions(n))
        for (auto& t : enumerate_standard_tableaux(shape, true)) out.push_back(std::move(t));
    return out;
}

} // namespace

const IdempotentRecord& idempotent(const ShiftedTableau& u) {
    static std::mutex mu;
    static std::map<std::string, IdempotentRecord> cache;
    const std::string key = u.to_text();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const int n = u.n();
    IdempotentRecord rec{u, AlgebraElement::one(n), {}};
    if (n == 1) {
        rec.kappa.push_back(Scalar());
    } else {
        const ShiftedTableau v = u.prefix(n - 1);
        const IdempotentRecord& below = idempotent(v);
        rec.kappa = below.kappa;
        const Scalar kap = u.signed_content(n);
        rec.kappa.push_back(kap);

        AlgebraElement e = embed(below.element, n);
        const AlgebraElement xn = jm_x(n, n);
        Scalar denom(Rational(1));
        for (const auto& cand : addable_signed_contents(v.shape())) {
            if (cand.kappa == kap) continue;
            const Scalar diff = kap - cand.kappa;
            if (diff.is_zero()) throw InternalError("coinciding addable contents in the recursion");
            e = e * (xn - AlgebraElement::one(n).scaled(cand.kappa));
            denom = denom * diff;
        }
        rec.element = e.scaled(denom.inverse());
    }

    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(rec)).first->second;
}

AlgebraElement apply_idempotent_factors(const ShiftedTableau& u, const AlgebraElement& y) {
    const int n = y.n();
    if (u.n() > n) throw SizeMismatch("factor chain of a larger tableau");

    struct LinearFactor {
        int level;
        Scalar b;
    };
    std::vector<LinearFactor> chain;
    Scalar denom(Rational(1));
    for (int k = 2; k <= u.n(); ++k) {
        const Scalar kap = u.signed_content(k);
        for (const auto& cand : addable_signed_contents(u.prefix(k - 1).shape())) {
            if (cand.kappa == kap) continue;
            chain.push_back({k, cand.kappa});
            denom = denom * (kap - cand.kappa);
        }
    }

    std::vector<AlgebraElement> xs;
    for (int k = 1; k <= u.n(); ++k) xs.push_back(jm_x(n, k));

    AlgebraElement acc = y.scaled(denom.inverse());
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        acc = xs[it->level - 1] * acc - acc.scaled(it->b);
    return acc;
}

std::vector<CliffordIdempotent> clifford_idempotents(const ShiftedTableau& u) {
    const int n = u.n();
    const std::vector<int> diag = u.diagonal_entries();
    const int m = static_cast<int>(diag.size()) / 2;
    const Scalar half(Rational(1, 2));

    std::vector<CliffordIdempotent> out;
    out.reserve(1u << m);
    for (int r = 0; r < (1 << m); ++r) {
        CliffordIdempotent ci{diag, {}, AlgebraElement::one(n)};
        for (int a = 1; a <= m; ++a) {
            const int eps = (r >> (a - 1)) & 1 ? -1 : 1;
            ci.sign_pattern.push_back(eps);
            AlgebraElement pair = gen_c(n, diag[2 * a - 2]) * gen_c(n, diag[2 * a - 1]);
            const Scalar ieps = eps == 1 ? Scalar::i() : -Scalar::i();
            AlgebraElement factor = (AlgebraElement::one(n) + pair.scaled(ieps)).scaled(half);
            ci.element = ci.element * factor;
        }
        out.push_back(std::move(ci));
    }
    return out;
}

AlgebraElement refined_idempotent(const ShiftedTableau& u, int r) {
    const auto family = clifford_idempotents(u);
    if (r < 1 || r > static_cast<int>(family.size()))
        throw IndexOutOfRange("refined idempotent index " + std::to_string(r));
    return family[r - 1].element * idempotent(u).element;
}

AlgebraElement intertwiner_phi(int n, int a) {
    if (a < 1 || a >= n) throw IndexOutOfRange("intertwiner index " + std::to_string(a));
    const AlgebraElement xa = jm_x(n, a), xb = jm_x(n, a + 1);
    const AlgebraElement sq = xa * xa - xb * xb;
    return gen_s(n, a) * sq + xa + xb - gen_c(n, a) * gen_c(n, a + 1) * (xa - xb);
}

AlgebraElement phi_w(const Permutation& w) {
    static std::mutex mu;
    static std::map<std::pair<int, std::uint64_t>, AlgebraElement> cache;
    const auto key = std::make_pair(w.n(), w.packed());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    AlgebraElement out = AlgebraElement::one(w.n());
    for (int a : w.lex_min_reduced_word()) out = out * intertwiner_phi(w.n(), a);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(out)).first->second;
}

AlgebraElement phi_star_w(const Permutation& w) {
    AlgebraElement out = AlgebraElement::one(w.n());
    for (int a : w.lex_min_reduced_word()) out = intertwiner_phi(w.n(), a) * out;
    return out;
}

AlgebraElement zeta(const ShiftedTableau& t, const ShiftedTableau& u, const std::vector<Box>& beta) {
    if (!(t.shape() == u.shape())) throw ShapeMismatch("zeta tableaux must share one shape");
    for (int a = 1; a <= t.n(); ++a)
        if (t.barred(a) || u.barred(a)) throw NotStandard("zeta takes unbarred tableaux");
    ShiftedTableau rbeta = row_tableau(t.shape());
    for (const Box& box : beta) rbeta = rbeta.with_bar(rbeta.entry_at(box), true);
    return phi_w(permutation_d(t)) * idempotent(rbeta).element * phi_star_w(permutation_d(u));
}

AlgebraElement jm_spectral_decomposition(int n) {
    AlgebraElement sum = AlgebraElement::zero(n);
    for (const auto& u : all_barred_tableaux(n)) {
        const IdempotentRecord& rec = idempotent(u);
        sum += rec.element.scaled(rec.kappa[n - 1]);
    }
    if (!(sum == jm_x(n, n))) throw InternalError("spectral decomposition of the Jucys-Murphy element failed");
    return sum;
}

CheckReport verify_idempotent_system(int n, Exec exec) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    rep.suite = "idempotents";
    rep.n = n;
    std::mutex rep_mu;

    // materialize level by level so the recursion always hits the cache
    for (int k = 1; k <= n; ++k) {
        auto level = all_barred_tableaux(k);
        parallel_for(exec, level.size(), [&](std::size_t i) { idempotent(level[i]); });
    }

    const auto tabs = all_barred_tableaux(n);
    long long expected = 0;
    for (const auto& shape : enumerate_strict_partitions(n))
        expected += (1LL << (n - shape.length())) * g_lambda_formula(shape);
    rep.checks++;
    if (static_cast<long long>(tabs.size()) != expected)
        rep.fail("tableau count " + std::to_string(tabs.size()) + " != " + std::to_string(expected));

    std::vector<const IdempotentRecord*> recs;
    recs.reserve(tabs.size());
    for (const auto& t : tabs) recs.push_back(&idempotent(t));

    // completeness
    AlgebraElement sum = AlgebraElement::zero(n);
    for (const auto* r : recs) sum += r->element;
    rep.checks++;
    if (!(sum == AlgebraElement::one(n))) rep.fail("sum of idempotents is not 1 at n=" + std::to_string(n));

    // both-sided eigen-relations
    parallel_for(exec, recs.size(), [&](std::size_t i) {
        const auto& rec = *recs[i];
        for (int a = 1; a <= n; ++a) {
            const AlgebraElement want = rec.element.scaled(rec.kappa[a - 1]);
            const bool left = jm_x(n, a) * rec.element == want;
            const bool right = rec.element * jm_x(n, a) == want;
            std::lock_guard<std::mutex> lock(rep_mu);
            rep.checks += 2;
            if (!left) rep.fail("x_" + std::to_string(a) + " e != kappa e for " + rec.tableau.to_text());
            if (!right) rep.fail("e x_" + std::to_string(a) + " != kappa e for " + rec.tableau.to_text());
        }
    });

    // The factor chain applied to 1 must reproduce the cached dense element;
    // after that, chain(e_V) is exactly e_U e_V by associativity, which keeps
    // the quadratic sweep affordable (each step is sparse-times-dense).
    parallel_for(exec, recs.size(), [&](std::size_t i) {
        const bool ok = apply_idempotent_factors(recs[i]->tableau, AlgebraElement::one(n)) ==
                        recs[i]->element;
        std::lock_guard<std::mutex> lock(rep_mu);
        rep.checks++;
        if (!ok) rep.fail("factor chain does not rebuild e(" + recs[i]->tableau.to_text() + ")");
    });

    // pairwise products, the quadratic sweep
    const std::size_t count = recs.size();
    parallel_for(exec, count * count, [&](std::size_t idx) {
        const std::size_t i = idx / count, j = idx % count;
        const AlgebraElement prod = apply_idempotent_factors(recs[i]->tableau, recs[j]->element);
        const bool ok = (i == j) ? (prod == recs[i]->element) : prod.is_zero();
        std::lock_guard<std::mutex> lock(rep_mu);
        rep.checks++;
        if (!ok)
            rep.fail("e(" + recs[i]->tableau.to_text() + ") e(" + recs[j]->tableau.to_text() +
                     ") is not " + (i == j ? "idempotent" : "zero"));
    });

    rep.duration_ms = ms_since(t0);
    return rep;
}

CheckReport verify_zeta_basis(int n, Exec exec) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    rep.suite = "zeta";
    rep.n = n;

    long long count_over_clifford = 0;
    std::vector<AlgebraElement> zetas;
    for (const auto& shape : enumerate_strict_partitions(n)) {
        const auto boxes = row_tableau(shape).nondiagonal_boxes();
        const auto standard = enumerate_standard_tableaux(shape, false);
        for (std::uint32_t bmask = 0; bmask < (1u << boxes.size()); ++bmask) {
            std::vector<Box> beta;
            for (std::size_t i = 0; i < boxes.size(); ++i)
                if (bmask & (1u << i)) beta.push_back(boxes[i]);
            for (const auto& t : standard)
                for (const auto& u : standard) {
                    zetas.push_back(zeta(t, u, beta));
                    ++count_over_clifford;
                }
        }
    }
    long long factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    rep.checks++;
    if (count_over_clifford != factorial)
        rep.fail("zeta family size " + std::to_string(count_over_clifford) + " != n!");

    // coordinates of c^eps * zeta over the word basis
    const auto codes = all_perm_codes(n);
    const std::size_t dim = codes.size() << n;
    ScalarMatrix m(dim, dim);
    parallel_for(exec, zetas.size(), [&](std::size_t zi) {
        for (std::uint32_t eps = 0; eps < (1u << n); ++eps) {
            const AlgebraElement el =
                AlgebraElement::monomial(Permutation(n), eps, Scalar(Rational(1))) * zetas[zi];
            const std::size_t row = (zi << n) | eps;
            for (const auto& [bw, s] : el.terms()) {
                const std::size_t pr =
                    std::lower_bound(codes.begin(), codes.end(), bw.perm) - codes.begin();
                m.at(row, (pr << n) | bw.mask) = s;
            }
        }
    });
    const std::size_t rank = rank_destructive(m, exec);
    rep.checks++;
    if (rank != dim)
        rep.fail("zeta span rank " + std::to_string(rank) + " != " + std::to_string(dim));

    rep.duration_ms = ms_since(t0);
    return rep;
}

std::size_t right_ideal_rank(const AlgebraElement& e, Exec exec) {
    const int n = e.n();
    const auto codes = all_perm_codes(n);
    const std::size_t dim = codes.size() << n;
    ScalarMatrix m(dim, dim);
    parallel_for(exec, codes.size(), [&](std::size_t pi) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const AlgebraElement row_el =
                AlgebraElement::monomial(Permutation::unpacked(n, codes[pi]), mask, Scalar(Rational(1))) * e;
            const std::size_t row = (pi << n) | mask;
            for (const auto& [bw, s] : row_el.terms()) {
                const std::size_t pr =
                    std::lower_bound(codes.begin(), codes.end(), bw.perm) - codes.begin();
                m.at(row, (pr << n) | bw.mask) = s;
            }
        }
    });
    return rank_destructive(m, exec);
}

} // namespace sergeev

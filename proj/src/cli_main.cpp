// Command-line front end: enumeration, verification suites, JSON export.
// Exit codes: 0 success/pass, 1 verification failure, 2 usage or input error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sergeev/algebra.hpp"
#include "sergeev/errors.hpp"
#include "sergeev/fusion.hpp"
#include "sergeev/idempotents.hpp"
#include "sergeev/json_io.hpp"
#include "sergeev/linalg.hpp"
#include "sergeev/perm.hpp"
#include "sergeev/repmodules.hpp"
#include "sergeev/scalar.hpp"
#include "sergeev/tableaux.hpp"

namespace {

using namespace sergeev;
using Clock = std::chrono::steady_clock;

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for writing: " + out_path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + out_path);
}

StrictPartition parse_lambda(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        parts.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return StrictPartition(parts);
}

ModuleFlavor parse_flavor(const std::string& name) {
    if (name == "uhat") return ModuleFlavor::Uhat;
    if (name == "seminormal") return ModuleFlavor::Seminormal;
    if (name == "thetaspan") return ModuleFlavor::ThetaSpan;
    if (name == "spin") return ModuleFlavor::Spin;
    throw ParseError("unknown flavor: " + name + " (expected uhat|seminormal|thetaspan|spin)");
}

// ---------------------------------------------------------------------------
// Deterministic randomized sweeps for the two foundation suites. Fixed seeds:
// identical output on every run.

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-12, 12);
    std::uniform_int_distribution<long long> den(1, 9);
    return Rational(num(rng), den(rng));
}

Scalar random_scalar(std::mt19937_64& rng) {
    static const std::uint64_t rads[] = {1, 2, 3, 5, 6};
    std::uniform_int_distribution<int> count(0, 3);
    std::uniform_int_distribution<int> rad(0, 4);
    Scalar s;
    const int k = count(rng);
    for (int j = 0; j < k; ++j) {
        const std::uint64_t d = rads[rad(rng)];
        s += Scalar::radical(random_rational(rng), d) + Scalar::radical(random_rational(rng), d) * Scalar::i();
    }
    return s;
}

CheckReport run_scalar_suite(int max_n) {
    CheckReport rep;
    rep.suite = "scalars";
    rep.n = max_n; // the sweep itself is n-independent; recorded for the report
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240901);

    for (int trial = 0; trial < 400; ++trial) {
        const Scalar a = random_scalar(rng);
        const Scalar b = random_scalar(rng);
        const Scalar c = random_scalar(rng);
        ++rep.checks;
        if ((a + b) * c != a * c + b * c) rep.fail("distributivity at trial " + std::to_string(trial));
        ++rep.checks;
        if (a * b != b * a) rep.fail("commutativity at trial " + std::to_string(trial));
        ++rep.checks;
        if ((a * b) * c != a * (b * c)) rep.fail("associativity at trial " + std::to_string(trial));
        if (!a.is_zero()) {
            ++rep.checks;
            if (a * a.inverse() != Scalar(1)) rep.fail("inverse roundtrip at trial " + std::to_string(trial));
        }
    }

    // radical normalization: sqrt(k^2 d) = k sqrt(d)
    for (std::uint64_t k = 1; k <= 12; ++k)
        for (std::uint64_t d : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{6}, std::uint64_t{10}}) {
            ++rep.checks;
            if (Scalar::sqrt_int(k * k * d) != Scalar(Rational(static_cast<long long>(k))) * Scalar::sqrt_int(d))
                rep.fail("square extraction for " + std::to_string(k * k * d));
        }

    ++rep.checks;
    if (Scalar::i() * Scalar::i() != Scalar(-1)) rep.fail("i^2 != -1");
    ++rep.checks;
    if (Scalar::sqrt_int(2) * Scalar::sqrt_int(3) != Scalar::sqrt_int(6)) rep.fail("sqrt2*sqrt3 != sqrt6");

    // Rational 128-bit fast-path boundaries agree with exact GMP values.
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<long long> big(1, 3037000499LL); // ~2^31.5
        const Rational x(big(rng), big(rng));
        const Rational y(big(rng), big(rng));
        ++rep.checks;
        if ((x * y) * y.inverse() != x) rep.fail("large product inverse at trial " + std::to_string(trial));
        ++rep.checks;
        if ((x + y) - y != x) rep.fail("large sum cancellation at trial " + std::to_string(trial));
    }

    rep.duration_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

AlgebraElement random_element(std::mt19937_64& rng, int n, int max_terms) {
    const auto codes = all_perm_codes(n);
    std::uniform_int_distribution<std::size_t> pick(0, codes.size() - 1);
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << n) - 1);
    std::uniform_int_distribution<int> count(1, max_terms);
    AlgebraElement x(n);
    const int k = count(rng);
    for (int j = 0; j < k; ++j) {
        Scalar coeff = random_scalar(rng);
        if (coeff.is_zero()) coeff = Scalar(1);
        x += AlgebraElement::monomial(Permutation::unpacked(n, codes[pick(rng)]), mask(rng), coeff);
    }
    return x;
}

CheckReport run_algebra_suite(int max_n) {
    CheckReport rep;
    rep.suite = "algebra";
    rep.n = max_n;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240902);

    for (int n = 2; n <= max_n; ++n) {
        const int trials = n <= 4 ? 40 : 10;
        for (int trial = 0; trial < trials; ++trial) {
            const AlgebraElement a = random_element(rng, n, 5);
            const AlgebraElement b = random_element(rng, n, 5);
            const AlgebraElement c = random_element(rng, n, 3);
            ++rep.checks;
            if (multiply(a, b) != multiply_reference(a, b))
                rep.fail("kernel/reference mismatch at n=" + std::to_string(n));
            ++rep.checks;
            if ((a * b) * c != a * (b * c)) rep.fail("associativity at n=" + std::to_string(n));
            ++rep.checks;
            if (anti_involution_star(a * b) != anti_involution_star(b) * anti_involution_star(a))
                rep.fail("star anti-involution at n=" + std::to_string(n));
            if (n < max_n) {
                ++rep.checks;
                if (embed(a, n + 1) * embed(b, n + 1) != embed(a * b, n + 1))
                    rep.fail("embedding homomorphism at n=" + std::to_string(n));
            }
        }
        // defining relations on generators
        for (int a = 1; a < n; ++a) {
            ++rep.checks;
            if (gen_t(n, a) * gen_t(n, a) != AlgebraElement::one(n))
                rep.fail("t" + std::to_string(a) + "^2 != 1 at n=" + std::to_string(n));
        }
        for (int a = 1; a <= n; ++a) {
            ++rep.checks;
            if (gen_c(n, a) * gen_c(n, a) != -AlgebraElement::one(n))
                rep.fail("c" + std::to_string(a) + "^2 != -1 at n=" + std::to_string(n));
        }
        for (int a = 1; a + 1 < n; ++a) {
            const AlgebraElement lhs = gen_t(n, a) * gen_t(n, a + 1) * gen_t(n, a);
            const AlgebraElement rhs = gen_t(n, a + 1) * gen_t(n, a) * gen_t(n, a + 1);
            ++rep.checks;
            if (lhs != rhs) rep.fail("braid at n=" + std::to_string(n));
        }
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                ++rep.checks;
                if (jm_x(n, a) * jm_x(n, b) != jm_x(n, b) * jm_x(n, a))
                    rep.fail("JM commutativity x" + std::to_string(a) + ",x" + std::to_string(b) +
                             " at n=" + std::to_string(n));
            }
    }

    rep.duration_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

CheckReport run_modules_suite(int max_n) {
    CheckReport rep;
    rep.suite = "modules";
    rep.n = max_n;
    const auto t0 = Clock::now();
    for (int n = 1; n <= max_n; ++n)
        for (const auto& shape : enumerate_strict_partitions(n))
            for (const ModuleFlavor flavor : {ModuleFlavor::Uhat, ModuleFlavor::Seminormal}) {
                const CheckReport sub = verify_module_relations(module_generators(shape, flavor), flavor);
                rep.checks += sub.checks;
                if (!sub.pass)
                    for (const auto& f : sub.failures) rep.fail(shape.to_string() + ": " + f);
            }
    rep.duration_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

CheckReport run_spin_suite(int max_n) {
    CheckReport rep;
    rep.suite = "spin";
    rep.n = max_n;
    const auto t0 = Clock::now();
    for (int n = 1; n <= max_n; ++n)
        for (const auto& shape : enumerate_strict_partitions(n)) {
            if (shape.size() == 1) continue; // no t generators
            const CheckReport sub = verify_module_relations(module_generators(shape, ModuleFlavor::Spin),
                                                            ModuleFlavor::Spin);
            rep.checks += sub.checks;
            if (!sub.pass)
                for (const auto& f : sub.failures) rep.fail(shape.to_string() + ": " + f);
        }
    rep.duration_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

struct SuiteCaps {
    int requested;  // --max-n or -1 when not given
    int unsafe_cap; // --unsafe-max-n or -1
};

// Default safety bound: 5, except the whole-algebra sweeps (fusion, zeta)
// where the basis dimension 2^n n! makes 4 the practical ceiling.
int effective_max_n(const std::string& suite, const SuiteCaps& caps, bool clamp) {
    const int def = (suite == "fusion" || suite == "zeta") ? 4 : 5;
    int cap = def;
    if (caps.unsafe_cap > 0) cap = caps.unsafe_cap;
    int want = caps.requested > 0 ? caps.requested : def;
    if (want > cap) {
        if (!clamp)
            throw std::runtime_error("--max-n " + std::to_string(want) + " exceeds the " + suite +
                                     " safety bound " + std::to_string(cap) +
                                     "; raise it with --unsafe-max-n");
        want = cap;
    }
    return want;
}

int run_verify(const std::string& suite, const SuiteCaps& caps, bool as_json) {
    std::vector<std::string> names;
    if (suite == "all")
        names = {"scalars", "algebra", "idempotents", "zeta", "modules", "spin", "fusion"};
    else
        names = {suite};

    std::vector<CheckReport> reports;
    for (const auto& name : names) {
        // With --suite all, per-suite bounds clamp silently so one --max-n
        // can drive the whole run; a single named suite rejects instead.
        const int max_n = effective_max_n(name, caps, suite == "all");
        if (name == "scalars") {
            reports.push_back(run_scalar_suite(max_n));
        } else if (name == "algebra") {
            reports.push_back(run_algebra_suite(max_n));
        } else if (name == "idempotents") {
            reports.push_back(verify_idempotent_system(max_n, Exec::Par));
        } else if (name == "zeta") {
            for (int n = 2; n <= max_n; ++n) reports.push_back(verify_zeta_basis(n, Exec::Par));
        } else if (name == "modules") {
            reports.push_back(run_modules_suite(max_n));
        } else if (name == "spin") {
            reports.push_back(run_spin_suite(max_n));
        } else if (name == "fusion") {
            reports.push_back(verify_fusion(max_n, Exec::Par));
        } else {
            throw std::runtime_error("unknown suite: " + name);
        }
    }

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    if (as_json) {
        Json out;
        out["pass"] = all_pass;
        out["suites"] = Json::array();
        for (const auto& r : reports) out["suites"].push_back(report_json(r));
        std::cout << dump_json(out);
    } else {
        for (const auto& r : reports) {
            std::printf("%-12s n<=%d  %s  checks=%lld  (%.0f ms)\n", r.suite.c_str(), r.n,
                        r.pass ? "pass" : "FAIL", r.checks, r.duration_ms);
            for (const auto& f : r.failures) std::printf("    failure: %s\n", f.c_str());
        }
        std::printf("overall: %s\n", all_pass ? "pass" : "FAIL");
    }
    return all_pass ? 0 : 1;
}

int run_enumerate(int n, bool barred, bool as_json) {
    const auto shapes = enumerate_strict_partitions(n);
    long long schur_sum = 0;
    struct Row {
        std::string shape;
        long long g;
        long long count;
    };
    std::vector<Row> rows;
    for (const auto& shape : shapes) {
        const long long g = g_lambda_formula(shape);
        const long long count = static_cast<long long>(enumerate_standard_tableaux(shape, barred).size());
        const long long weight = 1LL << (n - shape.length());
        schur_sum += weight * g * g;
        rows.push_back({shape.to_string(), g, count});
    }
    const bool identity_ok = schur_sum == factorial(n);

    if (as_json) {
        Json out;
        out["n"] = n;
        out["barred"] = barred;
        out["partitions"] = Json::array();
        for (const auto& r : rows) {
            Json row;
            row["shape"] = r.shape;
            row["g"] = r.g;
            row["tableaux"] = r.count;
            out["partitions"].push_back(std::move(row));
        }
        out["schur_sum"] = schur_sum;
        out["factorial"] = factorial(n);
        out["identity"] = identity_ok;
        std::cout << dump_json(out);
    } else {
        std::printf("strict partitions of %d (%s tableaux counted):\n", n, barred ? "barred" : "unbarred");
        for (const auto& r : rows) std::printf("  %-12s g=%-6lld tableaux=%lld\n", r.shape.c_str(), r.g, r.count);
        std::printf("sum 2^(n-l) g^2 = %lld, n! = %lld  (%s)\n", schur_sum, factorial(n),
                    identity_ok ? "ok" : "MISMATCH");
    }
    return identity_ok ? 0 : 1;
}

int run_fusion_cmd(const std::string& tableau_text, bool check_jm, bool as_json, const std::string& out_path) {
    const ShiftedTableau u = ShiftedTableau::from_text(tableau_text);
    const AlgebraElement value = fusion_evaluate(u);
    bool match = true;
    if (check_jm) {
        const long long g = g_lambda_formula(u.shape());
        const AlgebraElement expected =
            idempotent(u).element.scaled(Scalar(Rational(factorial(u.shape().size()), g)));
        match = value == expected;
    }
    if (as_json || !out_path.empty()) {
        Json out;
        out["tableau"] = tableau_json(u);
        out["element"] = element_json(value);
        if (check_jm) out["matches_jm_idempotent"] = match;
        write_output(dump_json(out), out_path);
    } else {
        std::printf("%s\n", value.to_string().c_str());
        if (check_jm) std::printf("matches (n!/g) e_U: %s\n", match ? "yes" : "NO");
    }
    return match ? 0 : 1;
}

int run_main(int argc, char** argv) {
    CLI::App app{"Exact Sergeev superalgebra toolkit: enumeration, idempotents, "
                 "representations, fusion"};
    app.require_subcommand(1);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "List strict partitions with dimensions and tableau counts");
    int enum_n = 3;
    bool enum_barred = false, enum_json = false;
    cmd_enum->add_option("--n", enum_n, "Number of boxes")->required()->check(CLI::Range(1, 12));
    cmd_enum->add_flag("--barred", enum_barred, "Count barred tableaux instead of unbarred");
    cmd_enum->add_flag("--json", enum_json, "Machine-readable output");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
    std::string verify_suite = "all";
    SuiteCaps caps{-1, -1};
    bool verify_json = false;
    cmd_verify->add_option("--suite", verify_suite, "scalars|algebra|idempotents|zeta|modules|spin|fusion|all")
        ->check(CLI::IsMember({"scalars", "algebra", "idempotents", "zeta", "modules", "spin", "fusion", "all"}));
    cmd_verify->add_option("--max-n", caps.requested, "Largest n to sweep");
    cmd_verify->add_option("--unsafe-max-n", caps.unsafe_cap, "Raise the per-suite safety bound");
    cmd_verify->add_flag("--json", verify_json, "Machine-readable report");

    // export
    auto* cmd_export = app.add_subcommand("export", "Write a deterministic JSON artifact");
    std::string export_kind, export_tableau, export_lambda, export_flavor = "spin", export_out;
    cmd_export->add_option("--kind", export_kind, "idempotent|rep|fusion")
        ->required()
        ->check(CLI::IsMember({"idempotent", "rep", "fusion"}));
    cmd_export->add_option("--tableau", export_tableau, "Tableau text, rows with / and b-suffix bars");
    cmd_export->add_option("--lambda", export_lambda, "Strict partition, comma-separated");
    cmd_export->add_option("--flavor", export_flavor, "uhat|seminormal|thetaspan|spin");
    cmd_export->add_option("--out", export_out, "Output path")->required();

    // idempotent
    auto* cmd_idem = app.add_subcommand("idempotent", "Print the primitive idempotent of a barred tableau");
    std::string idem_tableau, idem_out;
    int idem_n = 0;
    bool idem_json = false;
    cmd_idem->add_option("--tableau", idem_tableau, "Tableau text")->required();
    cmd_idem->add_option("--n", idem_n, "Expected number of boxes (validated)");
    cmd_idem->add_flag("--json", idem_json, "Machine-readable output");
    cmd_idem->add_option("--out", idem_out, "Output path");

    // rep
    auto* cmd_rep = app.add_subcommand("rep", "Print generator matrices of one irreducible module");
    std::string rep_lambda, rep_flavor = "spin", rep_format = "json", rep_out;
    cmd_rep->add_option("--lambda", rep_lambda, "Strict partition, comma-separated")->required();
    cmd_rep->add_option("--flavor", rep_flavor, "uhat|seminormal|thetaspan|spin");
    cmd_rep->add_option("--format", rep_format, "json")->check(CLI::IsMember({"json"}));
    cmd_rep->add_option("--out", rep_out, "Output path");

    // fusion
    auto* cmd_fusion = app.add_subcommand("fusion", "Evaluate the consecutive fusion product of a tableau");
    std::string fusion_tableau, fusion_out;
    bool fusion_check = false, fusion_json = false;
    cmd_fusion->add_option("--tableau", fusion_tableau, "Tableau text")->required();
    cmd_fusion->add_flag("--check-against-jm", fusion_check, "Compare against (n!/g) e_U");
    cmd_fusion->add_flag("--json", fusion_json, "Machine-readable output");
    cmd_fusion->add_option("--out", fusion_out, "Output path");

    CLI11_PARSE(app, argc, argv);

    if (cmd_enum->parsed()) return run_enumerate(enum_n, enum_barred, enum_json);

    if (cmd_verify->parsed()) return run_verify(verify_suite, caps, verify_json);

    if (cmd_export->parsed()) {
        Json out;
        if (export_kind == "idempotent") {
            if (export_tableau.empty()) throw std::runtime_error("export --kind idempotent needs --tableau");
            const ShiftedTableau u = ShiftedTableau::from_text(export_tableau);
            out["tableau"] = tableau_json(u);
            out["element"] = element_json(idempotent(u).element);
        } else if (export_kind == "rep") {
            if (export_lambda.empty()) throw std::runtime_error("export --kind rep needs --lambda");
            const StrictPartition shape = parse_lambda(export_lambda);
            const ModuleFlavor flavor = parse_flavor(export_flavor);
            out = rep_json(module_generators(shape, flavor));
        } else {
            if (export_tableau.empty()) throw std::runtime_error("export --kind fusion needs --tableau");
            const ShiftedTableau u = ShiftedTableau::from_text(export_tableau);
            out["tableau"] = tableau_json(u);
            out["element"] = element_json(fusion_evaluate(u));
        }
        write_output(dump_json(out), export_out);
        return 0;
    }

    if (cmd_idem->parsed()) {
        const ShiftedTableau u = ShiftedTableau::from_text(idem_tableau);
        if (idem_n > 0 && idem_n != u.shape().size())
            throw std::runtime_error("--n does not match the tableau size");
        const IdempotentRecord& rec = idempotent(u);
        if (idem_json || !idem_out.empty()) {
            Json out;
            out["tableau"] = tableau_json(u);
            Json kappa = Json::array();
            for (const auto& k : rec.kappa) kappa.push_back(scalar_json(k));
            out["kappa"] = std::move(kappa);
            out["element"] = element_json(rec.element);
            write_output(dump_json(out), idem_out);
        } else {
            std::printf("%s\n", rec.element.to_string().c_str());
        }
        return 0;
    }

    if (cmd_rep->parsed()) {
        const StrictPartition shape = parse_lambda(rep_lambda);
        const ModuleFlavor flavor = parse_flavor(rep_flavor);
        write_output(dump_json(rep_json(module_generators(shape, flavor))), rep_out);
        return 0;
    }

    if (cmd_fusion->parsed()) return run_fusion_cmd(fusion_tableau, fusion_check, fusion_json, fusion_out);

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_main(argc, argv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

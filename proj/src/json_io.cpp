#include "sergeev/json_io.hpp"

#include "sergeev/errors.hpp"
#include "sergeev/perm.hpp"

namespace sergeev {

Json scalar_json(const Scalar& s) {
    Json out = Json::array();
    for (const auto& t : s.terms()) {
        Json entry;
        entry["d"] = t.d;
        entry["re"] = t.re.to_fraction_string();
        entry["im"] = t.im.to_fraction_string();
        out.push_back(std::move(entry));
    }
    return out;
}

Json tableau_json(const ShiftedTableau& t) {
    Json out;
    out["shape"] = Json::array();
    for (int i = 1; i <= t.shape().length(); ++i) out["shape"].push_back(t.shape().part(i));
    Json rows = Json::array();
    for (int i = 1; i <= t.shape().length(); ++i) {
        Json row = Json::array();
        for (int j = i; j < i + t.shape().part(i); ++j) {
            const int e = t.entry_at(Box{i, j});
            Json cell;
            cell["e"] = e;
            cell["bar"] = t.barred(e);
            row.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    return out;
}

Json element_json(const AlgebraElement& x) {
    Json out;
    out["n"] = x.n();
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms()) {
        Json term;
        term["perm"] = Permutation::unpacked(x.n(), w.perm).one_line();
        term["mask"] = w.mask;
        term["coeff"] = scalar_json(c);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

Json rep_json(const std::vector<RepMatrix>& matrices) {
    if (matrices.empty()) throw InternalError("rep export with no generators");
    const ModuleBasis basis(matrices.front().shape, matrices.front().flavor);
    Json out;
    out["dim"] = basis.dim();
    Json labels = Json::array();
    for (std::size_t i = 0; i < basis.dim(); ++i) labels.push_back(basis.label(i));
    out["basis"] = std::move(labels);
    Json gens;
    for (const auto& g : matrices) {
        Json mat = Json::array();
        for (std::size_t i = 0; i < g.mat.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < g.mat.cols(); ++j) row.push_back(scalar_json(g.mat.at(i, j)));
            mat.push_back(std::move(row));
        }
        gens[g.generator] = std::move(mat);
    }
    out["generators"] = std::move(gens);
    return out;
}

Json report_json(const CheckReport& rep) {
    Json out;
    out["suite"] = rep.suite;
    out["n"] = rep.n;
    out["pass"] = rep.pass;
    out["checks"] = rep.checks;
    out["failures"] = rep.failures;
    out["duration_ms"] = static_cast<long long>(rep.duration_ms);
    return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace sergeev

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sergeev/algebra.hpp"
#include "sergeev/report.hpp"
#include "sergeev/repmodules.hpp"
#include "sergeev/scalar.hpp"
#include "sergeev/tableaux.hpp"

namespace sergeev {

// Insertion-ordered so every export is byte-stable across runs.
using Json = nlohmann::ordered_json;

// Scalar: [{"d": 2, "re": "1/2", "im": "0/1"}, ...], ascending d.
Json scalar_json(const Scalar& s);

// Tableau: {"shape": [...], "rows": [[{"e": 1, "bar": false}, ...], ...]}.
Json tableau_json(const ShiftedTableau& t);

// Element: {"n": ..., "terms": [{"perm": [...], "mask": ..., "coeff": ...}]},
// terms in the stored (perm, mask) order.
Json element_json(const AlgebraElement& x);

// Generator matrices of one module: {"dim", "basis", "generators"} with
// each matrix row-major over scalar_json entries.
Json rep_json(const std::vector<RepMatrix>& matrices);

Json report_json(const CheckReport& rep);

// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

} // namespace sergeev

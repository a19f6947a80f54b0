#pragma once

#include <string>
#include <vector>

namespace sergeev {

// Outcome of one verification sweep. `checks` counts individual equalities
// tested; `failures` holds human-readable counterexamples (capped by the
// producer) and is empty iff `pass`.
struct CheckReport {
    std::string suite;
    int n = 0;
    bool pass = true;
    long long checks = 0;
    double duration_ms = 0.0;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        pass = false;
        if (failures.size() < 20) failures.push_back(what);
    }
    void absorb(const CheckReport& o) {
        checks += o.checks;
        if (!o.pass) {
            pass = false;
            for (const auto& f : o.failures) fail(f);
        }
    }
};

} // namespace sergeev

// Timing table for the OpenMP sweep kernels against their serial reference.
// Not a correctness gate; the unit suites compare results exactly.

#include <chrono>
#include <cstdio>

#include "sergeev/algebra.hpp"
#include "sergeev/fusion.hpp"
#include "sergeev/idempotents.hpp"
#include "sergeev/linalg.hpp"
#include "sergeev/repmodules.hpp"
#include "sergeev/tableaux.hpp"

namespace {

using namespace sergeev;
using Clock = std::chrono::steady_clock;

template <typename F> double time_ms(F&& f) {
    const auto t0 = Clock::now();
    f();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const char* name, double baseline_ms, double tuned_ms) {
    std::printf("%-44s %10.1f ms %10.1f ms %8.2fx\n", name, baseline_ms, tuned_ms,
                tuned_ms > 0 ? baseline_ms / tuned_ms : 0.0);
}

} // namespace

int main() {
    std::printf("%-44s %13s %13s %9s\n", "kernel", "baseline", "tuned", "speedup");

    {
        const double s = time_ms([] { verify_idempotent_system(4, Exec::Serial); });
        const double p = time_ms([] { verify_idempotent_system(4, Exec::Par); });
        row("idempotent system sweep, n=4 (serial/omp)", s, p);
    }
    {
        const double s = time_ms([] { verify_fusion(4, Exec::Serial); });
        const double p = time_ms([] { verify_fusion(4, Exec::Par); });
        row("fusion sweep, n=4 (serial/omp)", s, p);
    }
    {
        const double s = time_ms([] { verify_zeta_basis(3, Exec::Serial); });
        const double p = time_ms([] { verify_zeta_basis(3, Exec::Par); });
        row("zeta basis rank, n=3 (serial/omp)", s, p);
    }
    {
        // one dense product of two n=5 idempotents, kernel vs term-map reference
        std::vector<ShiftedTableau> tabs;
        for (const auto& shape : enumerate_strict_partitions(5))
            for (auto& t : enumerate_standard_tableaux(shape, true)) tabs.push_back(t);
        const AlgebraElement& e1 = idempotent(tabs[10]).element;
        const AlgebraElement& e2 = idempotent(tabs[30]).element;
        AlgebraElement kernel_out(5), reference_out(5);
        const double p = time_ms([&] { kernel_out = multiply(e1, e2); });
        const double s = time_ms([&] { reference_out = multiply_reference(e1, e2); });
        row("dense idempotent product, n=5 (map/slot)", s, p);
        if (kernel_out != reference_out) {
            std::printf("MISMATCH: dense kernel disagrees with the reference product\n");
            return 1;
        }
    }
    return 0;
}

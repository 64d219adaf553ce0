// Times the serial reference kernels against the OpenMP kernels on the
// example deformation.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qdeform/analysis.hpp"
#include "qdeform/pipeline.hpp"

using namespace qdeform;

namespace {

template <class Fn>
double time_ms(Fn&& fn, int reps) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the same serial path\n\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    auto ctx = DeformationContext::make(example_params());
    StructureConstants sc = StructureConstants::compute(ctx, ExecPolicy::Serial);
    PsiTable psi = PsiTable::extract(sc, 8, ExecPolicy::Serial);
    GroupTable table = GroupTable::quaternion();
    AlgebraTable alg = to_algebra_table(sc);
    SeparabilityOutcome cert = separability_certificate(alg);

    row("structure-constants",
        time_ms([&] { StructureConstants::compute(ctx, ExecPolicy::Serial); }, 5),
        time_ms([&] { StructureConstants::compute(ctx, ExecPolicy::Parallel); }, 5));

    row("associativity (512 triples)",
        time_ms([&] { associativity_check(ctx, ExecPolicy::Serial); }, 3),
        time_ms([&] { associativity_check(ctx, ExecPolicy::Parallel); }, 3));

    row("psi extraction (order 8)",
        time_ms([&] { PsiTable::extract(sc, 8, ExecPolicy::Serial); }, 5),
        time_ms([&] { PsiTable::extract(sc, 8, ExecPolicy::Parallel); }, 5));

    row("cocycle scan (512 triples)",
        time_ms([&] { cocycle_check(psi, table, ExecPolicy::Serial); }, 20),
        time_ms([&] { cocycle_check(psi, table, ExecPolicy::Parallel); }, 20));

    row("certificate substitution",
        time_ms([&] { verify_separability(alg, cert.tensor, ExecPolicy::Serial); }, 3),
        time_ms([&] { verify_separability(alg, cert.tensor, ExecPolicy::Parallel); }, 3));

    row("parameter search (deg 3)",
        time_ms([&] { search_params(3, 10, ExecPolicy::Serial); }, 1),
        time_ms([&] { search_params(3, 10, ExecPolicy::Parallel); }, 1));

    std::printf("\nsingle-threaded by design:\n");
    std::printf("  certificate solve            %10.2f ms\n",
                time_ms([&] { separability_certificate(alg); }, 1));
    return 0;
}

// Compares the parallel summation kernels against their serial references:
// same values, wall-clock side by side.
#include "qm/qseries.hpp"

#include <chrono>
#include <cstdio>

using namespace qm;

namespace {

template <class F> double timed(F&& f, Cplx& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main() {
    ConjugacyParameter x = {Rat(1, 3)};
    std::printf("%-28s %12s %12s %10s\n", "kernel", "parallel(s)", "serial(s)",
                "max|diff|");

    for (int g : {2, 3}) {
        SurfaceSignature sig{g, 1};
        long nmax = 2000000;
        Cplx a, b;
        double tp = timed([&] { return witten_direct_truncated(sig, x, nmax); }, a);
        double ts = timed([&] { return witten_direct_truncated_serial(sig, x, nmax); }, b);
        char name[64];
        std::snprintf(name, sizeof name, "volume sum g=%d n=%ld", g, nmax);
        std::printf("%-28s %12.3f %12.3f %10.2e\n", name, tp, ts, std::abs(a - b));
    }

    for (double hb : {0.002, 0.001}) {
        SurfaceSignature sig{2, 1};
        Cplx q = std::exp(Cplx(0, M_PI) * Cplx(0, hb));
        Cplx a, b;
        double tp = timed([&] { return t_series(sig, x, q, 1e-12); }, a);
        double ts = timed([&] { return t_series_serial(sig, x, q, 1e-12); }, b);
        char name[64];
        std::snprintf(name, sizeof name, "q-volume series hbar=%gi", hb);
        std::printf("%-28s %12.3f %12.3f %10.2e\n", name, tp, ts, std::abs(a - b));
    }
    return 0;
}

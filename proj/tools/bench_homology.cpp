#include "k4/homology.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace k4;

namespace {

double run_ms(int window, int dmax, bool serial, std::vector<NodeHomology>& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = homology_sweep(window, dmax, serial);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int window = argc > 1 ? std::atoi(argv[1]) : 2;
    int dmax = argc > 2 ? std::atoi(argv[2]) : 5;

    std::vector<NodeHomology> serial, parallel;
    double ts = run_ms(window, dmax, true, serial);
    double tp = run_ms(window, dmax, false, parallel);

    if (serial.size() != parallel.size()) {
        std::printf("MISMATCH: cell counts differ\n");
        return 1;
    }
    for (size_t k = 0; k < serial.size(); ++k) {
        if (serial[k].node == parallel[k].node && serial[k].degree == parallel[k].degree &&
            serial[k].dim == parallel[k].dim)
            continue;
        std::printf("MISMATCH at cell %zu\n", k);
        return 1;
    }

    std::printf("window=%d dmax=%d cells=%zu\n", window, dmax, serial.size());
    std::printf("serial   %.1f ms\n", ts);
    std::printf("parallel %.1f ms\n", tp);
    std::printf("speedup  %.2fx\n", tp > 0 ? ts / tp : 0.0);
    std::printf("results identical\n");
    return 0;
}

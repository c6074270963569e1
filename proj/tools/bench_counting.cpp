#include <chrono>
#include <iostream>
#include <vector>

#ifdef FOLDMV_HAVE_OPENMP
#include <omp.h>
#endif

#include "foldmv/characters.hpp"

// Times the parallel hull-counting kernel against the serial reference on
// the full weight box of one representation and checks that they agree.

namespace {

using namespace foldmv;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main() {
    RootDatum rd = build_root_datum("A3");
    Vec lambda{2, 2, 2};
    const WeylGroup& g = weyl_group(rd);
    const ReducedWord& word = g.canonical_word[g.w0];

    Vec lowest = neg(dominant_representative(rd, neg(lambda)).first);
    Vec box = sub(lambda, lowest);
    std::vector<LusztigDatum> data;
    Vec c(rd.rank, 0);
    auto gen = [&](auto&& self, int at) -> void {
        if (at == rd.rank) {
            for (LusztigDatum& d : enumerate_data(rd, word, neg(c))) data.push_back(std::move(d));
            return;
        }
        for (c[at] = 0; c[at] <= box[at]; ++c[at]) self(self, at + 1);
        c[at] = 0;
    };
    gen(gen, 0);

#ifdef FOLDMV_HAVE_OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif
    std::cout << "type: " << rd.label << "  lambda: " << format_vec(lambda)
              << "  data: " << data.size() << "\n";

    // Warm the group and word-graph caches outside the timed region.
    count_in_hull_serial(rd, {data.front()}, lambda);

    for (int pass = 0; pass < 3; ++pass) {
        auto t0 = Clock::now();
        Int serial = count_in_hull_serial(rd, data, lambda);
        double serial_ms = ms_since(t0);
        t0 = Clock::now();
        Int parallel = count_in_hull(rd, data, lambda);
        double parallel_ms = ms_since(t0);
        std::cout << "pass " << pass << ": serial " << serial << " in " << serial_ms
                  << " ms, parallel " << parallel << " in " << parallel_ms << " ms\n";
        if (serial != parallel) {
            std::cout << "MISMATCH\n";
            return 1;
        }
    }
    std::cout << "counts agree\n";
    return 0;
}

// Compares the serial reference implementations of the analysis kernels with
// their OpenMP counterparts over a parameter sweep, checking that both sides
// produce identical results while reporting wall-clock times.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "trs/game.hpp"
#include "trs/rng.hpp"
#include "trs/selection.hpp"

using namespace trs;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<GameParams> draw_params(int count) {
    Rng rng(20240521);
    std::vector<GameParams> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        GameParams p;
        p.value = Money::micro(1 + static_cast<std::int64_t>(rng.below(5'000'000)));
        p.deposit = p.value + Money::micro(2 + static_cast<std::int64_t>(rng.below(3'000'000)));
        p.peer_cost = Money::micro(static_cast<std::int64_t>(rng.below(50'000)));
        p.peer_pay = p.peer_cost + Money::micro(1 + static_cast<std::int64_t>(rng.below(100'000)));
        p.award = Money::micro(1 + p.value.units() / 10);
        out.push_back(p);
    }
    return out;
}

// build + enumerate for every draw; returns a checksum of equilibrium counts
std::size_t sweep(const std::vector<GameParams>& draws, int peers, bool parallel) {
    std::size_t checksum = 0;
    for (const auto& p : draws) {
        GameTree tree = parallel ? build_enforcement_game(p, peers)
                                 : build_enforcement_game_serial(p, peers);
        auto eq = parallel ? enumerate_nash(tree) : enumerate_nash_serial(tree);
        checksum = checksum * 31 + eq.size();
    }
    return checksum;
}

}  // namespace

int main(int argc, char** argv) {
    int draws = argc > 1 ? std::atoi(argv[1]) : 60;
#ifdef _OPENMP
    std::printf("openmp_threads=%d\n", omp_get_max_threads());
#else
    std::printf("openmp_threads=0\n");
#endif

    auto params = draw_params(draws);
    for (int peers : {1, 2, 3}) {
        auto t0 = std::chrono::steady_clock::now();
        std::size_t serial = sweep(params, peers, false);
        double serial_s = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        std::size_t parallel = sweep(params, peers, true);
        double parallel_s = seconds_since(t0);

        std::printf("peers=%d draws=%d serial=%.3fs parallel=%.3fs speedup=%.2fx match=%s\n",
                    peers, draws, serial_s, parallel_s,
                    parallel_s > 0 ? serial_s / parallel_s : 0.0,
                    serial == parallel ? "yes" : "NO");
        if (serial != parallel) return 1;
    }

    // selection throughput on a dense instance
    auto pool = generate_instance(7, 1000, 1200);
    SelectionRequest req{TimeWindow{10, 600}, 1, Money::eth(1), 1};
    auto t0 = std::chrono::steady_clock::now();
    int hops = 0;
    for (int i = 0; i < 100; ++i) hops = static_cast<int>(select_peers(pool, req).size());
    std::printf("selection_1000_windows=%.3fms_per_call hops=%d\n",
                seconds_since(t0) * 10.0, hops);
    return 0;
}

// Times every parallel kernel against its serial twin on a generated
// scale-free fixture and reports the speedup. The two paths must agree; the
// test suite checks that, here we only measure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "ske/centrality.hpp"
#include "ske/diffusion.hpp"
#include "ske/electre.hpp"
#include "ske/exec.hpp"
#include "ske/experiment.hpp"
#include "ske/graph.hpp"
#include "ske/laplacian.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename F>
void bench(const char* name, F&& run) {
    auto t0 = Clock::now();
    run(ske::Exec::serial);
    const double serial_ms = ms_since(t0);
    t0 = Clock::now();
    run(ske::Exec::parallel);
    const double parallel_ms = ms_since(t0);
    std::printf("%-24s serial %9.2f ms   omp %9.2f ms   speedup %5.2fx\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms);
}

} // namespace

int main(int argc, char** argv) {
    int n = 1000;
    if (argc > 1) n = std::atoi(argv[1]);
    if (argc > 2) ske::set_threads(std::atoi(argv[2]));
    std::printf("fixture: barabasi_albert(n=%d, m=3, seed=42), %d threads\n", n,
                ske::max_threads());

    const auto g = ske::generate_barabasi_albert(n, 3, 42);
    const auto x = ske::build_decision_matrix({ske::sd_local(g), ske::ks_entropy(g)});
    const auto w = ske::Weights::local_global(0.3);

    bench("stats (apsp + clustering)",
          [&](ske::Exec e) { ske::stats(g, e); });
    bench("betweenness", [&](ske::Exec e) { ske::betweenness_centrality(g, e); });
    bench("closeness", [&](ske::Exec e) { ske::closeness_centrality(g, e); });
    bench("collective influence",
          [&](ske::Exec e) { ske::collective_influence(g, 2, e); });
    bench("electre fuse", [&](ske::Exec e) { ske::fuse(x, w, {.exec = e}); });

    ske::SirParams sir;
    sir.alpha = ske::default_alpha(g);
    sir.beta = 0.2;
    sir.days = 20;
    sir.runs = 500;
    sir.rng_seed = 7;
    sir.seeds = {0, 1, 2, 3, 4};
    bench("sir monte carlo", [&](ske::Exec e) { ske::sir_monte_carlo(g, sir, e); });

    ske::IcParams ic;
    ic.p = 0.05;
    ic.runs = 500;
    ic.rng_seed = 7;
    ic.seeds = {0, 1, 2, 3, 4};
    bench("ic monte carlo", [&](ske::Exec e) { ske::ic_monte_carlo(g, ic, e); });

    const auto ranking = ske::method_ranking(g, ske::Method::dc);
    const int q_max = std::max(1, n / 20);
    bench("constraint efficiency", [&](ske::Exec e) {
        ske::constraint_efficiency(g, ranking, q_max, e);
    });
    return 0;
}

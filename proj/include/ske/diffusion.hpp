#pragma once

#include <cstdint>
#include <vector>

#include "ske/exec.hpp"
#include "ske/graph.hpp"

namespace ske {

// Discrete synchronous SIR. Within a step every infected node first
// attempts to infect each susceptible neighbor (probability alpha per
// contact), then every node that entered the step infected recovers with
// probability beta. Nodes infected during a step neither transmit nor
// recover until the next step.
struct SirParams {
    double alpha = 0.1;        // infection probability per contact per step
    double beta = 0.2;         // recovery probability per step
    int days = 20;             // step count T
    int runs = 500;            // Monte Carlo repetitions
    std::vector<int> seeds;    // initially infected nodes
    std::uint64_t rng_seed = 1;
};

// F(t) = I(t) + R(t) averaged over runs; index 0 is the initial state, so
// f_mean has days + 1 entries and f_mean[0] == |seeds|.
struct SirTrace {
    std::vector<double> f_mean;
    std::vector<double> f_std; // sample std-dev across runs (0 for runs == 1)
    int runs = 0;
};

// Epidemic threshold rate <k>/<k^2>, clamped to 1.
double default_alpha(double mean_degree, double mean_square_degree);
double default_alpha(const Graph& g);

// One realization; returns F(t) for t = 0..days. Once no node is infected
// the trailing entries stay constant.
std::vector<int> sir_run(const Graph& g, const SirParams& params, int run_index);

// Per-step compartment sizes of one realization, for invariant checks.
struct SirCompartments {
    std::vector<int> s, i, r; // each days + 1 long
};
SirCompartments sir_run_compartments(const Graph& g, const SirParams& params,
                                     int run_index);

// Mean/std of F(t) over params.runs independent realizations. Run i draws
// from stream_for_run(rng_seed, i), so the trace is identical for any
// thread count or execution order.
SirTrace sir_monte_carlo(const Graph& g, const SirParams& params,
                         Exec exec = Exec::parallel);

// Independent cascade: nodes activated at step t get exactly one chance,
// with probability p, to activate each not-yet-active neighbor at step
// t + 1; the process stops when a step activates nothing.
struct IcParams {
    double p = 0.1;
    std::vector<int> seeds;
    int runs = 500;
    std::uint64_t rng_seed = 1;
};

struct IcResult {
    double active_mean = 0.0;
    double active_std = 0.0;
    int runs = 0;
};

// Final number of active nodes of one realization.
int ic_run(const Graph& g, const IcParams& params, int run_index);

IcResult ic_monte_carlo(const Graph& g, const IcParams& params,
                        Exec exec = Exec::parallel);

} // namespace ske

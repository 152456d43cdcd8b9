#ifndef RESERVE_SIMULATE_HPP
#define RESERVE_SIMULATE_HPP

#include <array>
#include <cstdint>

#include "reserve/model.hpp"
#include "reserve/rng.hpp"

// Stochastic simulation of the two-patch chain, used as the independent check
// on the analytic modules. Events are sampled stage by stage in the variant's
// order (E, L, C, R), which is equivalent in distribution to sampling the
// composed matrix row. Every estimator is bit-reproducible for a given seed:
// replicate k draws from its own SplitMix64 stream derive_stream(seed, k) and
// the accumulated statistics are integer counts, so thread scheduling cannot
// change any result.

namespace reserve {

struct SimConfig {
  ModelVariant variant;
  ModelParams params;
  Distance d;
  long long n_reps;     // >= 1
  int horizon;          // steps per replicate, >= 0
  std::uint64_t seed;
  int burn_in = 1000;   // steps discarded before stationary sampling
};

struct SimulationEstimate {
  double mean;
  double std_error;
  long long n;
};

struct StationaryEstimate {
  std::array<double, 3> mean;       // occupancy frequency per state
  std::array<double, 3> std_error;
  long long n;
};

/// Stage matrices of one variant in event order, rows pre-accumulated for
/// categorical sampling.
class StagedSampler {
 public:
  StagedSampler(ModelVariant variant, const ModelParams& params, Distance d);

  int step(int state, SplitMix64& rng) const {
    for (int s = 0; s < n_stages_; ++s) {
      const double u = rng.next_unit();
      const auto& row = cum_[s][state];
      state = u < row[0] ? 0 : (u < row[1] ? 1 : 2);
    }
    return state;
  }

  int sample_initial(const OccupancyDistribution& p0, SplitMix64& rng) const {
    const double u = rng.next_unit();
    if (u < p0[0]) return 0;
    if (u < p0[0] + p0[1]) return 1;
    return 2;
  }

 private:
  void add_stage(const TransitionMatrix& m);
  int n_stages_ = 0;
  std::array<std::array<std::array<double, 2>, 3>, 4> cum_{};  // stage, state, cdf
};

/// One transition of the chain sampled stage by stage.
int simulate_step(int state, ModelVariant variant, const ModelParams& params,
                  Distance d, SplitMix64& rng);

/// Fraction of replicates still extant after cfg.horizon steps, starting from
/// a state drawn from `initial` per replicate.
SimulationEstimate estimate_survival(const SimConfig& cfg,
                                     const OccupancyDistribution& initial);
SimulationEstimate estimate_survival_serial(const SimConfig& cfg,
                                            const OccupancyDistribution& initial);

/// Occupancy frequencies at equilibrium: each replicate starts with both
/// patches occupied, runs cfg.burn_in steps, and contributes its final state.
/// Requires a > 0 under the recruitment or full variant.
StationaryEstimate estimate_stationary(const SimConfig& cfg);
StationaryEstimate estimate_stationary_serial(const SimConfig& cfg);

}  // namespace reserve

#endif  // RESERVE_SIMULATE_HPP

#include "reserve/simulate.hpp"

#include <cmath>

namespace reserve {

namespace {

void check_common(const SimConfig& cfg) {
  if (cfg.n_reps < 1) throw InvalidParameter("n_reps must be >= 1");
  if (cfg.horizon < 0) throw InvalidParameter("horizon must be >= 0");
  if (cfg.burn_in < 0) throw InvalidParameter("burn_in must be >= 0");
}

void check_irreducible(const SimConfig& cfg) {
  if (cfg.variant == ModelVariant::Baseline || cfg.params.a() == 0.0)
    throw IrreducibilityError(
        "stationary estimation needs external recruitment (a > 0)");
}

double binomial_se(double p, long long n) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

// One survival replicate: 1 if extant at the horizon. Replicate k owns the
// stream derive_stream(seed, k), so results do not depend on scheduling.
inline long long survival_replicate(const StagedSampler& sampler, const SimConfig& cfg,
                                    const OccupancyDistribution& initial,
                                    bool absorbing, long long k) {
  SplitMix64 rng(derive_stream(cfg.seed, static_cast<std::uint64_t>(k)));
  int s = sampler.sample_initial(initial, rng);
  for (int t = 0; t < cfg.horizon; ++t) {
    if (absorbing && s == 0) break;  // empty stays empty
    s = sampler.step(s, rng);
  }
  return s != 0;
}

// One stationary replicate: the state after burn_in steps from full occupancy.
inline int stationary_replicate(const StagedSampler& sampler, const SimConfig& cfg,
                                long long k) {
  SplitMix64 rng(derive_stream(cfg.seed, static_cast<std::uint64_t>(k)));
  int s = 2;
  for (int t = 0; t < cfg.burn_in; ++t) s = sampler.step(s, rng);
  return s;
}

SimulationEstimate survival_from_count(long long alive, long long n) {
  const double mean = static_cast<double>(alive) / static_cast<double>(n);
  return SimulationEstimate{mean, binomial_se(mean, n), n};
}

StationaryEstimate stationary_from_counts(long long c1, long long c2, long long n) {
  StationaryEstimate est{};
  est.n = n;
  const std::array<long long, 3> counts{n - c1 - c2, c1, c2};
  for (int i = 0; i < 3; ++i) {
    est.mean[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
    est.std_error[i] = binomial_se(est.mean[i], n);
  }
  return est;
}

bool variant_absorbing(const SimConfig& cfg) {
  return cfg.variant == ModelVariant::Baseline || cfg.params.a() == 0.0;
}

}  // namespace

StagedSampler::StagedSampler(ModelVariant variant, const ModelParams& params,
                             Distance d) {
  add_stage(extinction_matrix(params.r(), params.mu(), d));
  if (variant == ModelVariant::Full) add_stage(local_extinction_matrix(params.b()));
  add_stage(colonisation_matrix(params.alpha(), d));
  if (variant != ModelVariant::Baseline) add_stage(recruitment_matrix(params.a()));
}

void StagedSampler::add_stage(const TransitionMatrix& m) {
  for (int i = 0; i < 3; ++i) {
    cum_[n_stages_][i][0] = m(i, 0);
    // An exactly-zero tail cell must stay unreachable, so pin the cdf at 1.
    cum_[n_stages_][i][1] = m(i, 2) == 0.0 ? 1.0 : m(i, 0) + m(i, 1);
  }
  ++n_stages_;
}

int simulate_step(int state, ModelVariant variant, const ModelParams& params,
                  Distance d, SplitMix64& rng) {
  if (state < 0 || state > 2) throw InvalidParameter("state must be 0, 1 or 2");
  return StagedSampler(variant, params, d).step(state, rng);
}

SimulationEstimate estimate_survival(const SimConfig& cfg,
                                     const OccupancyDistribution& initial) {
  check_common(cfg);
  const StagedSampler sampler(cfg.variant, cfg.params, cfg.d);
  const bool absorbing = variant_absorbing(cfg);
  const long long n = cfg.n_reps;
  long long alive = 0;
  // Integer reduction: the sum is exact in any order.
#pragma omp parallel for reduction(+ : alive) schedule(static)
  for (long long k = 0; k < n; ++k)
    alive += survival_replicate(sampler, cfg, initial, absorbing, k);
  return survival_from_count(alive, n);
}

SimulationEstimate estimate_survival_serial(const SimConfig& cfg,
                                            const OccupancyDistribution& initial) {
  check_common(cfg);
  const StagedSampler sampler(cfg.variant, cfg.params, cfg.d);
  const bool absorbing = variant_absorbing(cfg);
  const long long n = cfg.n_reps;
  long long alive = 0;
  for (long long k = 0; k < n; ++k)
    alive += survival_replicate(sampler, cfg, initial, absorbing, k);
  return survival_from_count(alive, n);
}

StationaryEstimate estimate_stationary(const SimConfig& cfg) {
  check_common(cfg);
  check_irreducible(cfg);
  const StagedSampler sampler(cfg.variant, cfg.params, cfg.d);
  const long long n = cfg.n_reps;
  long long c1 = 0, c2 = 0;
#pragma omp parallel for reduction(+ : c1, c2) schedule(static)
  for (long long k = 0; k < n; ++k) {
    const int s = stationary_replicate(sampler, cfg, k);
    c1 += (s == 1);
    c2 += (s == 2);
  }
  return stationary_from_counts(c1, c2, n);
}

StationaryEstimate estimate_stationary_serial(const SimConfig& cfg) {
  check_common(cfg);
  check_irreducible(cfg);
  const StagedSampler sampler(cfg.variant, cfg.params, cfg.d);
  const long long n = cfg.n_reps;
  long long c1 = 0, c2 = 0;
  for (long long k = 0; k < n; ++k) {
    const int s = stationary_replicate(sampler, cfg, k);
    c1 += (s == 1);
    c2 += (s == 2);
  }
  return stationary_from_counts(c1, c2, n);
}

}  // namespace reserve

#ifndef RESERVE_SPECTRAL_HPP
#define RESERVE_SPECTRAL_HPP

#include <array>

#include "reserve/model.hpp"

namespace reserve {

/// Decay-rate view of an absorbing chain: lambda2 is the spectral radius of
/// the 2x2 transient block on states {1,2} (the second-largest eigenvalue of
/// A, whose largest is the 1 carried by the absorbing row), and qsd is the
/// associated left eigenvector normalised to a probability pair. From
/// quasi-equilibrium the extant probability shrinks by a factor lambda2 each
/// step.
struct SpectralSummary {
  double lambda2;
  std::array<double, 2> qsd;  // over states {1, 2}
};

/// Equilibrium view of an irreducible chain.
struct StationarySummary {
  OccupancyDistribution pi;
  double persistence;  // 1 - pi[0]
};

/// Closed-form eigenvalue of the transient block via its characteristic
/// quadratic. Requires row 0 of A to be exactly (1,0,0); throws StructureError
/// otherwise, or when the block is identically zero (no eigenvector exists).
SpectralSummary second_eigenvalue(const TransitionMatrix& A);

/// Stationary distribution pi with pi * A = pi, by direct linear solve of the
/// two balance equations plus normalisation. Throws IrreducibilityError when
/// state 0 is absorbing (use second_eigenvalue for those chains).
StationarySummary stationary_distribution(const TransitionMatrix& A);

/// Probability that at least one reserve is occupied after t steps from p0.
/// Computed as P_t[1] + P_t[2], the exact complement of P_t[0].
double survival_probability(ModelVariant variant, const ModelParams& params,
                            Distance d, const OccupancyDistribution& p0, int t);

}  // namespace reserve

#endif  // RESERVE_SPECTRAL_HPP

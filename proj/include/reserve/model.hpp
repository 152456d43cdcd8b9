#ifndef RESERVE_MODEL_HPP
#define RESERVE_MODEL_HPP

#include <array>
#include <string>

#include "reserve/errors.hpp"

// Two-patch occupancy chain over the states {0, 1, 2} = number of occupied
// reserves. Convention used throughout: rows index the current state, columns
// the next state, and distributions evolve by left row-vector multiplication,
// p' = p * A. "Extinction acts first" therefore means A = E * C: the row
// vector meets E before C.
//
// Units: distances in kilometres, one time step = one year.

namespace reserve {

/// Model parameters with their validity bounds enforced at construction.
///   r     - probability per step that a catastrophe strikes at least one
///           reserve, in [0,1]
///   mu    - mean catastrophe size in km, > 0
///   alpha - dispersal decay rate in 1/km (inverse mean dispersal distance), > 0
///   a     - probability an empty patch is filled by external recruits, in [0,1]
///   b     - probability of local extinction of an occupied patch, in [0,1]
class ModelParams {
 public:
  ModelParams(double r, double mu, double alpha, double a = 0.0, double b = 0.0);

  double r() const { return r_; }
  double mu() const { return mu_; }
  double alpha() const { return alpha_; }
  double a() const { return a_; }
  double b() const { return b_; }

 private:
  double r_, mu_, alpha_, a_, b_;
};

/// Inter-reserve distance in km; nonnegative and finite.
class Distance {
 public:
  explicit Distance(double km);
  double km() const { return km_; }

 private:
  double km_;
};

enum class ModelVariant {
  Baseline,     // A = E * C
  Recruitment,  // A = E * C * R
  Full,         // A = E * L * C * R
};

std::string to_string(ModelVariant v);
ModelVariant parse_variant(const std::string& name);

/// Row-stochastic 3x3 matrix over the occupancy states. Construction checks
/// entries are probabilities and each row sums to 1 within 1e-12.
class TransitionMatrix {
 public:
  static constexpr int kStates = 3;
  static constexpr double kRowSumTol = 1e-12;

  static TransitionMatrix from_rows(const std::array<std::array<double, 3>, 3>& rows);
  static TransitionMatrix identity();

  double operator()(int from, int to) const { return m_[from * 3 + to]; }

  /// True when row 0 is exactly (1, 0, 0).
  bool state0_absorbing() const;

  /// Standard matrix product; the left factor acts first under p' = p * A.
  friend TransitionMatrix operator*(const TransitionMatrix& x, const TransitionMatrix& y);

 private:
  TransitionMatrix() = default;
  std::array<double, 9> m_{};
};

/// Probability vector over the three occupancy states; sums to 1 within 1e-12.
class OccupancyDistribution {
 public:
  static constexpr double kSumTol = 1e-12;

  OccupancyDistribution(double p0, double p1, double p2);
  static OccupancyDistribution point_mass(int state);

  double operator[](int i) const { return p_[i]; }
  /// p[1] + p[2]: the probability that at least one reserve is occupied.
  double extant_mass() const { return p_[1] + p_[2]; }

 private:
  std::array<double, 3> p_;
};

/// Colonisation matrix: an empty patch is colonised by the occupied one with
/// probability exp(-alpha*d); rows 0 and 2 are identity rows.
TransitionMatrix colonisation_matrix(double alpha, Distance d);

/// Catastrophe matrix with q = exp(-d/mu), the probability a catastrophe
/// strikes both reserves given that one arrives.
TransitionMatrix extinction_matrix(double r, double mu, Distance d);

/// External recruitment matrix: each empty patch fills independently with
/// probability a.
TransitionMatrix recruitment_matrix(double a);

/// Local (non-catastrophic) extinction matrix: each occupied patch dies
/// independently with probability b.
TransitionMatrix local_extinction_matrix(double b);

/// The variant's composed one-step matrix, stages multiplied in event order.
TransitionMatrix compose(ModelVariant variant, const ModelParams& params, Distance d);

/// One step of the chain: returns p * A.
OccupancyDistribution step_distribution(const OccupancyDistribution& p,
                                        const TransitionMatrix& A);

}  // namespace reserve

#endif  // RESERVE_MODEL_HPP

#ifndef RESERVE_OPTIMIZE_HPP
#define RESERVE_OPTIMIZE_HPP

#include <vector>

#include "reserve/model.hpp"

namespace reserve {

enum class ObjectiveKind {
  QuasiExtinctionRate,     // maximise lambda2; needs an absorbing chain
  EquilibriumPersistence,  // maximise 1 - pi[0]; needs a > 0
};

std::string to_string(ObjectiveKind k);
ObjectiveKind parse_objective(const std::string& name);

struct ObjectiveSpec {
  ModelVariant variant;
  ObjectiveKind kind;
};

/// Throws IncompatibleObjective unless the objective applies to the variant:
/// QuasiExtinctionRate needs state 0 absorbing (Baseline, or a = 0),
/// EquilibriumPersistence needs an irreducible chain (Recruitment/Full, a > 0).
void validate_objective(const ObjectiveSpec& spec, const ModelParams& params);

/// The viability score at a single spacing, in [0,1].
double objective(const ObjectiveSpec& spec, const ModelParams& params, Distance d);

struct CurvePoint {
  double d;
  double value;
};

/// n_points uniformly spaced samples of the objective, endpoints included.
/// Points are evaluated in parallel; the returned order is ascending d and the
/// values are bit-identical to the serial reference below.
std::vector<CurvePoint> sweep(const ObjectiveSpec& spec, const ModelParams& params,
                              double d_min, double d_max, int n_points);
std::vector<CurvePoint> sweep_serial(const ObjectiveSpec& spec, const ModelParams& params,
                                     double d_min, double d_max, int n_points);

struct SpacingOptimum {
  double d_star;
  double value;    // objective at d_star
  bool plateau;    // no interior maximum; d_star is the smallest spacing
                   // whose objective is within epsilon_plateau of the supremum
  std::vector<CurvePoint> curve;  // the coarse-grid samples used by the search
};

struct OptimizeOptions {
  int grid_points = 512;
  double epsilon_plateau = 1e-6;
};

/// Coarse grid scan followed by golden-section refinement of the best bracket.
/// A curve whose grid maximum sits at d_max with total variation below
/// epsilon_plateau over the final 10% of the range is treated as a plateau:
/// the smallest spacing achieving the supremum within epsilon_plateau is
/// returned instead, located by bisection to width tol. Ties between equal
/// optima always resolve to the smallest d.
SpacingOptimum optimize_spacing(const ObjectiveSpec& spec, const ModelParams& params,
                                double d_min, double d_max, double tol,
                                const OptimizeOptions& options = {});

/// Default search range upper bound: 20 * max(mu, 1/alpha). Past that point
/// both exponentials have decayed to noise.
double default_d_max(const ModelParams& params);

}  // namespace reserve

#endif  // RESERVE_OPTIMIZE_HPP

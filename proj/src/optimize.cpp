#include "reserve/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "reserve/spectral.hpp"

namespace reserve {

std::string to_string(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::QuasiExtinctionRate: return "quasi_extinction_rate";
    case ObjectiveKind::EquilibriumPersistence: return "equilibrium_persistence";
  }
  throw InvalidParameter("unknown objective tag");
}

ObjectiveKind parse_objective(const std::string& name) {
  if (name == "quasi_extinction_rate") return ObjectiveKind::QuasiExtinctionRate;
  if (name == "equilibrium_persistence") return ObjectiveKind::EquilibriumPersistence;
  throw InvalidParameter("unknown objective '" + name +
                         "' (expected quasi_extinction_rate|equilibrium_persistence)");
}

void validate_objective(const ObjectiveSpec& spec, const ModelParams& params) {
  const bool absorbing =
      spec.variant == ModelVariant::Baseline || params.a() == 0.0;
  if (spec.kind == ObjectiveKind::QuasiExtinctionRate && !absorbing)
    throw IncompatibleObjective(
        "quasi_extinction_rate needs an absorbing chain; set a = 0 or use "
        "the baseline variant");
  if (spec.kind == ObjectiveKind::EquilibriumPersistence && absorbing)
    throw IncompatibleObjective(
        "equilibrium_persistence needs external recruitment (a > 0) under the "
        "recruitment or full variant");
}

double objective(const ObjectiveSpec& spec, const ModelParams& params, Distance d) {
  validate_objective(spec, params);
  const TransitionMatrix A = compose(spec.variant, params, d);
  if (spec.kind == ObjectiveKind::QuasiExtinctionRate)
    return second_eigenvalue(A).lambda2;
  return stationary_distribution(A).persistence;
}

namespace {

void check_range(double d_min, double d_max, int n_points) {
  if (!(d_min >= 0.0) || !(d_min < d_max) || !std::isfinite(d_max))
    throw InvalidParameter("need 0 <= d_min < d_max");
  if (n_points < 2) throw InvalidParameter("need at least 2 grid points");
}

double grid_point(double d_min, double d_max, int i, int n) {
  if (i == n - 1) return d_max;  // endpoint exact, no rounding drift
  return d_min + (d_max - d_min) * static_cast<double>(i) / (n - 1);
}

}  // namespace

std::vector<CurvePoint> sweep_serial(const ObjectiveSpec& spec, const ModelParams& params,
                                     double d_min, double d_max, int n_points) {
  check_range(d_min, d_max, n_points);
  validate_objective(spec, params);
  std::vector<CurvePoint> out(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double d = grid_point(d_min, d_max, i, n_points);
    out[i] = {d, objective(spec, params, Distance(d))};
  }
  return out;
}

std::vector<CurvePoint> sweep(const ObjectiveSpec& spec, const ModelParams& params,
                              double d_min, double d_max, int n_points) {
  check_range(d_min, d_max, n_points);
  validate_objective(spec, params);
  std::vector<CurvePoint> out(n_points);
  std::exception_ptr failure;  // exceptions must not escape the parallel region
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n_points; ++i) {
    try {
      const double d = grid_point(d_min, d_max, i, n_points);
      out[i] = {d, objective(spec, params, Distance(d))};
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

SpacingOptimum optimize_spacing(const ObjectiveSpec& spec, const ModelParams& params,
                                double d_min, double d_max, double tol,
                                const OptimizeOptions& options) {
  if (!(tol > 0.0)) throw InvalidParameter("tol must be > 0");
  check_range(d_min, d_max, options.grid_points);

  auto f = [&](double d) { return objective(spec, params, Distance(d)); };

  std::vector<CurvePoint> grid = sweep(spec, params, d_min, d_max, options.grid_points);
  const int n = static_cast<int>(grid.size());
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (grid[i].value > grid[best].value) best = i;
  const double vmax = grid[best].value;

  // Plateau: the curve has levelled off at the far end and nothing interior
  // beats that level. Pick the smallest spacing already within
  // epsilon_plateau of the supremum.
  const double eps = options.epsilon_plateau;
  double tail_variation = 0.0;
  const double tail_start = d_max - 0.1 * (d_max - d_min);
  for (int i = 1; i < n; ++i)
    if (grid[i - 1].d >= tail_start)
      tail_variation += std::abs(grid[i].value - grid[i - 1].value);

  if (vmax - grid[n - 1].value <= eps && tail_variation < eps) {
    int k = 0;
    while (grid[k].value < vmax - eps) ++k;
    double d_star = grid[k].d;
    if (k > 0) {
      // Smallest d with f(d) >= vmax - eps, to width tol.
      double lo = grid[k - 1].d, hi = grid[k].d;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) >= vmax - eps)
          hi = mid;
        else
          lo = mid;
      }
      d_star = hi;
    }
    return SpacingOptimum{d_star, f(d_star), true, std::move(grid)};
  }

  // Golden-section refinement inside the bracket around the best grid point.
  double lo = grid[std::max(best - 1, 0)].d;
  double hi = grid[std::min(best + 1, n - 1)].d;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double e = lo + inv_phi * (hi - lo);
  double fc = f(c), fe = f(e);
  while (hi - lo > tol) {
    if (fc > fe) {
      hi = e; e = c; fe = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c; c = e; fc = fe;
      e = lo + inv_phi * (hi - lo);
      fe = f(e);
    }
  }
  double d_star = 0.5 * (lo + hi);
  double value = f(d_star);
  if (value < vmax) {  // never report worse than the best grid sample
    d_star = grid[best].d;
    value = vmax;
  }
  return SpacingOptimum{d_star, value, false, std::move(grid)};
}

double default_d_max(const ModelParams& params) {
  return 20.0 * std::max(params.mu(), 1.0 / params.alpha());
}

}  // namespace reserve

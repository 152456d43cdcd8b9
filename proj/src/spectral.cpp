#include "reserve/spectral.hpp"

#include <cmath>

namespace reserve {

SpectralSummary second_eigenvalue(const TransitionMatrix& A) {
  if (!A.state0_absorbing())
    throw StructureError("second_eigenvalue requires row 0 = (1,0,0); "
                         "this chain has no absorbing empty state");

  const double b11 = A(1, 1), b12 = A(1, 2);
  const double b21 = A(2, 1), b22 = A(2, 2);

  // Largest root of x^2 - tr*x + det = 0, written as m + s with
  // m = tr/2 and s = sqrt(delta^2 + b12*b21), delta = (b11-b22)/2. The
  // radicand is nonnegative for a nonnegative block, so both roots are real
  // and this one is the Perron root.
  const double m = (b11 + b22) / 2.0;
  const double delta = (b11 - b22) / 2.0;
  const double s = std::sqrt(delta * delta + b12 * b21);
  const double lambda = m + s;

  // lambda - b11 = s - delta and lambda - b22 = s + delta. Whichever of the
  // two subtractions cancels is rewritten through
  // (lambda-b11)*(lambda-b22) = b12*b21, keeping eigenvector components
  // positive even when the off-diagonal product underflows toward zero.
  double gap11, gap22;  // lambda - b11, lambda - b22
  if (delta >= 0.0) {
    gap22 = s + delta;
    gap11 = gap22 > 0.0 ? (b12 * b21) / gap22 : 0.0;
  } else {
    gap11 = s - delta;
    gap22 = (b12 * b21) / gap11;
  }

  // Left eigenvector candidates (b21, gap11) and (gap22, b12); take whichever
  // is further from the zero vector.
  const double s1 = b21 + gap11;
  const double s2 = gap22 + b12;
  std::array<double, 2> v{};
  if (s1 >= s2 && s1 > 0.0) {
    v = {b21 / s1, gap11 / s1};
  } else if (s2 > 0.0) {
    v = {gap22 / s2, b12 / s2};
  } else if (lambda > 0.0) {
    // Scalar block lambda*I: every pair is an eigenvector.
    v = {0.5, 0.5};
  } else {
    throw StructureError("transient block is zero; quasi-stationary "
                         "distribution is undefined");
  }
  return SpectralSummary{lambda, v};
}

StationarySummary stationary_distribution(const TransitionMatrix& A) {
  if (A.state0_absorbing())
    throw IrreducibilityError("state 0 is absorbing (a = 0); the chain has no "
                              "stationary distribution over all states");

  // pi * A = pi. Balance equations for states 0 and 1 plus normalisation;
  // the third balance equation is their negative sum, so this system is
  // nonsingular for any irreducible A.
  double M[3][4] = {
      {A(0, 0) - 1.0, A(1, 0), A(2, 0), 0.0},
      {A(0, 1), A(1, 1) - 1.0, A(2, 1), 0.0},
      {1.0, 1.0, 1.0, 1.0},
  };

  // Gaussian elimination with partial pivoting.
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int row = col + 1; row < 3; ++row)
      if (std::abs(M[row][col]) > std::abs(M[piv][col])) piv = row;
    if (M[piv][col] == 0.0)
      throw StructureError("singular balance system; matrix is not irreducible");
    if (piv != col)
      for (int k = 0; k < 4; ++k) std::swap(M[piv][k], M[col][k]);
    for (int row = 0; row < 3; ++row) {
      if (row == col) continue;
      const double f = M[row][col] / M[col][col];
      for (int k = col; k < 4; ++k) M[row][k] -= f * M[col][k];
    }
  }
  // The +0.0 turns a signed zero positive; elimination can also leave tiny
  // negative round-off in a vanishing component.
  double pi0 = M[0][3] / M[0][0] + 0.0;
  double pi1 = M[1][3] / M[1][1] + 0.0;
  double pi2 = M[2][3] / M[2][2] + 0.0;
  if (pi0 < 0.0 && pi0 > -1e-14) pi0 = 0.0;
  if (pi1 < 0.0 && pi1 > -1e-14) pi1 = 0.0;
  if (pi2 < 0.0 && pi2 > -1e-14) pi2 = 0.0;

  OccupancyDistribution pi(pi0, pi1, pi2);
  return StationarySummary{pi, pi[1] + pi[2]};
}

double survival_probability(ModelVariant variant, const ModelParams& params,
                            Distance d, const OccupancyDistribution& p0, int t) {
  if (t < 0) throw InvalidParameter("step count must be >= 0");
  const TransitionMatrix A = compose(variant, params, d);
  OccupancyDistribution p = p0;
  for (int i = 0; i < t; ++i) p = step_distribution(p, A);
  return p.extant_mass();
}

}  // namespace reserve

#include "reserve/model.hpp"

#include <cmath>
#include <sstream>

namespace reserve {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

bool is_prob(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

ModelParams::ModelParams(double r, double mu, double alpha, double a, double b)
    : r_(r), mu_(mu), alpha_(alpha), a_(a), b_(b) {
  require(is_prob(r), "r must lie in [0,1], got " + fmt(r));
  require(std::isfinite(mu) && mu > 0.0, "mu must be > 0, got " + fmt(mu));
  require(std::isfinite(alpha) && alpha > 0.0, "alpha must be > 0, got " + fmt(alpha));
  require(is_prob(a), "a must lie in [0,1], got " + fmt(a));
  require(is_prob(b), "b must lie in [0,1], got " + fmt(b));
}

Distance::Distance(double km) : km_(km) {
  require(std::isfinite(km) && km >= 0.0, "d must be >= 0 and finite, got " + fmt(km));
}

std::string to_string(ModelVariant v) {
  switch (v) {
    case ModelVariant::Baseline: return "baseline";
    case ModelVariant::Recruitment: return "recruitment";
    case ModelVariant::Full: return "full";
  }
  throw InvalidParameter("unknown variant tag");
}

ModelVariant parse_variant(const std::string& name) {
  if (name == "baseline") return ModelVariant::Baseline;
  if (name == "recruitment") return ModelVariant::Recruitment;
  if (name == "full") return ModelVariant::Full;
  throw InvalidParameter("unknown variant '" + name +
                         "' (expected baseline|recruitment|full)");
}

TransitionMatrix TransitionMatrix::from_rows(
    const std::array<std::array<double, 3>, 3>& rows) {
  TransitionMatrix A;
  for (int i = 0; i < 3; ++i) {
    double sum = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double x = rows[i][j];
      if (!std::isfinite(x) || x < 0.0 || x > 1.0 + kRowSumTol)
        throw InvalidParameter("matrix entry (" + std::to_string(i) + "," +
                               std::to_string(j) + ") = " + fmt(x) +
                               " is not a probability");
      A.m_[i * 3 + j] = x;
      sum += x;
    }
    if (std::abs(sum - 1.0) > kRowSumTol)
      throw InvalidParameter("row " + std::to_string(i) + " sums to " + fmt(sum) +
                             ", not 1");
  }
  return A;
}

TransitionMatrix TransitionMatrix::identity() {
  return from_rows({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

bool TransitionMatrix::state0_absorbing() const {
  return m_[0] == 1.0 && m_[1] == 0.0 && m_[2] == 0.0;
}

TransitionMatrix operator*(const TransitionMatrix& x, const TransitionMatrix& y) {
  std::array<std::array<double, 3>, 3> rows{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      rows[i][j] = x(i, 0) * y(0, j) + x(i, 1) * y(1, j) + x(i, 2) * y(2, j);
  return TransitionMatrix::from_rows(rows);
}

OccupancyDistribution::OccupancyDistribution(double p0, double p1, double p2)
    : p_{p0, p1, p2} {
  double sum = 0.0;
  for (double x : p_) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0 + kSumTol)
      throw InvalidParameter("distribution entry " + fmt(x) + " is not a probability");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kSumTol)
    throw InvalidParameter("distribution sums to " + fmt(sum) + ", not 1");
}

OccupancyDistribution OccupancyDistribution::point_mass(int state) {
  require(state >= 0 && state <= 2, "state must be 0, 1 or 2");
  return OccupancyDistribution(state == 0, state == 1, state == 2);
}

TransitionMatrix colonisation_matrix(double alpha, Distance d) {
  require(std::isfinite(alpha) && alpha > 0.0, "alpha must be > 0, got " + fmt(alpha));
  const double c = std::exp(-alpha * d.km());
  return TransitionMatrix::from_rows({{{1, 0, 0},
                                       {0, 1.0 - c, c},
                                       {0, 0, 1}}});
}

TransitionMatrix extinction_matrix(double r, double mu, Distance d) {
  require(is_prob(r), "r must lie in [0,1], got " + fmt(r));
  require(std::isfinite(mu) && mu > 0.0, "mu must be > 0, got " + fmt(mu));
  const double q = std::exp(-d.km() / mu);
  const double hit1 = r * (1.0 + q) / 2.0;  // from state 1: the occupied patch dies
  return TransitionMatrix::from_rows({{{1, 0, 0},
                                       {hit1, 1.0 - hit1, 0},
                                       {r * q, r * (1.0 - q), 1.0 - r}}});
}

TransitionMatrix recruitment_matrix(double a) {
  require(is_prob(a), "a must lie in [0,1], got " + fmt(a));
  return TransitionMatrix::from_rows({{{(1 - a) * (1 - a), 2 * a * (1 - a), a * a},
                                       {0, 1 - a, a},
                                       {0, 0, 1}}});
}

TransitionMatrix local_extinction_matrix(double b) {
  require(is_prob(b), "b must lie in [0,1], got " + fmt(b));
  return TransitionMatrix::from_rows({{{1, 0, 0},
                                       {b, 1 - b, 0},
                                       {b * b, 2 * b * (1 - b), (1 - b) * (1 - b)}}});
}

TransitionMatrix compose(ModelVariant variant, const ModelParams& params, Distance d) {
  const TransitionMatrix E = extinction_matrix(params.r(), params.mu(), d);
  const TransitionMatrix C = colonisation_matrix(params.alpha(), d);
  switch (variant) {
    case ModelVariant::Baseline:
      return E * C;
    case ModelVariant::Recruitment:
      return E * C * recruitment_matrix(params.a());
    case ModelVariant::Full:
      return E * local_extinction_matrix(params.b()) * C * recruitment_matrix(params.a());
  }
  throw InvalidParameter("unknown variant tag");
}

OccupancyDistribution step_distribution(const OccupancyDistribution& p,
                                        const TransitionMatrix& A) {
  std::array<double, 3> out{};
  for (int j = 0; j < 3; ++j)
    out[j] = p[0] * A(0, j) + p[1] * A(1, j) + p[2] * A(2, j);
  return OccupancyDistribution(out[0], out[1], out[2]);
}

}  // namespace reserve

#include "reserve/presets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "reserve/optimize.hpp"

namespace reserve {

namespace {

constexpr double kDMin = 0.0;
constexpr double kDMax = 100.0;
constexpr int kPoints = 401;

std::vector<CurveRecord> closed_form_family(
    const std::vector<std::pair<std::string, double>>& series,
    const std::function<double(double param, double d)>& f) {
  std::vector<CurveRecord> out;
  out.reserve(series.size() * kPoints);
  for (const auto& [label, param] : series)
    for (int i = 0; i < kPoints; ++i) {
      const double d = kDMin + (kDMax - kDMin) * i / (kPoints - 1);
      out.push_back({label, d, f(param, d)});
    }
  return out;
}

std::vector<CurveRecord> sweep_family(
    const ObjectiveSpec& spec,
    const std::vector<std::pair<std::string, ModelParams>>& series) {
  std::vector<CurveRecord> out;
  out.reserve(series.size() * kPoints);
  for (const auto& [label, params] : series)
    for (const CurvePoint& p : sweep(spec, params, kDMin, kDMax, kPoints))
      out.push_back({label, p.d, p.value});
  return out;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"fig3", "fig5", "fig6", "fig8", "fig9"};
  return names;
}

bool is_preset(const std::string& name) {
  const auto& names = preset_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CurveRecord> run_preset(const std::string& name) {
  if (name == "fig3")
    return closed_form_family(
        {{"alpha=0.01", 0.01}, {"alpha=0.1", 0.1}, {"alpha=0.2", 0.2}},
        [](double alpha, double d) { return std::exp(-alpha * d); });

  if (name == "fig5")
    return closed_form_family({{"mu=20", 20}, {"mu=30", 30}, {"mu=40", 40}},
                              [](double mu, double d) { return 0.5 * std::exp(-d / mu); });

  if (name == "fig6")
    return sweep_family({ModelVariant::Baseline, ObjectiveKind::QuasiExtinctionRate},
                        {{"mu=5", ModelParams(0.5, 5, 0.1)},
                         {"mu=10", ModelParams(0.5, 10, 0.1)},
                         {"mu=20", ModelParams(0.5, 20, 0.1)}});

  if (name == "fig8")
    return sweep_family({ModelVariant::Recruitment, ObjectiveKind::EquilibriumPersistence},
                        {{"a=0.05", ModelParams(0.5, 5, 0.1, 0.05)},
                         {"a=0.075", ModelParams(0.5, 5, 0.1, 0.075)},
                         {"a=0.1", ModelParams(0.5, 5, 0.1, 0.1)}});

  if (name == "fig9")
    return sweep_family({ModelVariant::Full, ObjectiveKind::EquilibriumPersistence},
                        {{"b=0.025", ModelParams(0.5, 5, 0.1, 0.1, 0.025)},
                         {"b=0.05", ModelParams(0.5, 5, 0.1, 0.1, 0.05)},
                         {"b=0.1", ModelParams(0.5, 5, 0.1, 0.1, 0.1)}});

  throw InvalidParameter("unknown preset '" + name + "'");
}

}  // namespace reserve

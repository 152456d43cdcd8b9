#ifndef RESERVE_PRESETS_HPP
#define RESERVE_PRESETS_HPP

#include <string>
#include <vector>

#include "reserve/io.hpp"

namespace reserve {

// Bundled sweep presets. Each emits a labelled curve family on a [0,100] km
// grid with 401 points:
//   fig3 - colonisation probability exp(-alpha*d), alpha in {0.01, 0.1, 0.2}
//   fig5 - shared-catastrophe probability r*exp(-d/mu), r=0.5, mu in {20,30,40}
//   fig6 - baseline decay rate lambda2, r=0.5, alpha=0.1, mu in {5, 10, 20}
//   fig8 - persistence with recruitment, r=0.5, alpha=0.1, mu=5,
//          a in {0.05, 0.075, 0.1}
//   fig9 - persistence with local extinction, r=0.5, alpha=0.1, mu=5, a=0.1,
//          b in {0.025, 0.05, 0.1}

const std::vector<std::string>& preset_names();
bool is_preset(const std::string& name);
std::vector<CurveRecord> run_preset(const std::string& name);

}  // namespace reserve

#endif  // RESERVE_PRESETS_HPP

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ellfgl/report.hpp"

namespace ellfgl {

// A reference example turned into a named, self-contained check.
struct Anchor {
  std::string group;  // ring, series, curve, fgl, sigma, genus, pde
  std::string name;
  std::function<CheckResult()> run;
};

const std::vector<Anchor>& reference_anchors();

struct AnchorOutcome {
  std::string group, name;
  bool passed = false;
  std::string detail;
};

// Runs every anchor whose group is in `only` (all when empty). Exceptions
// thrown by an anchor are reported as failures.
std::vector<AnchorOutcome> reproduce_anchors(const std::vector<std::string>& only = {});

}  // namespace ellfgl

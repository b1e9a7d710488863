#pragma once

// MOY relations (1)-(7) as closed slice words, for identity sweeps.

#include <string>
#include <utility>
#include <vector>

#include "core/moy.hpp"
#include "core/qpoly.hpp"
#include "core/statesum.hpp"

namespace moykit::relations {

struct Instance {
  int relation = 0;      // 1..7
  std::string params;    // e.g. "m=1 n=2"
  std::string variant;   // "", "mirror", "reversed"
  moy::SliceWord lhs;
  std::vector<std::pair<qpoly::LaurentPoly, moy::SliceWord>> rhs;
};

/// All instances with every edge color at most max_width (relation 7 also
/// limited to l <= 2, k <= 3), each in three variants: as drawn, reflected
/// left-right, and with all orientations reversed.
std::vector<Instance> instances(int N, int max_width);

struct Outcome {
  Instance instance;
  qpoly::LaurentPoly lhs_value;
  qpoly::LaurentPoly rhs_value;
  bool pass = false;
};

std::vector<Outcome> verify(int N, int max_width, statesum::Engine engine = statesum::Engine::dp, int threads = 1);

}  // namespace moykit::relations

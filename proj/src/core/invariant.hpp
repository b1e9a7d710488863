#pragma once

// Colored link diagrams: crossing resolutions, <D>_N, the RT polynomial,
// the Euler characteristic of the crossing complex, and parity bookkeeping.

#include <functional>
#include <optional>
#include <vector>

#include "core/moy.hpp"
#include "core/qpoly.hpp"
#include "core/statesum.hpp"

namespace moykit::invariant {

struct Resolution {
  int k = 0;
  qpoly::LaurentPoly coefficient;
  /// Square gadget on two upward strands, boundary (n, m), final row (m, n).
  moy::SliceWord word;
};

/// n is the color of the bottom-left strand, m the bottom-right one (the
/// under strand of a positive crossing).
std::vector<Resolution> resolve_crossing(bool positive, int m, int n, int N);
qpoly::LaurentPoly shift_factor(bool positive, int m, int n, int N);

/// Rewrites every crossing between oppositely oriented strands as a crossing
/// of two upward strands wrapped by a cup and a cap. Other events unchanged.
moy::SliceWord normalize_crossings(const moy::SliceWord& D);

/// A crossing of the normalized word.
struct CrossingInfo {
  std::size_t event_index;
  bool positive;
  bool upward;  // false: both strands point down
  int m;        // bottom-right color in the sweep frame
  int n;        // bottom-left color
};

std::vector<CrossingInfo> crossings(const moy::SliceWord& normalized);

/// Calls visit(choice, resolved_word, coefficient) for every global
/// resolution; choice[c] indexes resolve_crossing for crossing c.
void for_each_resolution(const moy::SliceWord& normalized, int N,
                         const std::function<void(const std::vector<int>&, const moy::SliceWord&,
                                                  const qpoly::LaurentPoly&)>& visit);
std::size_t resolution_count(const moy::SliceWord& normalized, int N);

/// dp folds each crossing's resolutions into one sweep; enumerate sums the
/// brackets of all global resolutions.
qpoly::LaurentPoly bracket_link(const moy::SliceWord& D, int N, int threads = 1,
                                statesum::Engine engine = statesum::Engine::dp);
qpoly::LaurentPoly rt_poly(const moy::SliceWord& D, int N, int threads = 1);

enum class GdimSource { bracket, mf };

qpoly::LaurentPoly complex_euler(const moy::SliceWord& D, int N, GdimSource source, int threads = 1);

struct ParityReport {
  bool pass = true;
  int total_color = 0;
  /// Z/2 degree of each global resolution: colored rotation plus the
  /// <m> shifts of same-color crossings.
  std::vector<int> resolution_parity;
};

ParityReport parity_report(const moy::SliceWord& D, int N);
bool parity_check(const moy::SliceWord& D, int N);

}  // namespace moykit::invariant

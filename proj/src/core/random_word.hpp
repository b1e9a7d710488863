#pragma once

// Seeded generators of valid closed slice words, for property sweeps.

#include <cstdint>

#include "core/moy.hpp"

namespace moykit::moy {

struct RandomWordOptions {
  int max_events = 6;
  int max_color = 2;
  bool vertices = true;
  bool crossings = false;
};

/// A nonempty closed word with at most opts.max_events events. Same seed,
/// same word.
SliceWord random_closed_word(std::uint64_t seed, const RandomWordOptions& opts);

}  // namespace moykit::moy

#pragma once

#include "tplactic/classical.hpp"
#include "tplactic/timed_knuth.hpp"
#include "tplactic/timed_word.hpp"

#include <cstdint>
#include <random>

namespace tplactic {

using Rng = std::mt19937_64;

// Deterministic per-stream generator derived from a base seed, so that
// independent consumers do not perturb each other's sequences.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

// Length uniform in [0, max_length], letters uniform in [1, letters].
Word random_word(Rng& rng, std::size_t max_length, Letter letters);

// p/q with q uniform in [1, max_den] and p uniform in [1, 2q].
Duration random_duration(Rng& rng, unsigned max_den);

// Exactly `runs` runs when letters >= 2 (adjacent letters are drawn
// distinct), a single run otherwise.
TimedWord random_timed_word(Rng& rng, std::size_t runs, Letter letters, unsigned max_den);

// Run count uniform in [0, max_runs].
TimedWord random_timed_word_upto(Rng& rng, std::size_t max_runs, Letter letters,
                                 unsigned max_den);

struct MoveInstance {
  TimedWord word;
  TimedKnuthMove move;
};

// Builds factors x, y, z that satisfy the side conditions of a random
// kind, places them in source order for a random direction, and wraps
// them in random context words. Requires letters >= 2.
MoveInstance random_move_instance(Rng& rng, Letter letters, unsigned max_den);

} // namespace tplactic

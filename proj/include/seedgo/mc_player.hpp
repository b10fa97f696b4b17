#pragma once

#include "seedgo/belief.hpp"
#include "seedgo/board.hpp"
#include "seedgo/rng.hpp"

namespace seedgo {

struct McConfig {
  int playouts_per_move = 50;
  int playout_move_cap = 75;  // 3 * size^2 by convention
  double komi = 7.5;
};

inline int default_playout_cap(int board_size) { return 3 * board_size * board_size; }

// Plays one uniformly random legal non-eyelike move for `color` on `board`
// (mutating it), or a pass when no such move exists. Uniformity comes from
// drawing empty points without replacement until one is playable: the first
// success of such a scheme is uniform over the playable set.
Move play_random_move(Board& board, Color color, SplitMix64& rng);

// Uniform random playout to two consecutive passes or the move cap, scored
// by area vs komi. `initial_passes` seeds the pass streak so a playout can
// start right after a real pass.
Color playout(Board board, Color to_move, SplitMix64& rng, const McConfig& config,
              int initial_passes = 0);

// Flat Monte Carlo move choice. Candidates are the points empty on the view
// (own stones and known opponent stones excluded), not rejected this turn,
// and not eyelike for the mover, plus Pass. Each candidate is scored by the
// mean win over playouts_per_move determinized playouts; ties break toward
// the earliest candidate in scan order (Pass last). Draws rng in a fixed
// order: candidate loop outer, playout loop inner.
Move choose_move(const PlayerView& view, SplitMix64& rng, const McConfig& config);

}  // namespace seedgo

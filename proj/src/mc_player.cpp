#include "seedgo/mc_player.hpp"

#include <array>

namespace seedgo {

Move play_random_move(Board& board, Color color, SplitMix64& rng) {
  std::array<int16_t, kMaxPoints> cand;
  int n = 0;
  const int total = board.num_points();
  for (int p = 0; p < total; ++p) {
    if (board.at(p) == Cell::Empty) cand[n++] = static_cast<int16_t>(p);
  }
  while (n > 0) {
    const int k = static_cast<int>(rng.uniform_below(static_cast<uint64_t>(n)));
    const int p = cand[k];
    if (!board.is_eyelike(color, p)) {
      const Move m = Move::point(p);
      if (board.play(color, m, nullptr) == PlayStatus::Ok) return m;
    }
    cand[k] = cand[--n];
  }
  board.play(color, Move::pass(), nullptr);
  return Move::pass();
}

Color playout(Board board, Color to_move, SplitMix64& rng, const McConfig& config,
              int initial_passes) {
  int passes = initial_passes;
  int moves = 0;
  Color turn = to_move;
  while (passes < 2 && moves < config.playout_move_cap) {
    const Move m = play_random_move(board, turn, rng);
    passes = m.is_pass() ? passes + 1 : 0;
    turn = opponent(turn);
    ++moves;
  }
  return score_winner(board.area_score(), config.komi);
}

Move choose_move(const PlayerView& view, SplitMix64& rng, const McConfig& config) {
  const Color me = view.color();
  const Board& vb = view.view_board();
  const int total = vb.num_points();

  std::array<int16_t, kMaxPoints> cand;
  int n_cand = 0;
  for (int p = 0; p < total; ++p) {
    if (vb.at(p) == Cell::Empty && !view.illegal_this_turn(p) &&
        !vb.is_eyelike(me, p)) {
      cand[n_cand++] = static_cast<int16_t>(p);
    }
  }
  if (n_cand == 0) return Move::pass();

  Move best = Move::pass();
  int best_wins = -1;
  // Candidate points in scan order, then Pass; strict improvement keeps the
  // earliest maximum so rng consumption never depends on tie patterns.
  for (int c = 0; c <= n_cand; ++c) {
    const bool is_pass = (c == n_cand);
    const Move m = is_pass ? Move::pass() : Move::point(cand[c]);
    int wins = 0;
    for (int t = 0; t < config.playouts_per_move; ++t) {
      Determinization det = view.determinize(rng, is_pass ? -1 : m.idx);
      int initial_passes = 0;
      if (is_pass) {
        initial_passes = 1;
      } else if (det.board.play(me, m, nullptr) != PlayStatus::Ok) {
        // Suicidal in this hypothetical world; count it as a loss.
        continue;
      }
      if (playout(std::move(det.board), opponent(me), rng, config,
                  initial_passes) == me) {
        ++wins;
      }
    }
    if (wins > best_wins) {
      best_wins = wins;
      best = m;
    }
  }
  return best;
}

}  // namespace seedgo

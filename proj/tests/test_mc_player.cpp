#include "doctest.h"
#include "seedgo/mc_player.hpp"

using namespace seedgo;

namespace {

McConfig desk_config(int size, int playouts) {
  McConfig cfg;
  cfg.playouts_per_move = playouts;
  cfg.playout_move_cap = default_playout_cap(size);
  cfg.komi = 7.5;
  return cfg;
}

// White to move, full information (all 13 black stones known). The white
// group's eye space is (0,1),(0,2),(0,3): playing the center (0,2) makes two
// eyes and freezes the game at W 10 / B 15 (margin 5 < komi, White wins);
// the flanks let Black destroy everything, and (4,0)/(4,4) are suicide in
// every hypothesis.
//   O...O      (0,0), (0,4) white, eyespace between
//   OOOOO      row 1 white
//   XXXXX      rows 2-3 black
//   XXXXX
//   .XXX.      black with eyes at (4,0) and (4,4)
PlayerView near_terminal_white_view() {
  PlayerView view(Color::White, 5);
  const int whites[] = {0, 4, 5, 6, 7, 8, 9};
  const int blacks[] = {10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 21, 22, 23};
  for (int p : blacks) {
    view.on_opponent_placed();
    view.on_illegal(Move::point(p));
  }
  // Own placements clear the per-turn rejection set.
  for (int p : whites) view.on_accepted(Move::point(p), {});
  return view;
}

}  // namespace

TEST_CASE("no legal non-eyelike candidate means pass") {
  // Black owns everything except its two eyes.
  PlayerView view(Color::Black, 5);
  for (int p = 0; p < 25; ++p) {
    if (p != 0 && p != 24) view.on_accepted(Move::point(p), {});
  }
  SplitMix64 rng(1);
  CHECK(choose_move(view, rng, desk_config(5, 10)) == Move::pass());
}

TEST_CASE("dominated playout position is won regardless of rng") {
  Board b = Board::from_text("XX.XX\n"
                             "XXXXX\n"
                             "XXXXX\n"
                             "XXXXX\n"
                             "XX.XX\n");
  for (uint64_t seed : {1, 99, 12345}) {
    SplitMix64 rng(seed);
    CHECK(playout(b, Color::White, rng, desk_config(5, 1)) == Color::Black);
  }
}

TEST_CASE("playout terminates within the cap on a tiny board") {
  SplitMix64 rng(5);
  const McConfig cfg = desk_config(2, 1);
  Board b(2);
  (void)playout(b, Color::Black, rng, cfg);  // termination is the assertion
}

TEST_CASE("same rng state gives identical playouts") {
  const McConfig cfg = desk_config(5, 1);
  Board b(5);
  SplitMix64 a(42), c(42);
  Board b1 = b, b2 = b;
  const Color w1 = playout(b1, Color::Black, a, cfg);
  const Color w2 = playout(b2, Color::Black, c, cfg);
  CHECK(w1 == w2);
  CHECK(a.state() == c.state());
}

TEST_CASE("playout moves are never eyelike for the mover") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Board b(5);
    // Random mid-game position from a short playout prefix.
    Color turn = Color::Black;
    for (int t = 0; t < 12; ++t) {
      play_random_move(b, turn, rng);
      turn = opponent(turn);
    }
    Board probe = b;
    const Move m = play_random_move(probe, turn, rng);
    if (!m.is_pass()) {
      CHECK_FALSE(b.is_eyelike(turn, m.idx));
    }
  }
}

TEST_CASE("near-terminal position: the two-eye move wins every playout") {
  const PlayerView view = near_terminal_white_view();
  const McConfig cfg = desk_config(5, 20);

  // Brute-force the candidate outcomes directly from determinized worlds.
  auto candidate_wins = [&](Move m, SplitMix64& rng) {
    int wins = 0;
    for (int t = 0; t < cfg.playouts_per_move; ++t) {
      Determinization det = view.determinize(rng, m.is_pass() ? -1 : m.idx);
      int passes = 0;
      if (!m.is_pass()) {
        if (det.board.play(Color::White, m, nullptr) != PlayStatus::Ok) continue;
      } else {
        passes = 1;
      }
      if (playout(std::move(det.board), Color::Black, rng, cfg, passes) == Color::White) {
        ++wins;
      }
    }
    return wins;
  };

  SplitMix64 oracle_rng(123);
  CHECK(candidate_wins(Move::point(0, 2, 5), oracle_rng) == cfg.playouts_per_move);
  CHECK(candidate_wins(Move::point(4, 0, 5), oracle_rng) == 0);  // suicide everywhere
  CHECK(candidate_wins(Move::point(4, 4, 5), oracle_rng) == 0);

  SplitMix64 rng(123);
  CHECK(choose_move(view, rng, cfg) == Move::point(0, 2, 5));
}

TEST_CASE("choose_move is deterministic in view, rng state and config") {
  PlayerView view(Color::Black, 5);
  view.on_accepted(Move::point(2, 2, 5), {});
  view.on_opponent_placed();
  view.on_opponent_placed();
  const McConfig cfg = desk_config(5, 8);
  SplitMix64 a(31), b(31);
  const Move m1 = choose_move(view, a, cfg);
  const Move m2 = choose_move(view, b, cfg);
  CHECK(m1 == m2);
  CHECK(a.state() == b.state());
}

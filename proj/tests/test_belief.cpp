#include "doctest.h"
#include "seedgo/belief.hpp"

using namespace seedgo;

namespace {

int count_cells(const Board& b, Cell c) {
  int n = 0;
  for (int p = 0; p < b.num_points(); ++p) n += b.at(p) == c;
  return n;
}

}  // namespace

TEST_CASE("illegal replies become known opponent points") {
  PlayerView view(Color::Black, 5);
  view.on_opponent_placed();
  view.on_illegal(Move::point(3, 3, 5));
  CHECK(view.known_opponent_at(3 * 5 + 3));
  CHECK(view.illegal_this_turn(3 * 5 + 3));
  CHECK(view.known_opponent_count() == 1);
}

TEST_CASE("own capture of a known point removes it and decrements the count") {
  PlayerView view(Color::Black, 5);
  view.on_opponent_placed();
  view.on_opponent_placed();
  view.on_illegal(Move::point(0, 1, 5));
  CHECK(view.opponent_stone_count() == 2);
  // Our accepted move captured (0,1).
  view.on_accepted(Move::point(1, 1, 5), {static_cast<int16_t>(1)});
  CHECK_FALSE(view.known_opponent_at(1));
  CHECK(view.known_opponent_count() == 0);
  CHECK(view.opponent_stone_count() == 1);
  CHECK_FALSE(view.illegal_this_turn(1));  // cleared on acceptance
}

TEST_CASE("opponent placement increments the stone count") {
  PlayerView view(Color::White, 5);
  CHECK(view.opponent_stone_count() == 0);
  view.on_opponent_placed();
  CHECK(view.opponent_stone_count() == 1);
  view.on_opponent_passed();
  CHECK(view.opponent_stone_count() == 1);
}

TEST_CASE("inconsistent capture notifications raise a desync error") {
  PlayerView view(Color::Black, 5);
  CHECK_THROWS_AS(view.on_own_captured({static_cast<int16_t>(4)}), DesyncError);
  view.on_accepted(Move::point(0, 0, 5), {});
  CHECK_THROWS_AS(view.on_accepted(Move::point(0, 0, 5), {}), DesyncError);
}

TEST_CASE("determinize satisfies the stone-count constraint") {
  PlayerView view(Color::Black, 5);
  view.on_accepted(Move::point(2, 2, 5), {});
  SplitMix64 rng(11);

  SUBCASE("nothing hidden") {
    Determinization d = view.determinize(rng);
    CHECK(d.board == view.view_board());
    CHECK_FALSE(d.relaxed);
  }

  SUBCASE("hidden stones are placed, including the known point") {
    view.on_opponent_placed();
    view.on_opponent_placed();
    view.on_opponent_placed();
    view.on_illegal(Move::point(0, 0, 5));
    Determinization d = view.determinize(rng);
    CHECK(count_cells(d.board, Cell::White) == 3);
    CHECK(d.board.at(0, 0) == Cell::White);   // every known point is honored
    CHECK(d.board.at(2, 2) == Cell::Black);   // own stones verbatim
    CHECK_FALSE(d.relaxed);
  }

  SUBCASE("excluded point stays empty") {
    for (int t = 0; t < 10; ++t) view.on_opponent_placed();
    for (int trial = 0; trial < 50; ++trial) {
      Determinization d = view.determinize(rng, /*exclude=*/13);
      CHECK(d.board.at(13) == Cell::Empty);
      CHECK(count_cells(d.board, Cell::White) == 10);
    }
  }
}

TEST_CASE("determinize is a pure function of view and rng state") {
  PlayerView view(Color::Black, 5);
  view.on_accepted(Move::point(1, 1, 5), {});
  for (int t = 0; t < 5; ++t) view.on_opponent_placed();

  SplitMix64 a(77), b(77);
  const Determinization da = view.determinize(a);
  const Determinization db = view.determinize(b);
  CHECK(da.board == db.board);
  CHECK(a.state() == b.state());

  // Different states generally give different hypotheses.
  SplitMix64 c(78);
  bool any_different = false;
  for (int t = 0; t < 8 && !any_different; ++t) {
    any_different = !(view.determinize(c).board == da.board);
  }
  CHECK(any_different);
}

TEST_CASE("zero-liberty hypotheses are resampled, then relaxed") {
  // Board fully black except the center: the only candidate placement is
  // zero-liberty, so resampling can never succeed and the relaxation path
  // deletes the dead hypothetical stone.
  PlayerView view(Color::Black, 5);
  for (int p = 0; p < 25; ++p) {
    if (p != 12) view.on_accepted(Move::point(p), {});
  }
  view.on_opponent_placed();
  SplitMix64 rng(3);
  const Determinization d = view.determinize(rng);
  CHECK(d.relaxed);
  CHECK(count_cells(d.board, Cell::White) == 0);
  CHECK(count_cells(d.board, Cell::Black) == 24);
}

TEST_CASE("more hidden stones than empty points places as many as possible") {
  PlayerView view(Color::White, 3);
  for (int p = 0; p < 8; ++p) view.on_accepted(Move::point(p), {});
  for (int t = 0; t < 5; ++t) view.on_opponent_placed();
  SplitMix64 rng(9);
  const Determinization d = view.determinize(rng);
  // One empty point exists; it is either filled (if viable) or relaxed away.
  CHECK(count_cells(d.board, Cell::Black) <= 1);
  CHECK(count_cells(d.board, Cell::White) == 8);
}

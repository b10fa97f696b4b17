#include <vector>

#include "doctest.h"
#include "seedgo/board.hpp"
#include "seedgo/fixtures.hpp"
#include "seedgo/mc_player.hpp"
#include "seedgo/rng.hpp"

using namespace seedgo;

TEST_CASE("stone placement on an empty board") {
  Board b(5);
  std::vector<int16_t> caps;
  CHECK(b.play(Color::Black, Move::point(2, 2, 5), &caps) == PlayStatus::Ok);
  CHECK(caps.empty());
  CHECK(b.at(2, 2) == Cell::Black);
}

TEST_CASE("corner capture with both liberties filled") {
  Board b = Board::from_text("O....\n"
                             "X....\n"
                             ".....\n"
                             ".....\n"
                             ".....\n");
  std::vector<int16_t> caps;
  CHECK(b.play(Color::Black, Move::point(0, 1, 5), &caps) == PlayStatus::Ok);
  CHECK(caps == std::vector<int16_t>{0});
  CHECK(b.at(0, 0) == Cell::Empty);
}

TEST_CASE("suicide is rejected and leaves the board unchanged") {
  const Board before = Board::from_text(".X...\n"
                                        "X....\n"
                                        ".....\n"
                                        ".....\n"
                                        ".....\n");
  const ApplyResult r = apply_move(before, Color::White, Move::point(0, 0, 5));
  CHECK(r.status == PlayStatus::Suicide);
  CHECK(r.board == before);
  CHECK(r.captured.empty());
}

TEST_CASE("apply_move is pure") {
  const Board before = Board::from_text("O....\n"
                                        "X....\n"
                                        ".....\n"
                                        ".....\n"
                                        ".....\n");
  const ApplyResult r1 = apply_move(before, Color::Black, Move::point(0, 1, 5));
  const ApplyResult r2 = apply_move(before, Color::Black, Move::point(0, 1, 5));
  CHECK(r1.status == PlayStatus::Ok);
  CHECK(r1.board == r2.board);
  CHECK(r1.captured == r2.captured);
  CHECK(before.at(0, 0) == Cell::White);  // input untouched
}

TEST_CASE("area scoring matches the definition") {
  CHECK(Board(5).area_score().black == 0);
  CHECK(Board(5).area_score().white == 0);
  CHECK(Board(5).area_score().neutral == 25);

  Board single(5);
  single.set_cell(12, Cell::Black);
  const Score s1 = single.area_score();
  CHECK(s1.black == 25);
  CHECK(s1.white == 0);

  Board two(5);
  two.set_cell(0, Cell::Black);
  two.set_cell(24, Cell::White);
  const Score s2 = two.area_score();
  CHECK(s2.black == 1);
  CHECK(s2.white == 1);
  CHECK(s2.neutral == 23);
}

TEST_CASE("eyelike definition") {
  const Board b = Board::from_text(".X...\n"
                                   "X.X..\n"
                                   ".X...\n"
                                   ".....\n"
                                   ".....\n");
  CHECK(b.is_eyelike(Color::Black, 1 * 5 + 1));
  CHECK_FALSE(b.is_eyelike(Color::White, 1 * 5 + 1));
  CHECK_FALSE(b.is_eyelike(Color::Black, 2 * 5 + 2));  // empty orthogonal neighbor

  const Board corner = Board::from_text(".X...\n"
                                        "XO...\n"
                                        ".....\n"
                                        ".....\n"
                                        ".....\n");
  CHECK_FALSE(corner.is_eyelike(Color::Black, 0));  // corner: no opponent diagonals
}

TEST_CASE("builtin rules fixtures all pass") {
  const auto results = run_rules_fixtures(builtin_rules_fixtures());
  CHECK(results.size() == 30);
  for (const auto& r : results) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("fixture runner reports corrupted fixtures by name") {
  const char* corrupted =
      "fixture bogus-capture\n"
      "size 5\n"
      "O....\n"
      "X....\n"
      ".....\n"
      ".....\n"
      ".....\n"
      "play B (0,1) ok cap=[]\n"  // wrong: the capture list is not empty
      "end\n";
  const auto results = run_rules_fixtures(corrupted);
  REQUIRE(results.size() == 1);
  CHECK(results[0].name == "bogus-capture");
  CHECK_FALSE(results[0].pass);
  CHECK(!results[0].detail.empty());
}

TEST_CASE("random playout traces keep every chain alive and conserve area") {
  SplitMix64 rng(20240809);
  for (int game = 0; game < 30; ++game) {
    const int size = game % 2 == 0 ? 5 : 7;
    Board b(size);
    Color turn = Color::Black;
    int passes = 0;
    int moves = 0;
    while (passes < 2 && moves < 3 * size * size) {
      const Move m = play_random_move(b, turn, rng);
      passes = m.is_pass() ? passes + 1 : 0;
      turn = opponent(turn);
      ++moves;
      CHECK_FALSE(b.has_zero_liberty_chain());
      const Score s = b.area_score();
      CHECK(s.black + s.white + s.neutral == size * size);
    }
  }
}

TEST_CASE("board text round-trip") {
  const char* text =
      "X...O\n"
      ".....\n"
      "..X..\n"
      ".....\n"
      "O...X\n";
  CHECK(Board::from_text(text).to_text() == text);
}

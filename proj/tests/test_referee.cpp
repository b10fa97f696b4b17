#include "doctest.h"
#include "seedgo/referee.hpp"

using namespace seedgo;

TEST_CASE("legal proposal is accepted and the turn passes") {
  Referee ref(5, 7.5, 100);
  const RefereeReply r = ref.propose(Color::Black, Move::point(2, 2, 5));
  CHECK(r.kind == ReplyKind::Accepted);
  CHECK(r.captured.empty());
  CHECK(ref.to_move() == Color::White);
}

TEST_CASE("proposal on a hidden stone is Illegal and the mover retries") {
  Referee ref(5, 7.5, 100);
  ref.propose(Color::Black, Move::point(0, 0, 5));
  ref.propose(Color::White, Move::point(1, 1, 5));
  const RefereeReply r = ref.propose(Color::Black, Move::point(1, 1, 5));
  CHECK(r.kind == ReplyKind::Illegal);
  CHECK(ref.to_move() == Color::Black);
  CHECK(ref.reference_board().at(1, 1) == Cell::White);  // unchanged
}

TEST_CASE("two consecutive passes end the game with a scored result") {
  Referee ref(5, 7.5, 100);
  ref.propose(Color::Black, Move::point(2, 2, 5));
  ref.propose(Color::White, Move::pass());
  const RefereeReply r = ref.propose(Color::Black, Move::pass());
  CHECK(r.kind == ReplyKind::GameOver);
  CHECK(r.score.black == 25);
  CHECK(r.score.white == 0);
  CHECK(r.winner == Color::Black);
  CHECK(ref.game_over());
}

TEST_CASE("result arithmetic vs komi") {
  CHECK(referee_result(Score{20, 5, 0}, 7.5) == Color::Black);   // margin 15
  CHECK(referee_result(Score{0, 0, 25}, 7.5) == Color::White);   // komi decides
  CHECK(referee_result(Score{16, 9, 0}, 7.5) == Color::White);   // margin 7 < 7.5
}

TEST_CASE("proposing out of turn or after game end throws") {
  Referee ref(5, 7.5, 100);
  CHECK_THROWS_AS(ref.propose(Color::White, Move::pass()), std::logic_error);
  ref.propose(Color::Black, Move::pass());
  ref.propose(Color::White, Move::pass());
  CHECK(ref.game_over());
  CHECK_THROWS_AS(ref.propose(Color::Black, Move::pass()), std::logic_error);
}

TEST_CASE("move cap forces termination and is recorded") {
  Referee ref(5, 7.5, 4);
  ref.propose(Color::Black, Move::point(0, 0, 5));
  ref.propose(Color::White, Move::point(4, 4, 5));
  ref.propose(Color::Black, Move::point(0, 1, 5));
  const RefereeReply r = ref.propose(Color::White, Move::point(4, 3, 5));
  CHECK(r.kind == ReplyKind::GameOver);
  CHECK(ref.move_cap_hit());
  CHECK(ref.transcript().find("MOVECAP") != std::string::npos);
}

TEST_CASE("transcript golden file and replay") {
  Referee ref(5, 7.5, 100);
  ref.propose(Color::Black, Move::point(0, 0, 5));   // B corner
  ref.propose(Color::White, Move::point(1, 0, 5));   // W below
  ref.propose(Color::Black, Move::point(1, 0, 5));   // occupied -> ILLEGAL
  ref.propose(Color::Black, Move::point(1, 1, 5));
  ref.propose(Color::White, Move::point(0, 1, 5));   // captures B (0,0)
  ref.propose(Color::Black, Move::pass());
  ref.propose(Color::White, Move::pass());

  const char* golden =
      "B (0,0) OK cap=[]\n"
      "W (1,0) OK cap=[]\n"
      "B (1,0) ILLEGAL\n"
      "B (1,1) OK cap=[]\n"
      "W (0,1) OK cap=[(0,0)]\n"
      "B pass OK\n"
      "W pass OK\n"
      "RESULT W+9.5\n";
  CHECK(ref.transcript() == golden);

  // Final position: W (0,1),(1,0), B (1,1). The emptied corner (0,0) borders
  // only White, the big region borders both colors, so area is B 1 / W 3 and
  // the margin is 1 - 3 - 7.5 = -9.5.
  const Board replayed = replay_transcript(ref.transcript(), 5);
  CHECK(replayed == ref.reference_board());
}

TEST_CASE("every game terminates within the move cap") {
  // Exhaustive bound: the referee counts accepted moves only, and ends the
  // game as soon as the cap is reached.
  Referee ref(3, 7.5, 36);
  int accepted = 0;
  Color turn = Color::Black;
  // Pathological players that always pass-then-place alternately.
  while (!ref.game_over()) {
    Move m = accepted % 3 == 2 ? Move::pass() : Move::point(accepted % 9 / 3, accepted % 3, 3);
    const RefereeReply r = ref.propose(turn, m);
    if (r.kind != ReplyKind::Illegal) {
      ++accepted;
      turn = opponent(turn);
    } else {
      // fall back to a pass to guarantee progress
      const RefereeReply p = ref.propose(turn, Move::pass());
      if (p.kind != ReplyKind::Illegal) {
        ++accepted;
        turn = opponent(turn);
      }
    }
  }
  CHECK(ref.total_accepted_moves() <= 36);
}

#pragma once

#include <string>
#include <vector>

#include "seedgo/board.hpp"

namespace seedgo {

enum class ReplyKind : uint8_t { Accepted, Illegal, GameOver };

struct RefereeReply {
  ReplyKind kind = ReplyKind::Illegal;
  std::vector<int16_t> captured;  // points the mover removed (Accepted only)
  Score score;                    // GameOver only
  Color winner = Color::Black;    // GameOver only
};

inline int default_move_cap(int board_size) { return 4 * board_size * board_size; }

// The referee owns the reference board, adjudicates move proposals, and
// records the game transcript. Players never see the reference board; they
// learn about it only through Illegal replies and capture notifications,
// which the game driver relays.
class Referee {
 public:
  Referee(int board_size, double komi, int move_cap);

  // Adjudicates a proposal by the player whose turn it is. Proposing out of
  // turn or after the game ended is a caller bug and throws.
  //
  // A legal move is applied to the reference board and the turn passes; the
  // reply carries the points the mover captured. An illegal move leaves the
  // board unchanged and the same player proposes again. The game ends on two
  // consecutive passes or when the accepted-move cap is reached; the
  // game-ending proposal is answered with GameOver.
  RefereeReply propose(Color color, Move move);

  bool game_over() const { return over_; }
  Color to_move() const { return to_move_; }
  double komi() const { return komi_; }
  const Board& reference_board() const { return board_; }
  int accepted_moves(Color c) const { return accepted_[static_cast<int>(c)]; }
  int total_accepted_moves() const { return accepted_[0] + accepted_[1]; }
  bool move_cap_hit() const { return cap_hit_; }
  Score final_score() const { return final_score_; }
  Color winner() const { return winner_; }

  // One event per line: `B (2,2) OK cap=[]`, `W (1,3) ILLEGAL`, `B pass OK`,
  // `MOVECAP` when the cap forced termination, terminated by `RESULT B+12.5`.
  const std::string& transcript() const { return transcript_; }

 private:
  void finish();
  void append_move_line(Color color, Move move, bool ok,
                        const std::vector<int16_t>* captured);

  Board board_;
  Color to_move_ = Color::Black;
  int consecutive_passes_ = 0;
  int accepted_[2] = {0, 0};
  int move_cap_;
  double komi_;
  bool over_ = false;
  bool cap_hit_ = false;
  Score final_score_;
  Color winner_ = Color::Black;
  std::string transcript_;
};

// Winner once the game is over; Black wins iff black - white > komi.
Color referee_result(const Score& score, double komi);

// Replays the reference-board side of a transcript (accepted moves only) and
// returns the final board. Used by golden-file tests and tooling.
Board replay_transcript(const std::string& transcript, int board_size);

std::string format_point(int idx, int size);

}  // namespace seedgo

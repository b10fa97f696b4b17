#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "seedgo/board.hpp"
#include "seedgo/rng.hpp"

namespace seedgo {

// Raised when an observation event contradicts the view, e.g. a capture
// notification for a stone the player never had. Indicates a referee/player
// desync and is never scored silently.
class DesyncError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Determinization {
  Board board;
  // True when no liberty-consistent filling was found within the resample
  // budget and zero-liberty opponent chains were deleted instead.
  bool relaxed = false;
};

// One player's information set: its own stones (exact, maintained through
// capture notifications), opponent stones learned from Illegal replies, and
// the count of opponent stones on the board.
class PlayerView {
 public:
  static constexpr int kResampleAttempts = 50;

  PlayerView(Color color, int board_size);

  Color color() const { return color_; }
  // Own stones plus known opponent stones; all other points are unknown.
  const Board& view_board() const { return view_; }
  int opponent_stone_count() const { return opponent_stones_; }
  int known_opponent_count() const { return known_opponent_; }
  bool known_opponent_at(int idx) const {
    return view_.at(idx) == cell_of(opponent(color_));
  }
  bool own_at(int idx) const { return view_.at(idx) == cell_of(color_); }
  bool illegal_this_turn(int idx) const { return illegal_turn_[idx] != 0; }

  // Observation events, in the order the referee/driver delivers them.
  void on_illegal(Move move);
  void on_accepted(Move move, const std::vector<int16_t>& captured);
  void on_opponent_placed();
  void on_opponent_passed();
  void on_own_captured(const std::vector<int16_t>& points);

  // Samples a full-board hypothesis consistent with the view: own stones and
  // known opponent stones verbatim, plus uniformly random hidden opponent
  // stones until opponent_stone_count opponent stones exist. `exclude` (a
  // point index, or -1) is left empty so a candidate move can be tried there.
  // Hypotheses where some chain has zero liberties are resampled up to
  // kResampleAttempts times, then accepted after deleting zero-liberty
  // opponent chains.
  Determinization determinize(SplitMix64& rng, int exclude = -1) const;

 private:
  Color color_;
  Board view_;
  int opponent_stones_ = 0;
  int known_opponent_ = 0;
  std::array<uint8_t, kMaxPoints> illegal_turn_{};
};

}  // namespace seedgo

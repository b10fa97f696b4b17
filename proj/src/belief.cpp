#include "seedgo/belief.hpp"

namespace seedgo {

PlayerView::PlayerView(Color color, int board_size)
    : color_(color), view_(board_size) {}

void PlayerView::on_illegal(Move move) {
  if (move.is_pass()) throw DesyncError("pass reported illegal");
  const int p = move.idx;
  if (own_at(p)) throw DesyncError("own point reported illegal");
  // Attributed to an opponent stone at that point. The rejection could also
  // stem from ko or suicide on the reference board; the attribution error is
  // rare on sparse boards and self-corrects when the point is captured.
  if (!known_opponent_at(p)) {
    view_.set_cell(p, cell_of(opponent(color_)));
    ++known_opponent_;
  }
  illegal_turn_[p] = 1;
}

void PlayerView::on_accepted(Move move, const std::vector<int16_t>& captured) {
  illegal_turn_.fill(0);
  if (!move.is_pass()) {
    if (view_.at(move.idx) != Cell::Empty) {
      throw DesyncError("accepted move on a non-empty view point");
    }
    view_.set_cell(move.idx, cell_of(color_));
  }
  for (int16_t p : captured) {
    if (own_at(p)) throw DesyncError("captured point held an own stone");
    if (known_opponent_at(p)) {
      view_.set_cell(p, Cell::Empty);
      --known_opponent_;
    }
    --opponent_stones_;
  }
  // known_opponent_ may transiently exceed opponent_stones_ when an Illegal
  // reply caused by ko or suicide was misattributed to an occupying stone;
  // determinize treats that as "nothing hidden". A negative stone count,
  // however, means the referee reported a capture that never happened.
  if (opponent_stones_ < 0) {
    throw DesyncError("opponent stone accounting went negative");
  }
}

void PlayerView::on_opponent_placed() { ++opponent_stones_; }

void PlayerView::on_opponent_passed() {}

void PlayerView::on_own_captured(const std::vector<int16_t>& points) {
  for (int16_t p : points) {
    if (!own_at(p)) throw DesyncError("notified capture of a stone we do not have");
    view_.set_cell(p, Cell::Empty);
  }
}

Determinization PlayerView::determinize(SplitMix64& rng, int exclude) const {
  const int total = view_.num_points();
  const int hidden = opponent_stones_ - known_opponent_;
  const Cell opp = cell_of(opponent(color_));

  // Candidate points for hidden opponent stones.
  std::array<int16_t, kMaxPoints> candidates;
  int n_candidates = 0;
  for (int p = 0; p < total; ++p) {
    if (view_.at(p) == Cell::Empty && p != exclude) {
      candidates[n_candidates++] = static_cast<int16_t>(p);
    }
  }
  int to_place = hidden < n_candidates ? hidden : n_candidates;
  if (to_place < 0) to_place = 0;

  Determinization result{view_, false};
  for (int attempt = 0; attempt <= kResampleAttempts; ++attempt) {
    result.board = view_;
    result.board.clear_ko();
    // Partial Fisher-Yates: the first to_place slots become the placements.
    for (int k = 0; k < to_place; ++k) {
      const int j = k + static_cast<int>(rng.uniform_below(
                            static_cast<uint64_t>(n_candidates - k)));
      std::swap(candidates[k], candidates[j]);
      result.board.set_cell(candidates[k], opp);
    }
    if (!result.board.has_zero_liberty_chain()) return result;
  }

  // Resample budget exhausted: accept after deleting dead opponent chains.
  result.board.remove_zero_liberty_chains(opponent(color_));
  result.relaxed = true;
  return result;
}

}  // namespace seedgo

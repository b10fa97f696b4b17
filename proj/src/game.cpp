#include "seedgo/game.hpp"

#include <cstdio>

#include "seedgo/belief.hpp"
#include "seedgo/referee.hpp"
#include "seedgo/rng.hpp"

namespace seedgo {

namespace {

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

uint64_t config_fingerprint(const MatchupConfig& config) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "board=%d komi=%.1f playouts=%d playout_cap=%d move_cap=%d "
                "k=%d base_seed=%llu heldout_offset=%llu",
                config.board_size, config.komi, config.playouts_per_move,
                config.mc_config().playout_move_cap, config.effective_move_cap(),
                config.k, static_cast<unsigned long long>(config.base_seed),
                static_cast<unsigned long long>(config.heldout_offset));
  return fnv1a64(buf);
}

std::string fingerprint_hex(uint64_t fp) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fp));
  return buf;
}

uint64_t derive_player_seed(uint64_t base_seed, uint64_t index, Color color) {
  const uint64_t tag = (index << 1) | (color == Color::White ? 1u : 0u);
  SplitMix64 mixer(base_seed ^ tag);
  return mixer.next_u64();
}

namespace {

struct Player {
  Player(Color c, int board_size, uint64_t seed)
      : view(c, board_size), rng(seed) {}
  PlayerView view;
  SplitMix64 rng;
  std::vector<ObsEvent>* events = nullptr;

  void log(ObsEvent::Kind kind, Move move = Move::pass(),
           std::vector<int16_t> points = {}) {
    if (events) events->push_back(ObsEvent{kind, move, std::move(points)});
  }
};

}  // namespace

GameRecord play_seeded_game(uint64_t i, uint64_t j, const MatchupConfig& config,
                            std::vector<ObsEvent>* black_events,
                            std::vector<ObsEvent>* white_events) {
  const McConfig mc = config.mc_config();
  Referee referee(config.board_size, config.komi, config.effective_move_cap());

  Player black(Color::Black, config.board_size,
               derive_player_seed(config.base_seed, i, Color::Black));
  Player white(Color::White, config.board_size,
               derive_player_seed(config.base_seed, j, Color::White));
  black.events = black_events;
  white.events = white_events;

  while (!referee.game_over()) {
    Player& mover = referee.to_move() == Color::Black ? black : white;
    Player& victim = referee.to_move() == Color::Black ? white : black;
    const Color color = referee.to_move();

    // Propose until the referee accepts (or ends the game). Each rejection
    // is new intelligence about the hidden board.
    for (;;) {
      const Move move = choose_move(mover.view, mover.rng, mc);
      const RefereeReply reply = referee.propose(color, move);
      if (reply.kind == ReplyKind::Illegal) {
        mover.view.on_illegal(move);
        mover.log(ObsEvent::IllegalReply, move);
        continue;
      }
      // Accepted (possibly game-ending). Keep both views current so the
      // desync checks run on every event.
      mover.view.on_accepted(move, reply.captured);
      mover.log(ObsEvent::AcceptedReply, move, reply.captured);
      if (move.is_pass()) {
        victim.view.on_opponent_passed();
        victim.log(ObsEvent::OpponentPassed);
      } else {
        victim.view.on_opponent_placed();
        victim.log(ObsEvent::OpponentPlaced);
        if (!reply.captured.empty()) {
          victim.view.on_own_captured(reply.captured);
          victim.log(ObsEvent::OwnCaptured, Move::pass(), reply.captured);
        }
      }
      break;
    }
  }

  black.log(ObsEvent::GameEnd);
  white.log(ObsEvent::GameEnd);

  GameRecord record;
  record.black_wins = referee.winner() == Color::Black ? 1 : 0;
  record.score = referee.final_score();
  record.move_cap_hit = referee.move_cap_hit();
  record.transcript = referee.transcript();
  return record;
}

}  // namespace seedgo

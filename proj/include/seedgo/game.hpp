#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seedgo/board.hpp"
#include "seedgo/mc_player.hpp"

namespace seedgo {

// Everything that determines the outcome of a seeded matchup. Two runs with
// equal configs produce bit-identical games.
struct MatchupConfig {
  int board_size = 5;
  double komi = 7.5;
  int playouts_per_move = 50;
  int playout_move_cap = 0;  // 0 = 3 * size^2
  int move_cap = 0;          // 0 = 4 * size^2
  int k = 2;
  uint64_t base_seed = 1;
  uint64_t heldout_offset = 1ULL << 20;

  McConfig mc_config() const {
    McConfig mc;
    mc.playouts_per_move = playouts_per_move;
    mc.playout_move_cap =
        playout_move_cap > 0 ? playout_move_cap : default_playout_cap(board_size);
    mc.komi = komi;
    return mc;
  }
  int effective_move_cap() const {
    return move_cap > 0 ? move_cap : 4 * board_size * board_size;
  }
};

// 64-bit hash of every outcome-relevant config field; stamped into matrix
// files, journals and manifests so mismatched artifacts are never mixed.
uint64_t config_fingerprint(const MatchupConfig& config);
std::string fingerprint_hex(uint64_t fp);

// Maps (base seed, seed index, color) to the player's PRNG seed, so that
// Black seed i and White seed i are independent players.
uint64_t derive_player_seed(uint64_t base_seed, uint64_t index, Color color);

// Observation events as delivered to one player. Everything a player ever
// learns about the game goes through this list.
struct ObsEvent {
  enum Kind : uint8_t {
    IllegalReply,     // own proposal rejected (move)
    AcceptedReply,    // own move accepted (move, points = stones we captured)
    OpponentPlaced,   // opponent placed a stone somewhere unknown
    OpponentPassed,
    OwnCaptured,      // points = our stones removed by the opponent's move
    GameEnd,
  };
  Kind kind;
  Move move = Move::pass();
  std::vector<int16_t> points;
};

struct GameRecord {
  int black_wins = 0;  // the matrix bit: 1 iff Black won
  Score score;
  bool move_cap_hit = false;
  std::string transcript;
};

// Plays a full phantom game between mc-player(derive(base, i, Black)) and
// mc-player(derive(base, j, White)) under one referee. Deterministic in
// (i, j, config). Optional sinks collect the per-player observation events.
GameRecord play_seeded_game(uint64_t i, uint64_t j, const MatchupConfig& config,
                            std::vector<ObsEvent>* black_events = nullptr,
                            std::vector<ObsEvent>* white_events = nullptr);

}  // namespace seedgo

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seedgo {

enum class Color : uint8_t { Black = 0, White = 1 };

inline Color opponent(Color c) {
  return c == Color::Black ? Color::White : Color::Black;
}

inline char color_char(Color c) { return c == Color::Black ? 'B' : 'W'; }

enum class Cell : uint8_t { Empty = 0, Black = 1, White = 2 };

inline Cell cell_of(Color c) {
  return c == Color::Black ? Cell::Black : Cell::White;
}

constexpr int kMaxBoardSize = 19;
constexpr int kMaxPoints = kMaxBoardSize * kMaxBoardSize;

// A move is either a pass or a flat point index row * size + col.
struct Move {
  int16_t idx = -1;

  static Move pass() { return Move{-1}; }
  static Move point(int idx) { return Move{static_cast<int16_t>(idx)}; }
  static Move point(int row, int col, int size) {
    return Move{static_cast<int16_t>(row * size + col)};
  }
  bool is_pass() const { return idx < 0; }
  int row(int size) const { return idx / size; }
  int col(int size) const { return idx % size; }

  friend bool operator==(const Move&, const Move&) = default;
};

enum class PlayStatus : uint8_t { Ok, Occupied, Suicide, Ko };

// Chinese area score: stones plus empty regions bordered exclusively by one
// color. Regions touching both colors, or boards with no stones, are neutral.
struct Score {
  int black = 0;
  int white = 0;
  int neutral = 0;
};

// Square Go board with suicide prohibition and simple ko. Value semantics:
// copying a board is cheap and playouts mutate their own copy.
class Board {
 public:
  explicit Board(int size);

  int size() const { return size_; }
  int num_points() const { return size_ * size_; }
  Cell at(int idx) const { return cells_[idx]; }
  Cell at(int row, int col) const { return cells_[row * size_ + col]; }
  int ko_point() const { return ko_; }

  // Places a stone without any rules processing. For building test positions
  // and belief-state boards; never used on refereed game boards.
  void set_cell(int idx, Cell c) { cells_[idx] = c; }
  void clear_ko() { ko_ = -1; }

  // Applies a move in place. On Ok the stone is placed, opponent chains left
  // without liberties are removed, and ko is updated. On any illegal status
  // the board is unchanged. If `captured` is non-null it is cleared and
  // filled with the removed points in ascending order.
  PlayStatus play(Color color, Move move, std::vector<int16_t>* captured = nullptr);

  bool is_eyelike(Color color, int idx) const;

  Score area_score() const;

  // True if any chain on the board has zero liberties (legal positions never
  // do; belief-state hypotheses can).
  bool has_zero_liberty_chain() const;
  // Removes every zero-liberty chain of `color`, repeating until none remain.
  // Returns the number of stones removed.
  int remove_zero_liberty_chains(Color color);

  int neighbors(int idx, int out[4]) const;

  // Text diagram, one row per line: '.' empty, 'X' black, 'O' white.
  static Board from_text(std::string_view text);
  std::string to_text() const;

  friend bool operator==(const Board& a, const Board& b) {
    if (a.size_ != b.size_ || a.ko_ != b.ko_) return false;
    for (int p = 0; p < a.num_points(); ++p) {
      if (a.cells_[p] != b.cells_[p]) return false;
    }
    return true;
  }

 private:
  bool chain_has_liberty(int start) const;
  int remove_chain(int start, std::vector<int16_t>* captured);

  int16_t size_;
  int16_t ko_;  // -1 when no ko point
  std::array<Cell, kMaxPoints> cells_;
};

struct ApplyResult {
  PlayStatus status = PlayStatus::Ok;
  Board board;
  std::vector<int16_t> captured;
};

// Pure-function form of Board::play: the input board is never modified.
ApplyResult apply_move(const Board& board, Color color, Move move);

// Winner under Chinese scoring: Black wins iff black - white > komi.
// Half-integer komi means there is never a draw.
Color score_winner(const Score& s, double komi);

}  // namespace seedgo

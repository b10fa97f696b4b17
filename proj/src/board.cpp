#include "seedgo/board.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace seedgo {

Board::Board(int size) : size_(static_cast<int16_t>(size)), ko_(-1) {
  if (size < 2 || size > kMaxBoardSize) {
    throw std::invalid_argument("board size must be in [2, 19]");
  }
  cells_.fill(Cell::Empty);
}

int Board::neighbors(int idx, int out[4]) const {
  const int r = idx / size_;
  const int c = idx % size_;
  int n = 0;
  if (r > 0) out[n++] = idx - size_;
  if (r < size_ - 1) out[n++] = idx + size_;
  if (c > 0) out[n++] = idx - 1;
  if (c < size_ - 1) out[n++] = idx + 1;
  return n;
}

namespace {

// Scratch for flood fills; boards never exceed kMaxPoints cells.
struct FillScratch {
  std::array<int16_t, kMaxPoints> stack;
  std::array<uint32_t, kMaxPoints> mark{};
  uint32_t stamp = 0;
};

thread_local FillScratch tls_fill;

}  // namespace

bool Board::chain_has_liberty(int start) const {
  FillScratch& s = tls_fill;
  const uint32_t stamp = ++s.stamp;
  const Cell own = cells_[start];
  int top = 0;
  s.stack[top++] = static_cast<int16_t>(start);
  s.mark[start] = stamp;
  int nb[4];
  while (top > 0) {
    const int p = s.stack[--top];
    const int n = neighbors(p, nb);
    for (int k = 0; k < n; ++k) {
      const int q = nb[k];
      if (cells_[q] == Cell::Empty) return true;
      if (cells_[q] == own && s.mark[q] != stamp) {
        s.mark[q] = stamp;
        s.stack[top++] = static_cast<int16_t>(q);
      }
    }
  }
  return false;
}

int Board::remove_chain(int start, std::vector<int16_t>* captured) {
  FillScratch& s = tls_fill;
  const Cell own = cells_[start];
  int top = 0;
  s.stack[top++] = static_cast<int16_t>(start);
  cells_[start] = Cell::Empty;
  if (captured) captured->push_back(static_cast<int16_t>(start));
  int removed = 1;
  int nb[4];
  while (top > 0) {
    const int p = s.stack[--top];
    const int n = neighbors(p, nb);
    for (int k = 0; k < n; ++k) {
      const int q = nb[k];
      if (cells_[q] == own) {
        cells_[q] = Cell::Empty;
        if (captured) captured->push_back(static_cast<int16_t>(q));
        s.stack[top++] = static_cast<int16_t>(q);
        ++removed;
      }
    }
  }
  return removed;
}

PlayStatus Board::play(Color color, Move move, std::vector<int16_t>* captured) {
  if (captured) captured->clear();
  if (move.is_pass()) {
    ko_ = -1;
    return PlayStatus::Ok;
  }
  const int p = move.idx;
  assert(p >= 0 && p < num_points());
  if (cells_[p] != Cell::Empty) return PlayStatus::Occupied;
  if (p == ko_) return PlayStatus::Ko;

  const Cell own = cell_of(color);
  const Cell opp = cell_of(opponent(color));
  cells_[p] = own;

  int removed_total = 0;
  int removed_point = -1;
  int nb[4];
  const int n = neighbors(p, nb);
  for (int k = 0; k < n; ++k) {
    const int q = nb[k];
    if (cells_[q] == opp && !chain_has_liberty(q)) {
      removed_point = q;
      removed_total += remove_chain(q, captured);
    }
  }

  if (removed_total == 0 && !chain_has_liberty(p)) {
    cells_[p] = Cell::Empty;  // no captures and our own chain is dead
    return PlayStatus::Suicide;
  }

  // Simple ko: a lone stone that captured exactly one stone and whose only
  // liberty is the point it just emptied.
  ko_ = -1;
  if (removed_total == 1) {
    bool lone = true;
    int liberty_count = 0;
    int liberty = -1;
    for (int k = 0; k < n; ++k) {
      const int q = nb[k];
      if (cells_[q] == own) lone = false;
      if (cells_[q] == Cell::Empty) {
        ++liberty_count;
        liberty = q;
      }
    }
    if (lone && liberty_count == 1 && liberty == removed_point) {
      ko_ = static_cast<int16_t>(removed_point);
    }
  }

  if (captured && captured->size() > 1) {
    std::sort(captured->begin(), captured->end());
  }
  return PlayStatus::Ok;
}

bool Board::is_eyelike(Color color, int idx) const {
  if (cells_[idx] != Cell::Empty) return false;
  const Cell own = cell_of(color);
  const Cell opp = cell_of(opponent(color));
  int nb[4];
  const int n = neighbors(idx, nb);
  for (int k = 0; k < n; ++k) {
    if (cells_[nb[k]] != own) return false;
  }
  // Diagonals: an interior point tolerates one opponent diagonal, points on
  // the edge or corner tolerate none.
  const int r = idx / size_;
  const int c = idx % size_;
  int opp_diag = 0;
  int off_board = 0;
  for (int dr = -1; dr <= 1; dr += 2) {
    for (int dc = -1; dc <= 1; dc += 2) {
      const int rr = r + dr;
      const int cc = c + dc;
      if (rr < 0 || rr >= size_ || cc < 0 || cc >= size_) {
        ++off_board;
      } else if (cells_[rr * size_ + cc] == opp) {
        ++opp_diag;
      }
    }
  }
  return off_board > 0 ? opp_diag == 0 : opp_diag <= 1;
}

Score Board::area_score() const {
  Score s;
  FillScratch& fs = tls_fill;
  const uint32_t stamp = ++fs.stamp;
  const int total = num_points();
  int nb[4];
  for (int p = 0; p < total; ++p) {
    if (cells_[p] == Cell::Black) {
      ++s.black;
    } else if (cells_[p] == Cell::White) {
      ++s.white;
    } else if (fs.mark[p] != stamp) {
      // Flood the empty region and record which colors border it.
      int top = 0;
      fs.stack[top++] = static_cast<int16_t>(p);
      fs.mark[p] = stamp;
      int region = 0;
      bool touch_black = false;
      bool touch_white = false;
      while (top > 0) {
        const int q = fs.stack[--top];
        ++region;
        const int n = neighbors(q, nb);
        for (int k = 0; k < n; ++k) {
          const int t = nb[k];
          if (cells_[t] == Cell::Black) {
            touch_black = true;
          } else if (cells_[t] == Cell::White) {
            touch_white = true;
          } else if (fs.mark[t] != stamp) {
            fs.mark[t] = stamp;
            fs.stack[top++] = static_cast<int16_t>(t);
          }
        }
      }
      if (touch_black && !touch_white) {
        s.black += region;
      } else if (touch_white && !touch_black) {
        s.white += region;
      } else {
        s.neutral += region;
      }
    }
  }
  return s;
}

bool Board::has_zero_liberty_chain() const {
  const int total = num_points();
  for (int p = 0; p < total; ++p) {
    if (cells_[p] != Cell::Empty && !chain_has_liberty(p)) return true;
  }
  return false;
}

int Board::remove_zero_liberty_chains(Color color) {
  const Cell own = cell_of(color);
  int removed = 0;
  bool again = true;
  while (again) {
    again = false;
    const int total = num_points();
    for (int p = 0; p < total; ++p) {
      if (cells_[p] == own && !chain_has_liberty(p)) {
        removed += remove_chain(p, nullptr);
        again = true;
      }
    }
  }
  return removed;
}

Board Board::from_text(std::string_view text) {
  std::vector<std::string> rows;
  std::string row;
  for (char ch : text) {
    if (ch == '\n') {
      if (!row.empty()) rows.push_back(row);
      row.clear();
    } else if (ch != ' ' && ch != '\r') {
      row.push_back(ch);
    }
  }
  if (!row.empty()) rows.push_back(row);
  if (rows.empty()) throw std::invalid_argument("empty board diagram");
  const int size = static_cast<int>(rows.size());
  Board b(size);
  for (int r = 0; r < size; ++r) {
    if (static_cast<int>(rows[r].size()) != size) {
      throw std::invalid_argument("board diagram is not square");
    }
    for (int c = 0; c < size; ++c) {
      switch (rows[r][c]) {
        case '.': break;
        case 'X': b.set_cell(r * size + c, Cell::Black); break;
        case 'O': b.set_cell(r * size + c, Cell::White); break;
        default: throw std::invalid_argument("bad board diagram character");
      }
    }
  }
  return b;
}

std::string Board::to_text() const {
  std::string out;
  for (int r = 0; r < size_; ++r) {
    for (int c = 0; c < size_; ++c) {
      switch (cells_[r * size_ + c]) {
        case Cell::Empty: out.push_back('.'); break;
        case Cell::Black: out.push_back('X'); break;
        case Cell::White: out.push_back('O'); break;
      }
    }
    out.push_back('\n');
  }
  return out;
}

ApplyResult apply_move(const Board& board, Color color, Move move) {
  ApplyResult r{PlayStatus::Ok, board, {}};
  r.status = r.board.play(color, move, &r.captured);
  if (r.status != PlayStatus::Ok) {
    r.board = board;
    r.captured.clear();
  }
  return r;
}

Color score_winner(const Score& s, double komi) {
  return (s.black - s.white > komi) ? Color::Black : Color::White;
}

}  // namespace seedgo

#include "seedgo/fixtures.hpp"

#include <cstdio>
#include <optional>
#include <sstream>

#include "seedgo/board.hpp"

namespace seedgo {

namespace {

struct Parser {
  std::istringstream in;
  explicit Parser(std::string_view text) : in(std::string(text)) {}
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      return true;
    }
    return false;
  }
};

std::optional<PlayStatus> parse_status(const std::string& word) {
  if (word == "ok") return PlayStatus::Ok;
  if (word == "occupied") return PlayStatus::Occupied;
  if (word == "suicide") return PlayStatus::Suicide;
  if (word == "ko") return PlayStatus::Ko;
  return std::nullopt;
}

const char* status_name(PlayStatus s) {
  switch (s) {
    case PlayStatus::Ok: return "ok";
    case PlayStatus::Occupied: return "occupied";
    case PlayStatus::Suicide: return "suicide";
    case PlayStatus::Ko: return "ko";
  }
  return "?";
}

std::string points_text(const std::vector<int16_t>& pts, int size) {
  std::string out = "[";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ",";
    char buf[16];
    std::snprintf(buf, sizeof(buf), "(%d,%d)", pts[i] / size, pts[i] % size);
    out += buf;
  }
  return out + "]";
}

// Parses "[(r,c),(r,c)]" into sorted flat indices.
bool parse_points(const std::string& text, int size, std::vector<int16_t>* out) {
  out->clear();
  size_t pos = 0;
  if (pos >= text.size() || text[pos] != '[') return false;
  ++pos;
  while (pos < text.size() && text[pos] != ']') {
    int r = 0, c = 0, consumed = 0;
    if (std::sscanf(text.c_str() + pos, "(%d,%d)%n", &r, &c, &consumed) != 2) return false;
    out->push_back(static_cast<int16_t>(r * size + c));
    pos += consumed;
    if (pos < text.size() && text[pos] == ',') ++pos;
  }
  return pos < text.size() && text[pos] == ']';
}

}  // namespace

std::vector<FixtureResult> run_rules_fixtures(std::string_view script) {
  std::vector<FixtureResult> results;
  Parser parser(script);
  std::string line;

  while (parser.next(line)) {
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word != "fixture") {
      results.push_back({"<script>", false, "expected 'fixture', got: " + line});
      break;
    }
    FixtureResult res;
    ls >> res.name;
    if (res.name.empty()) res.name = "<unnamed>";
    res.pass = true;

    auto fail = [&](const std::string& detail) {
      if (res.pass) {
        res.pass = false;
        res.detail = detail;
      }
    };

    // Board header.
    std::optional<Board> board;
    if (!parser.next(line) || line.rfind("size ", 0) != 0) {
      fail("missing size line");
    } else {
      const int size = std::atoi(line.c_str() + 5);
      if (size < 2 || size > kMaxBoardSize) {
        fail("bad size");
      } else {
        std::string diagram;
        for (int r = 0; r < size; ++r) {
          if (!parser.next(line)) break;
          diagram += line + "\n";
        }
        try {
          board = Board::from_text(diagram);
        } catch (const std::exception& e) {
          fail(std::string("bad diagram: ") + e.what());
        }
      }
    }

    // Commands until `end`. Keep consuming lines even after a failure so the
    // parser stays aligned with fixture boundaries.
    while (parser.next(line) && line != "end") {
      if (!board) continue;
      const int size = board->size();
      std::istringstream cs(line);
      std::string cmd;
      cs >> cmd;
      if (cmd == "play") {
        std::string color_s, move_s, status_s, cap_s;
        cs >> color_s >> move_s >> status_s >> cap_s;
        const Color color = color_s == "B" ? Color::Black : Color::White;
        Move move = Move::pass();
        if (move_s != "pass") {
          int r = 0, c = 0;
          if (std::sscanf(move_s.c_str(), "(%d,%d)", &r, &c) != 2) {
            fail("bad move: " + line);
            continue;
          }
          move = Move::point(r, c, size);
        }
        const auto expected = parse_status(status_s);
        if (!expected) {
          fail("bad expected status: " + line);
          continue;
        }
        const Board before = *board;
        std::vector<int16_t> captured;
        const PlayStatus got = board->play(color, move, &captured);
        if (got != *expected) {
          fail(std::string("expected ") + status_name(*expected) + ", got " +
               status_name(got) + " for: " + line);
          *board = before;
          continue;
        }
        if (got != PlayStatus::Ok) {
          if (!(*board == before)) fail("illegal move modified the board: " + line);
          continue;
        }
        if (!cap_s.empty()) {
          std::vector<int16_t> expected_caps;
          if (cap_s.rfind("cap=", 0) != 0 ||
              !parse_points(cap_s.substr(4), size, &expected_caps)) {
            fail("bad cap list: " + line);
          } else if (captured != expected_caps) {
            fail("expected cap=" + points_text(expected_caps, size) + ", got " +
                 points_text(captured, size) + " for: " + line);
          }
        }
      } else if (cmd == "score") {
        std::string bs, ws;
        int black = -1, white = -1;
        cs >> bs >> black >> ws >> white;
        const Score s = board->area_score();
        if (s.black != black || s.white != white) {
          char buf[96];
          std::snprintf(buf, sizeof(buf), "expected B %d W %d, got B %d W %d", black,
                        white, s.black, s.white);
          fail(buf);
        }
        if (s.black + s.white + s.neutral != size * size) {
          fail("area conservation violated");
        }
      } else if (cmd == "eyelike") {
        std::string color_s, point_s, want_s;
        cs >> color_s >> point_s >> want_s;
        int r = 0, c = 0;
        if (std::sscanf(point_s.c_str(), "(%d,%d)", &r, &c) != 2) {
          fail("bad eyelike point: " + line);
          continue;
        }
        const bool got = board->is_eyelike(color_s == "B" ? Color::Black : Color::White,
                                           r * size + c);
        if (got != (want_s == "true")) {
          fail("eyelike mismatch for: " + line);
        }
      } else if (cmd == "ko") {
        std::string ko_s;
        cs >> ko_s;
        int expected_ko = -1;
        if (ko_s != "none") {
          int r = 0, c = 0;
          if (std::sscanf(ko_s.c_str(), "(%d,%d)", &r, &c) != 2) {
            fail("bad ko point: " + line);
            continue;
          }
          expected_ko = r * size + c;
        }
        if (board->ko_point() != expected_ko) fail("ko mismatch for: " + line);
      } else {
        fail("unknown command: " + line);
      }
    }
    results.push_back(res);
  }
  return results;
}

std::string_view builtin_rules_fixtures() {
  static const std::string kFixtures = R"(# Curated rules positions: captures, suicide, ko, eyes, Chinese scoring.

fixture place-center
size 5
.....
.....
.....
.....
.....
play B (2,2) ok cap=[]
score B 25 W 0
end

fixture capture-corner
size 5
O....
X....
.....
.....
.....
play B (0,1) ok cap=[(0,0)]
score B 25 W 0
end

fixture suicide-rejected-board-unchanged
size 5
.X...
X....
.....
.....
.....
play W (0,0) suicide
score B 25 W 0
end

fixture occupied-rejected
size 5
.X...
X....
.....
.....
.....
play W (0,1) occupied
play B (0,1) occupied
end

fixture capture-edge-two-stones
size 5
XOO..
.XX..
.....
.....
.....
play B (0,3) ok cap=[(0,1),(0,2)]
end

fixture capture-two-chains-one-move
size 5
XO.OX
.X.X.
.....
.....
.....
play B (0,2) ok cap=[(0,1),(0,3)]
score B 25 W 0
end

fixture capture-inner-group
size 5
.XX..
XOO..
.XX..
.....
.....
play B (1,3) ok cap=[(1,1),(1,2)]
end

fixture suicide-multistone
size 5
.OX..
OOX..
XXX..
.....
.....
play W (0,0) suicide
end

fixture capture-beats-suicide
size 5
.OX..
OOX..
XXX..
.....
.....
play B (0,0) ok cap=[(0,1),(1,0),(1,1)]
end

fixture ko-set-and-recapture-rejected
size 5
.XO..
X.XO.
.XO..
.....
.....
play W (1,1) ok cap=[(1,2)]
ko (1,2)
play B (1,2) ko
end

fixture ko-cleared-by-intervening-move
size 5
.XO..
X.XO.
.XO..
.....
.....
play W (1,1) ok cap=[(1,2)]
play B (4,4) ok cap=[]
ko none
play B (1,2) ok cap=[(1,1)]
ko (1,1)
end

fixture ko-not-set-on-double-capture
size 5
XO.OX
.X.X.
.....
.....
.....
play B (0,2) ok cap=[(0,1),(0,3)]
ko none
end

fixture ko-not-set-capturer-multiple-liberties
size 5
OX...
.....
.....
.....
.....
play B (1,0) ok cap=[(0,0)]
ko none
end

fixture snapback-recapture-legal
size 5
.OX.X
XXOOX
..XX.
.....
.....
play W (0,3) ok cap=[(0,2)]
ko none
play B (0,2) ok cap=[(0,3),(1,2),(1,3)]
ko none
end

fixture pass-clears-ko
size 5
.XO..
X.XO.
.XO..
.....
.....
play W (1,1) ok cap=[(1,2)]
ko (1,2)
play B pass ok
ko none
end

fixture eyelike-center-true
size 5
.X...
X.X..
.X...
.....
.....
eyelike B (1,1) true
end

fixture eyelike-empty-orthogonal-false
size 5
.X...
X.X..
.X...
.....
.....
eyelike B (2,2) false
end

fixture eyelike-corner-opponent-diagonal-false
size 5
.X...
XO...
.....
.....
.....
eyelike B (0,0) false
end

fixture eyelike-corner-true
size 5
.X...
X....
.....
.....
.....
eyelike B (0,0) true
end

fixture eyelike-interior-one-opponent-diagonal-true
size 5
.X...
X.X..
OX...
.....
.....
eyelike B (1,1) true
end

fixture eyelike-interior-two-opponent-diagonals-false
size 5
OX...
X.X..
OX...
.....
.....
eyelike B (1,1) false
end

fixture eyelike-edge-true
size 5
.X.X.
..X..
.....
.....
.....
eyelike B (0,2) true
end

fixture eyelike-edge-one-opponent-diagonal-false
size 5
.X.X.
.OX..
.....
.....
.....
eyelike B (0,2) false
end

fixture eyelike-color-swap
size 5
.O...
O.O..
.O...
.....
.....
eyelike W (1,1) true
eyelike B (1,1) false
end

fixture score-empty-board
size 5
.....
.....
.....
.....
.....
score B 0 W 0
end

fixture score-single-stone-3x3
size 3
...
.X.
...
score B 9 W 0
end

fixture score-shared-region-neutral
size 5
X....
.....
.....
.....
....O
score B 1 W 1
end

fixture score-split-territories
size 5
.X.O.
.X.O.
.X.O.
.X.O.
.X.O.
score B 10 W 10
end

fixture score-full-board
size 5
XXXXX
XXXXX
XXXXX
OOOOO
OOOOO
score B 15 W 10
end

fixture score-stone-inside-territory-as-is
size 5
XXXXX
X...X
X.O.X
X...X
XXXXX
score B 16 W 1
end
)";
  return kFixtures;
}

}  // namespace seedgo

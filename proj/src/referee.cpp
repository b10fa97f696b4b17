#include "seedgo/referee.hpp"

#include <cstdio>
#include <stdexcept>

namespace seedgo {

Referee::Referee(int board_size, double komi, int move_cap)
    : board_(board_size), move_cap_(move_cap), komi_(komi) {}

std::string format_point(int idx, int size) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "(%d,%d)", idx / size, idx % size);
  return buf;
}

void Referee::append_move_line(Color color, Move move, bool ok,
                               const std::vector<int16_t>* captured) {
  transcript_.push_back(color_char(color));
  transcript_.push_back(' ');
  if (move.is_pass()) {
    transcript_ += "pass";
  } else {
    transcript_ += format_point(move.idx, board_.size());
  }
  if (!ok) {
    transcript_ += " ILLEGAL\n";
    return;
  }
  transcript_ += " OK";
  if (!move.is_pass()) {
    transcript_ += " cap=[";
    if (captured) {
      for (size_t k = 0; k < captured->size(); ++k) {
        if (k > 0) transcript_.push_back(',');
        transcript_ += format_point((*captured)[k], board_.size());
      }
    }
    transcript_ += "]";
  }
  transcript_.push_back('\n');
}

void Referee::finish() {
  over_ = true;
  final_score_ = board_.area_score();
  winner_ = referee_result(final_score_, komi_);
  if (cap_hit_) transcript_ += "MOVECAP\n";
  const double margin = final_score_.black - final_score_.white - komi_;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "RESULT %c+%.1f\n",
                winner_ == Color::Black ? 'B' : 'W',
                winner_ == Color::Black ? margin : -margin);
  transcript_ += buf;
}

RefereeReply Referee::propose(Color color, Move move) {
  if (over_) throw std::logic_error("propose after game over");
  if (color != to_move_) throw std::logic_error("propose out of turn");

  RefereeReply reply;
  if (move.is_pass()) {
    board_.play(color, move, nullptr);
    append_move_line(color, move, true, nullptr);
    ++accepted_[static_cast<int>(color)];
    ++consecutive_passes_;
    to_move_ = opponent(color);
    if (consecutive_passes_ >= 2) {
      finish();
    } else if (total_accepted_moves() >= move_cap_) {
      cap_hit_ = true;
      finish();
    }
    if (over_) {
      reply.kind = ReplyKind::GameOver;
      reply.score = final_score_;
      reply.winner = winner_;
      return reply;
    }
    reply.kind = ReplyKind::Accepted;
    return reply;
  }

  const PlayStatus status = board_.play(color, move, &reply.captured);
  if (status != PlayStatus::Ok) {
    append_move_line(color, move, false, nullptr);
    reply.kind = ReplyKind::Illegal;
    reply.captured.clear();
    return reply;  // same player proposes again
  }

  append_move_line(color, move, true, &reply.captured);
  ++accepted_[static_cast<int>(color)];
  consecutive_passes_ = 0;
  to_move_ = opponent(color);
  if (total_accepted_moves() >= move_cap_) {
    cap_hit_ = true;
    finish();
    reply.kind = ReplyKind::GameOver;
    reply.score = final_score_;
    reply.winner = winner_;
    return reply;
  }
  reply.kind = ReplyKind::Accepted;
  return reply;
}

Color referee_result(const Score& score, double komi) {
  return score_winner(score, komi);
}

Board replay_transcript(const std::string& transcript, int board_size) {
  Board board(board_size);
  size_t pos = 0;
  while (pos < transcript.size()) {
    size_t eol = transcript.find('\n', pos);
    if (eol == std::string::npos) eol = transcript.size();
    const std::string line = transcript.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty() || line[0] == 'R' || line[0] == 'M') continue;  // RESULT / MOVECAP
    if (line.find(" ILLEGAL") != std::string::npos) continue;
    const Color color = line[0] == 'B' ? Color::Black : Color::White;
    Move move = Move::pass();
    if (line.compare(2, 4, "pass") != 0) {
      int r = 0, c = 0;
      if (std::sscanf(line.c_str() + 2, "(%d,%d)", &r, &c) != 2) {
        throw std::runtime_error("bad transcript line: " + line);
      }
      move = Move::point(r, c, board_size);
    }
    if (board.play(color, move, nullptr) != PlayStatus::Ok) {
      throw std::runtime_error("transcript replay produced an illegal move: " + line);
    }
  }
  return board;
}

}  // namespace seedgo

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "seedgo/game.hpp"

namespace seedgo {

// K x K binary outcome matrix: entry (i, j) = 1 iff Black with seed index i
// beat White with seed index j under the fingerprinted config.
struct ResultMatrix {
  int k = 0;
  uint64_t fingerprint = 0;
  std::vector<uint8_t> bits;

  ResultMatrix() = default;
  ResultMatrix(int k_, uint64_t fp) : k(k_), fingerprint(fp), bits(static_cast<size_t>(k_) * k_, 0) {}

  int get(int i, int j) const { return bits[static_cast<size_t>(i) * k + j]; }
  void set(int i, int j, int bit) { bits[static_cast<size_t>(i) * k + j] = static_cast<uint8_t>(bit); }

  int row_sum(int i) const {
    int s = 0;
    for (int j = 0; j < k; ++j) s += get(i, j);
    return s;
  }
  int col_sum(int j) const {
    int s = 0;
    for (int i = 0; i < k; ++i) s += get(i, j);
    return s;
  }
};

// Append-only journal of played games, lines `<i> <j> <bit>`. The journal's
// config fingerprint lives in the manifest written beside it; loading
// verifies the fingerprint before any entry is reused.
class GameJournal {
 public:
  // Opens (creating if needed) the journal at `path` for config `fp`.
  // Throws on fingerprint mismatch with an existing journal manifest.
  GameJournal(const std::string& path, uint64_t fp);

  const std::map<std::pair<uint64_t, uint64_t>, int>& entries() const { return entries_; }
  const int* lookup(uint64_t i, uint64_t j) const;
  // Thread-safe: appends a line and flushes.
  void append(uint64_t i, uint64_t j, int bit);
  const std::string& path() const { return path_; }

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  std::string path_;
  std::map<std::pair<uint64_t, uint64_t>, int> entries_;
};

struct BuildStats {
  int games_played = 0;
  int cells_from_journal = 0;
};

// Plays every cell not already journaled, with `workers` parallel games.
// The result is a pure function of the config: independent of worker count,
// journal state and scheduling. `journal` may be null (no persistence).
ResultMatrix build_matrix(const MatchupConfig& config, GameJournal* journal,
                          int workers, BuildStats* stats = nullptr,
                          std::function<void(int, int)> progress = {});

// Normative text format:
//   line 1 `seedmatrix v1`, line 2 `K=<K>`, line 3 `fingerprint=<16 hex>`,
//   then K lines of K characters `0`/`1` (row i = Black seed index i).
std::string matrix_to_text(const ResultMatrix& m);
ResultMatrix matrix_from_text(const std::string& text);
void write_matrix_file(const std::string& path, const ResultMatrix& m);
ResultMatrix read_matrix_file(const std::string& path);

}  // namespace seedgo

#include "seedgo/seed_matrix.hpp"

#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "seedgo/manifest.hpp"

namespace seedgo {

struct GameJournal::Impl {
  std::mutex mu;
  std::ofstream out;
};

GameJournal::GameJournal(const std::string& path, uint64_t fp)
    : impl_(std::make_shared<Impl>()), path_(path) {
  const std::string manifest_path = path + ".manifest";
  const std::string fp_hex = fingerprint_hex(fp);
  if (file_exists(path)) {
    if (!file_exists(manifest_path)) {
      throw std::runtime_error("journal has no manifest: " + path);
    }
    const Manifest m = read_manifest(manifest_path);
    const auto it = m.find("fingerprint");
    if (it == m.end() || it->second != fp_hex) {
      throw std::runtime_error("journal fingerprint mismatch: " + path);
    }
    std::ifstream in(path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      unsigned long long i = 0, j = 0;
      int bit = -1;
      if (std::sscanf(line.c_str(), "%llu %llu %d", &i, &j, &bit) != 3 ||
          (bit != 0 && bit != 1)) {
        throw std::runtime_error("bad journal line " + std::to_string(lineno) +
                                 " in " + path);
      }
      entries_[{i, j}] = bit;
    }
  } else {
    Manifest m;
    m["kind"] = "journal";
    m["fingerprint"] = fp_hex;
    write_manifest(manifest_path, m);
  }
  impl_->out.open(path, std::ios::app);
  if (!impl_->out) throw std::runtime_error("cannot open journal: " + path);
}

const int* GameJournal::lookup(uint64_t i, uint64_t j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? nullptr : &it->second;
}

void GameJournal::append(uint64_t i, uint64_t j, int bit) {
  std::lock_guard<std::mutex> lock(impl_->mu);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%" PRIu64 " %" PRIu64 " %d\n", i, j, bit);
  impl_->out << buf;
  impl_->out.flush();
  if (!impl_->out) throw std::runtime_error("journal write failed: " + path_);
}

namespace {

// Runs fn(t) for t in [0, count) on `workers` threads. Exceptions from
// workers are rethrown on the caller's thread.
void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (int t = 0; t < count; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      const int t = next.fetch_add(1);
      if (t >= count || failed.load()) return;
      try {
        fn(t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  const int n_threads = std::min(workers, count);
  threads.reserve(n_threads);
  for (int w = 0; w < n_threads; ++w) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

ResultMatrix build_matrix(const MatchupConfig& config, GameJournal* journal,
                          int workers, BuildStats* stats,
                          std::function<void(int, int)> progress) {
  const uint64_t fp = config_fingerprint(config);
  ResultMatrix matrix(config.k, fp);

  std::vector<std::pair<int, int>> pending;
  int from_journal = 0;
  for (int i = 0; i < config.k; ++i) {
    for (int j = 0; j < config.k; ++j) {
      const int* bit = journal ? journal->lookup(i, j) : nullptr;
      if (bit) {
        matrix.set(i, j, *bit);
        ++from_journal;
      } else {
        pending.emplace_back(i, j);
      }
    }
  }

  std::atomic<int> done{0};
  const int total = static_cast<int>(pending.size());
  parallel_for(total, workers, [&](int t) {
    const auto [i, j] = pending[t];
    const GameRecord record =
        play_seeded_game(static_cast<uint64_t>(i), static_cast<uint64_t>(j), config);
    matrix.set(i, j, record.black_wins);
    if (journal) journal->append(i, j, record.black_wins);
    const int d = done.fetch_add(1) + 1;
    if (progress) progress(d, total);
  });

  if (stats) {
    stats->games_played = total;
    stats->cells_from_journal = from_journal;
  }
  return matrix;
}

std::string matrix_to_text(const ResultMatrix& m) {
  std::string out = "seedmatrix v1\n";
  out += "K=" + std::to_string(m.k) + "\n";
  out += "fingerprint=" + fingerprint_hex(m.fingerprint) + "\n";
  for (int i = 0; i < m.k; ++i) {
    for (int j = 0; j < m.k; ++j) out.push_back(m.get(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

ResultMatrix matrix_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "seedmatrix v1") {
    throw std::runtime_error("not a seedmatrix v1 file");
  }
  if (!std::getline(in, line) || line.rfind("K=", 0) != 0) {
    throw std::runtime_error("missing K= line");
  }
  const int k = std::stoi(line.substr(2));
  if (k < 1) throw std::runtime_error("bad K");
  if (!std::getline(in, line) || line.rfind("fingerprint=", 0) != 0) {
    throw std::runtime_error("missing fingerprint= line");
  }
  const uint64_t fp = std::stoull(line.substr(12), nullptr, 16);
  ResultMatrix m(k, fp);
  for (int i = 0; i < k; ++i) {
    if (!std::getline(in, line) || static_cast<int>(line.size()) != k) {
      throw std::runtime_error("bad matrix row " + std::to_string(i));
    }
    for (int j = 0; j < k; ++j) {
      if (line[j] != '0' && line[j] != '1') {
        throw std::runtime_error("bad matrix bit at row " + std::to_string(i));
      }
      m.set(i, j, line[j] - '0');
    }
  }
  return m;
}

void write_matrix_file(const std::string& path, const ResultMatrix& m) {
  write_text_file(path, matrix_to_text(m));
}

ResultMatrix read_matrix_file(const std::string& path) {
  return matrix_from_text(read_text_file(path));
}

}  // namespace seedgo

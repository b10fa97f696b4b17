#include "seedgo/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "seedgo/kernels.hpp"
#include "seedgo/manifest.hpp"

namespace seedgo {

SeedPolicy SeedPolicy::from_best_seed(const BestSeedPolicy& p) {
  SeedPolicy out;
  out.kind = "bestseed";
  out.black_support = {p.black_index};
  out.black_prob = {1.0};
  out.white_support = {p.white_index};
  out.white_prob = {1.0};
  return out;
}

SeedPolicy SeedPolicy::from_strategies(const std::string& kind, double alpha,
                                       const MixedStrategy& x, const MixedStrategy& y) {
  SeedPolicy out;
  out.kind = kind;
  out.alpha = alpha;
  for (int i = 0; i < static_cast<int>(x.weights.size()); ++i) {
    if (x.weights[i] > 0.0) {
      out.black_support.push_back(i);
      out.black_prob.push_back(x.weights[i]);
    }
  }
  for (int j = 0; j < static_cast<int>(y.weights.size()); ++j) {
    if (y.weights[j] > 0.0) {
      out.white_support.push_back(j);
      out.white_prob.push_back(y.weights[j]);
    }
  }
  return out;
}

SeedPolicy SeedPolicy::baseline_uniform(int k) {
  SeedPolicy out;
  out.kind = "baseline";
  const double p = 1.0 / k;
  for (int i = 0; i < k; ++i) {
    out.black_support.push_back(i);
    out.black_prob.push_back(p);
    out.white_support.push_back(i);
    out.white_prob.push_back(p);
  }
  return out;
}

std::string policy_to_text(const SeedPolicy& p) {
  std::string out = "seedpolicy v1\n";
  char buf[96];
  std::snprintf(buf, sizeof(buf), "kind=%s alpha=%.12g\n", p.kind.c_str(), p.alpha);
  out += buf;
  for (size_t i = 0; i < p.black_support.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "black %d %.12g\n", p.black_support[i], p.black_prob[i]);
    out += buf;
  }
  for (size_t i = 0; i < p.white_support.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "white %d %.12g\n", p.white_support[i], p.white_prob[i]);
    out += buf;
  }
  return out;
}

SeedPolicy policy_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "seedpolicy v1") {
    throw std::runtime_error("not a seedpolicy v1 file");
  }
  SeedPolicy p;
  char kind[32];
  if (!std::getline(in, line) ||
      std::sscanf(line.c_str(), "kind=%31s alpha=%lf", kind, &p.alpha) != 2) {
    throw std::runtime_error("bad policy kind line");
  }
  p.kind = kind;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    char color[8];
    int index = 0;
    double prob = 0.0;
    if (std::sscanf(line.c_str(), "%7s %d %lf", color, &index, &prob) != 3) {
      throw std::runtime_error("bad policy line: " + line);
    }
    if (std::string(color) == "black") {
      p.black_support.push_back(index);
      p.black_prob.push_back(prob);
    } else if (std::string(color) == "white") {
      p.white_support.push_back(index);
      p.white_prob.push_back(prob);
    } else {
      throw std::runtime_error("bad policy color: " + line);
    }
  }
  if (p.black_support.empty() || p.white_support.empty()) {
    throw std::runtime_error("policy has an empty support");
  }
  return p;
}

void write_policy_file(const std::string& path, const SeedPolicy& p) {
  write_text_file(path, policy_to_text(p));
}

SeedPolicy read_policy_file(const std::string& path) {
  return policy_from_text(read_text_file(path));
}

namespace {

// Sub-seed for repeated games of the same pairing (games_per_pair > 1).
uint64_t derive_game_base(uint64_t base_seed, int game) {
  if (game == 0) return base_seed;
  SplitMix64 mixer(base_seed ^ (static_cast<uint64_t>(game) * 0xD1342543DE82EF95ULL));
  return mixer.next_u64();
}

struct GameJob {
  uint64_t black;
  uint64_t white;
  int game;
};

}  // namespace

EvalMatrixPair build_eval_matrix(const SeedPolicy& policy, const EvalConfig& eval,
                                 const MatchupConfig& matchup, int jobs,
                                 GameJournal* journal) {
  if (policy.black_support.empty() || policy.white_support.empty()) {
    throw std::invalid_argument("policy support is empty");
  }
  for (int s : policy.black_support) {
    if (static_cast<uint64_t>(s) >= matchup.heldout_offset) {
      throw std::runtime_error("training/validation overlap: support index in held-out pool");
    }
  }
  for (int s : policy.white_support) {
    if (static_cast<uint64_t>(s) >= matchup.heldout_offset) {
      throw std::runtime_error("training/validation overlap: support index in held-out pool");
    }
  }

  EvalMatrixPair pair;
  pair.as_black.support = policy.black_support;
  pair.as_white.support = policy.white_support;
  for (int t = 0; t < eval.heldout_count; ++t) {
    pair.as_black.opponents.push_back(matchup.heldout_offset + t);
    pair.as_white.opponents.push_back(matchup.heldout_offset + t);
  }

  const int games = std::max(1, eval.games_per_pair);
  std::vector<GameJob> job_list;
  std::map<std::pair<uint64_t, uint64_t>, double> results;  // sum over sub-games
  auto schedule = [&](uint64_t black, uint64_t white) {
    if (results.count({black, white})) return;  // shared between both colors
    results[{black, white}] = 0.0;
    for (int g = 0; g < games; ++g) {
      if (g == 0 && journal) {
        if (const int* bit = journal->lookup(black, white)) {
          results[{black, white}] += *bit;
          continue;
        }
      }
      job_list.push_back(GameJob{black, white, g});
    }
  };
  for (int s : policy.black_support) {
    for (uint64_t o : pair.as_black.opponents) schedule(s, o);
  }
  for (int s : policy.white_support) {
    for (uint64_t o : pair.as_white.opponents) schedule(o, s);
  }

  std::vector<int> outcomes(job_list.size(), 0);
  {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const size_t t = next.fetch_add(1);
        if (t >= job_list.size()) return;
        const GameJob& job = job_list[t];
        MatchupConfig cfg = matchup;
        cfg.base_seed = derive_game_base(matchup.base_seed, job.game);
        outcomes[t] = play_seeded_game(job.black, job.white, cfg).black_wins;
      }
    };
    const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(job_list.size())));
    if (n_threads <= 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < n_threads; ++w) threads.emplace_back(worker);
      for (auto& th : threads) th.join();
    }
  }
  for (size_t t = 0; t < job_list.size(); ++t) {
    const GameJob& job = job_list[t];
    results[{job.black, job.white}] += outcomes[t];
    if (job.game == 0 && journal) journal->append(job.black, job.white, outcomes[t]);
  }

  const size_t cols = pair.as_black.opponents.size();
  pair.as_black.win.resize(policy.black_support.size() * cols);
  pair.as_white.win.resize(policy.white_support.size() * cols);
  for (size_t s = 0; s < policy.black_support.size(); ++s) {
    for (size_t o = 0; o < cols; ++o) {
      const double black_wins =
          results.at({static_cast<uint64_t>(policy.black_support[s]),
                      pair.as_black.opponents[o]});
      pair.as_black.win[s * cols + o] = black_wins / games;
    }
  }
  for (size_t s = 0; s < policy.white_support.size(); ++s) {
    for (size_t o = 0; o < cols; ++o) {
      const double black_wins =
          results.at({pair.as_white.opponents[o],
                      static_cast<uint64_t>(policy.white_support[s])});
      pair.as_white.win[s * cols + o] = 1.0 - black_wins / games;
    }
  }
  return pair;
}

std::vector<double> per_opponent_rates(const EvalMatrix& eval,
                                       const std::vector<double>& probs) {
  const int rows = static_cast<int>(eval.support.size());
  const int cols = static_cast<int>(eval.opponents.size());
  if (static_cast<int>(probs.size()) != rows) {
    throw std::invalid_argument("probability vector does not match support");
  }
  std::vector<double> rates(cols, 0.0);
  kernels::ops().matvec_t(eval.win.data(), rows, cols, probs.data(), rates.data());
  return rates;
}

namespace {

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Standard error of the mean over independent per-opponent values.
double standard_error(const std::vector<double>& v) {
  const size_t n = v.size();
  if (n < 2) return 0.0;
  const double m = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n));
}

}  // namespace

WinRateReport evaluate_vs_baseline(const SeedPolicy& policy, const EvalMatrixPair& eval) {
  const std::vector<double> pb = per_opponent_rates(eval.as_black, policy.black_prob);
  const std::vector<double> pw = per_opponent_rates(eval.as_white, policy.white_prob);
  WinRateReport report;
  report.as_black = mean_of(pb);
  report.as_white = mean_of(pw);
  report.mean = 0.5 * (report.as_black + report.as_white);
  const double se_b = standard_error(pb);
  const double se_w = standard_error(pw);
  report.std = 0.5 * std::sqrt(se_b * se_b + se_w * se_w);
  report.n = static_cast<long>(pb.size() + pw.size());
  return report;
}

WinRateReport evaluate_vs_exploiter(const SeedPolicy& policy, const EvalMatrixPair& eval,
                                    int kprime, int repetitions, SplitMix64& rng) {
  const int pool = static_cast<int>(eval.as_black.opponents.size());
  if (kprime < 1 || kprime > pool) {
    throw std::invalid_argument("kprime exceeds the held-out pool");
  }
  const std::vector<double> pb = per_opponent_rates(eval.as_black, policy.black_prob);
  const std::vector<double> pw = per_opponent_rates(eval.as_white, policy.white_prob);

  std::vector<int> idx(pool);
  // Draw kprime distinct opponents; the omniscient opponent plays the one
  // minimizing our expected win rate. Black draw first, then White.
  auto draw_min = [&](const std::vector<double>& rates) {
    for (int t = 0; t < pool; ++t) idx[t] = t;
    double best = 2.0;
    for (int t = 0; t < kprime; ++t) {
      const int j = t + static_cast<int>(rng.uniform_below(static_cast<uint64_t>(pool - t)));
      std::swap(idx[t], idx[j]);
      best = std::min(best, rates[idx[t]]);
    }
    return best;
  };

  double sum_b = 0.0, sum_w = 0.0, sum_m = 0.0, sum_m2 = 0.0;
  for (int r = 0; r < repetitions; ++r) {
    const double vb = draw_min(pb);
    const double vw = draw_min(pw);
    const double mr = 0.5 * (vb + vw);
    sum_b += vb;
    sum_w += vw;
    sum_m += mr;
    sum_m2 += mr * mr;
  }
  WinRateReport report;
  report.as_black = sum_b / repetitions;
  report.as_white = sum_w / repetitions;
  report.mean = sum_m / repetitions;
  if (repetitions > 1) {
    const double var =
        (sum_m2 - sum_m * sum_m / repetitions) / static_cast<double>(repetitions - 1);
    report.std = std::sqrt(std::max(0.0, var) / repetitions);
  }
  report.n = repetitions;
  return report;
}

namespace {

// E[min] and E[min^2] of kprime draws without replacement, from order
// statistics: P(min is the r-th smallest) = C(pool-1-r, kprime-1) / C(pool, kprime).
void exact_min_moments(std::vector<double> rates, int kprime, double* e1, double* e2) {
  const int pool = static_cast<int>(rates.size());
  std::sort(rates.begin(), rates.end());
  // w_0 = kprime/pool, then w_{r+1}/w_r = (pool-r-kprime)/(pool-1-r).
  double w = static_cast<double>(kprime) / pool;
  double sum_w = 0.0, m1 = 0.0, m2 = 0.0;
  for (int r = 0; r + kprime <= pool; ++r) {
    m1 += w * rates[r];
    m2 += w * rates[r] * rates[r];
    sum_w += w;
    w *= static_cast<double>(pool - r - kprime) / static_cast<double>(pool - 1 - r);
  }
  *e1 = m1 / sum_w;  // sum_w is 1 up to round-off
  *e2 = m2 / sum_w;
}

}  // namespace

WinRateReport evaluate_vs_exploiter_exact(const SeedPolicy& policy,
                                          const EvalMatrixPair& eval, int kprime) {
  const int pool = static_cast<int>(eval.as_black.opponents.size());
  if (kprime < 1 || kprime > pool) {
    throw std::invalid_argument("kprime exceeds the held-out pool");
  }
  if (kprime == 1) {
    // A single draw has no choice to optimize: identical to the baseline
    // criterion, computed through the same code path.
    return evaluate_vs_baseline(policy, eval);
  }
  const std::vector<double> pb = per_opponent_rates(eval.as_black, policy.black_prob);
  const std::vector<double> pw = per_opponent_rates(eval.as_white, policy.white_prob);
  double eb, eb2, ew, ew2;
  exact_min_moments(pb, kprime, &eb, &eb2);
  exact_min_moments(pw, kprime, &ew, &ew2);
  WinRateReport report;
  report.as_black = eb;
  report.as_white = ew;
  report.mean = 0.5 * (eb + ew);
  const double var_b = std::max(0.0, eb2 - eb * eb);
  const double var_w = std::max(0.0, ew2 - ew * ew);
  report.std = 0.5 * std::sqrt(var_b + var_w);  // sd of a single draw
  report.n = pool;
  return report;
}

}  // namespace seedgo

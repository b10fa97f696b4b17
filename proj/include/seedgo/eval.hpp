#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seedgo/portfolio.hpp"
#include "seedgo/rng.hpp"
#include "seedgo/seed_matrix.hpp"

namespace seedgo {

// A seed policy as used by the evaluator and the policy file format: one
// distribution over training seed indices per color, support entries only.
struct SeedPolicy {
  std::string kind;  // baseline | bestseed | nash | sparsenash
  double alpha = 0.0;
  std::vector<int> black_support;
  std::vector<double> black_prob;
  std::vector<int> white_support;
  std::vector<double> white_prob;

  static SeedPolicy from_best_seed(const BestSeedPolicy& p);
  static SeedPolicy from_strategies(const std::string& kind, double alpha,
                                    const MixedStrategy& x, const MixedStrategy& y);
  static SeedPolicy baseline_uniform(int k);
};

// Normative text format: line 1 `seedpolicy v1`,
// line 2 `kind=<kind> alpha=<alpha>`, then `black <seed_index> <probability>`
// and `white <seed_index> <probability>` lines for support entries only,
// probabilities with 12 significant digits.
std::string policy_to_text(const SeedPolicy& p);
SeedPolicy policy_from_text(const std::string& text);
void write_policy_file(const std::string& path, const SeedPolicy& p);
SeedPolicy read_policy_file(const std::string& path);

struct EvalConfig {
  int heldout_count = 100;
  int games_per_pair = 1;
  std::vector<int> kprime_list = {1, 2, 4, 8, 16};
  int repetitions = 1000;
  uint64_t eval_seed = 7;
};

// Rows = our policy's support seeds, columns = held-out opponent seed
// indices, entries = our win rate for that pairing (a single game bit when
// games_per_pair is 1).
struct EvalMatrix {
  std::vector<int> support;
  std::vector<uint64_t> opponents;
  std::vector<double> win;  // rows x cols, row-major

  double at(int s, int o) const { return win[static_cast<size_t>(s) * opponents.size() + o]; }
};

struct EvalMatrixPair {
  EvalMatrix as_black;  // our seed as Black vs held-out White seeds
  EvalMatrix as_white;  // our seed as White vs held-out Black seeds
};

// Plays every (support seed, held-out seed) pairing in both colors.
// Held-out indices are heldout_offset + t, structurally disjoint from the
// training range; the disjointness is still checked and a violation throws.
// An optional journal (fingerprint-checked, shared with other evaluations of
// the same config) makes the build resumable.
EvalMatrixPair build_eval_matrix(const SeedPolicy& policy, const EvalConfig& eval,
                                 const MatchupConfig& matchup, int jobs,
                                 GameJournal* journal = nullptr);

struct WinRateReport {
  double mean = 0.0;
  double std = 0.0;  // standard error of the mean estimate
  double as_black = 0.0;
  double as_white = 0.0;
  long n = 0;
};

// Criterion 1: expected win rate against the original randomized AI, i.e.
// a uniformly random held-out seed. Our side is an exact expectation over
// the policy distribution; the only variance left is across opponent seeds.
WinRateReport evaluate_vs_baseline(const SeedPolicy& policy, const EvalMatrixPair& eval);

// Criterion 2: against an omniscient opponent that draws kprime held-out
// seeds (without replacement) and plays the one minimizing our exact
// expected win rate. Sampled over `repetitions` draws per color.
WinRateReport evaluate_vs_exploiter(const SeedPolicy& policy, const EvalMatrixPair& eval,
                                    int kprime, int repetitions, SplitMix64& rng);

// Exact expectation of the criterion-2 value over all possible draws,
// computed from order statistics; kprime = 1 reduces to the baseline
// criterion exactly. std reports the standard deviation of a single draw.
WinRateReport evaluate_vs_exploiter_exact(const SeedPolicy& policy,
                                          const EvalMatrixPair& eval, int kprime);

// Our expected win rate against each held-out opponent individually
// (the exploiter's decision inputs). Exposed for tests and analysis.
std::vector<double> per_opponent_rates(const EvalMatrix& eval,
                                       const std::vector<double>& probs);

}  // namespace seedgo

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace seedgo {

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first failing check, empty on pass
};

// Runs a fixture script against the rules engine. Script format, one
// fixture per block:
//   fixture <name>
//   size <n>
//   <n board rows of . X O>
//   play <B|W> <(r,c)|pass> <ok|occupied|suicide|ko> [cap=[(r,c),...]]
//   score B <n> W <n>
//   eyelike <B|W> (r,c) <true|false>
//   ko <(r,c)|none>
//   end
// `play ... ok` advances the board; an expected-illegal play must leave it
// unchanged. Malformed scripts report a failed fixture rather than throwing.
std::vector<FixtureResult> run_rules_fixtures(std::string_view script);

// The curated suite: captures, suicide, ko, eyes and Chinese scoring.
std::string_view builtin_rules_fixtures();

}  // namespace seedgo

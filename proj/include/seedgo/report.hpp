#pragma once

#include <string>
#include <vector>

#include "seedgo/eval.hpp"

namespace seedgo {

struct ReportRow {
  std::string method;
  int board = 0;
  int k = 0;
  double alpha = 0.0;
  int kprime = 1;
  WinRateReport report;
};

// CSV with header `method,board,K,alpha,kprime,mean,std,as_black,as_white,n`.
// Doubles are written with 17 significant digits so a re-parse reproduces
// the values exactly.
std::string report_to_csv(const std::vector<ReportRow>& rows);
std::vector<ReportRow> report_from_csv(const std::string& csv);

// Aligned markdown table, one row per (method, board, K, alpha), one column
// per K', cells `mean ± std` as percentages with one decimal.
std::string report_to_markdown(const std::vector<ReportRow>& rows);

}  // namespace seedgo

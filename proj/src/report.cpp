#include "seedgo/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace seedgo {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  fields.push_back(field);
  return fields;
}

}  // namespace

std::string report_to_csv(const std::vector<ReportRow>& rows) {
  std::string out = "method,board,K,alpha,kprime,mean,std,as_black,as_white,n\n";
  for (const ReportRow& r : rows) {
    out += r.method + ',' + std::to_string(r.board) + ',' + std::to_string(r.k) + ',' +
           fmt_double(r.alpha) + ',' + std::to_string(r.kprime) + ',' +
           fmt_double(r.report.mean) + ',' + fmt_double(r.report.std) + ',' +
           fmt_double(r.report.as_black) + ',' + fmt_double(r.report.as_white) + ',' +
           std::to_string(r.report.n) + '\n';
  }
  return out;
}

std::vector<ReportRow> report_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) ||
      line != "method,board,K,alpha,kprime,mean,std,as_black,as_white,n") {
    throw std::runtime_error("bad report CSV header");
  }
  std::vector<ReportRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 10) throw std::runtime_error("bad report CSV row: " + line);
    ReportRow r;
    r.method = f[0];
    r.board = std::stoi(f[1]);
    r.k = std::stoi(f[2]);
    r.alpha = std::stod(f[3]);
    r.kprime = std::stoi(f[4]);
    r.report.mean = std::stod(f[5]);
    r.report.std = std::stod(f[6]);
    r.report.as_black = std::stod(f[7]);
    r.report.as_white = std::stod(f[8]);
    r.report.n = std::stol(f[9]);
    rows.push_back(r);
  }
  return rows;
}

std::string report_to_markdown(const std::vector<ReportRow>& rows) {
  // Group rows by policy, keep K' columns in first-seen order.
  std::vector<std::string> group_order;
  std::map<std::string, std::map<int, const ReportRow*>> groups;
  std::vector<int> kprimes;
  for (const ReportRow& r : rows) {
    char key[128];
    std::snprintf(key, sizeof(key), "%s|%dx%d|K=%d|a=%.3g", r.method.c_str(), r.board,
                  r.board, r.k, r.alpha);
    if (!groups.count(key)) group_order.push_back(key);
    groups[key][r.kprime] = &r;
    if (std::find(kprimes.begin(), kprimes.end(), r.kprime) == kprimes.end()) {
      kprimes.push_back(r.kprime);
    }
  }
  std::sort(kprimes.begin(), kprimes.end());

  const size_t cell_width = 14;
  size_t label_width = 8;
  for (const auto& key : group_order) label_width = std::max(label_width, key.size());

  auto pad = [](std::string s, size_t width) {
    // Display width, counting the two-byte "±" as one column.
    size_t len = 0;
    for (char ch : s) {
      if ((ch & 0xC0) != 0x80) ++len;
    }
    if (len < width) s += std::string(width - len, ' ');
    return s;
  };

  std::string out = "| " + pad("policy", label_width) + " |";
  for (int kp : kprimes) out += " " + pad("K'=" + std::to_string(kp), cell_width) + " |";
  out += "\n|" + std::string(label_width + 2, '-') + "|";
  for (size_t i = 0; i < kprimes.size(); ++i) out += std::string(cell_width + 2, '-') + "|";
  out += "\n";
  for (const auto& key : group_order) {
    out += "| " + pad(key, label_width) + " |";
    for (int kp : kprimes) {
      const auto it = groups[key].find(kp);
      std::string cell = "-";
      if (it != groups[key].end()) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.1f ± %.1f", 100.0 * it->second->report.mean,
                      100.0 * it->second->report.std);
        cell = buf;
      }
      out += " " + pad(cell, cell_width) + " |";
    }
    out += "\n";
  }
  return out;
}

}  // namespace seedgo

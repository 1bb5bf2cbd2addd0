#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bandit_lab/simulation.hpp"

namespace bandit_lab {

inline constexpr int kCsvSignificantDigits = 9;

// Shortest fixed/scientific rendering with 9 significant digits; never
// depends on the global locale.
std::string format_number(double value);

std::string tool_version();

// Ordered key=value pairs echoed as "# key=value" lines ahead of the CSV.
struct RunManifest {
  std::vector<std::pair<std::string, std::string>> entries;

  void add(std::string key, std::string value);
  std::optional<std::string> find(const std::string& key) const;
};

// Manifest header, the column row
//   t,mean_regret,sd_regret,mean_cum_reward
// one data row per checkpoint, then a commented summary block with the final
// slot and mean_plays_<i> for every arm (1-based).
void write_regret_csv(std::ostream& out, const RunManifest& manifest,
                      const MonteCarloResult& result);

struct RegretCsvRow {
  std::uint64_t t = 0;
  double mean_regret = 0.0;
  double sd_regret = 0.0;
  double mean_cumulative_reward = 0.0;
};

struct RegretCsv {
  RunManifest manifest;
  std::vector<RegretCsvRow> rows;
  RunManifest summary;
};

// Inverse of write_regret_csv. Throws ParseError on malformed input.
RegretCsv read_regret_csv(std::istream& in);

struct SvgOptions {
  bool log_x = false;
  std::string title;
  int width = 640;
  int height = 400;
};

// Single polyline of mean regret against t with labelled axes.
void write_regret_svg(std::ostream& out, const MonteCarloResult& result,
                      const SvgOptions& options = {});

}  // namespace bandit_lab

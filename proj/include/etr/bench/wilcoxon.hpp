// Wilcoxon signed-rank test for paired samples.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace etr::bench {

enum class ZeroMethod {
  kDiscard,  // classic: drop zero differences before ranking
  kPratt,    // rank zeros with the rest, then drop them
};

inline constexpr std::size_t kExactLimit = 25;

struct WilcoxonResult {
  double p = 1.0;        // two-sided
  double w_plus = 0.0;   // rank sum of positive differences
  double w_minus = 0.0;
  std::size_t n = 0;     // nonzero differences
  bool exact = true;
  std::string note;      // set for degenerate samples
};

// Throws etr::Error when lengths differ or are zero.
WilcoxonResult WilcoxonSignedRank(const std::vector<double>& x, const std::vector<double>& y,
                                  ZeroMethod zeros = ZeroMethod::kDiscard);

// Average ranks (1-based) of the absolute values, ties sharing their mean.
std::vector<double> AverageRanks(const std::vector<double>& values);

// "strong" for p <= 0.01, "fair" for p <= 0.05, otherwise "".
std::string SignificanceMark(double p);

}  // namespace etr::bench

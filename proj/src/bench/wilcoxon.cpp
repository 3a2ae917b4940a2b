#include "etr/bench/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "etr/error.hpp"

namespace etr::bench {

std::vector<double> AverageRanks(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::fabs(values[a]) < std::fabs(values[b]); });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && std::fabs(values[order[j + 1]]) == std::fabs(values[order[i]])) ++j;
    const double mean = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean;
    i = j + 1;
  }
  return ranks;
}

WilcoxonResult WilcoxonSignedRank(const std::vector<double>& x, const std::vector<double>& y,
                                  ZeroMethod zeros) {
  if (x.size() != y.size()) throw Error("paired samples differ in length");
  if (x.empty()) throw Error("paired samples are empty");

  std::vector<double> d;
  for (std::size_t i = 0; i < x.size(); ++i) d.push_back(x[i] - y[i]);
  std::vector<double> ranks;
  std::vector<double> signed_d;
  if (zeros == ZeroMethod::kPratt) {
    const std::vector<double> all = AverageRanks(d);
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] != 0.0) {
        ranks.push_back(all[i]);
        signed_d.push_back(d[i]);
      }
  } else {
    for (double v : d)
      if (v != 0.0) signed_d.push_back(v);
    ranks = AverageRanks(signed_d);
  }

  WilcoxonResult r;
  r.n = signed_d.size();
  if (r.n == 0) {
    r.note = "all differences are zero";
    return r;
  }
  for (std::size_t i = 0; i < r.n; ++i) (signed_d[i] > 0 ? r.w_plus : r.w_minus) += ranks[i];

  if (r.n <= kExactLimit) {
    // Ranks are multiples of 1/2, so doubled ranks are integers.
    std::vector<std::size_t> r2;
    for (double rank : ranks) r2.push_back(static_cast<std::size_t>(std::llround(2.0 * rank)));
    const std::size_t total = std::accumulate(r2.begin(), r2.end(), std::size_t{0});
    std::vector<double> count(total + 1, 0.0);
    count[0] = 1.0;
    std::size_t reach = 0;
    for (std::size_t v : r2) {
      reach += v;
      for (std::size_t s = reach; s >= v; --s) {
        count[s] += count[s - v];
        if (s == v) break;
      }
    }
    const std::size_t t = static_cast<std::size_t>(std::llround(2.0 * r.w_plus));
    const double patterns = std::ldexp(1.0, static_cast<int>(r.n));
    double lower = 0.0, upper = 0.0;
    for (std::size_t s = 0; s <= total; ++s) {
      if (s <= t) lower += count[s];
      if (s >= t) upper += count[s];
    }
    r.p = std::min(1.0, 2.0 * std::min(lower, upper) / patterns);
  } else {
    r.exact = false;
    double sum = 0.0, sum_sq = 0.0;
    for (double rank : ranks) {
      sum += rank;
      sum_sq += rank * rank;
    }
    const double mean = sum / 2.0;
    const double var = sum_sq / 4.0;
    const double z = (r.w_plus - mean) / std::sqrt(var);
    r.p = std::erfc(std::fabs(z) / std::sqrt(2.0));
  }
  r.p = std::clamp(r.p, 0.0, 1.0);
  return r;
}

std::string SignificanceMark(double p) {
  if (p <= 0.01) return "strong";
  if (p <= 0.05) return "fair";
  return "";
}

}  // namespace etr::bench

#include "oasbench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace oasbench {

SummaryStats summarize(std::span<const double> values, RandomStream rng, std::size_t resamples, double level) {
  SummaryStats s;
  s.count = values.size();
  if (values.empty()) return s;
  const double n = static_cast<double>(values.size());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / (n - 1.0));
  }
  if (values.size() == 1 || resamples == 0) {
    s.ci_low = s.ci_high = s.mean;
    return s;
  }

  std::vector<double> means(resamples);
  for (auto& m : means) {
    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) total += values[rng.below(values.size())];
    m = total / n;
  }
  std::sort(means.begin(), means.end());
  const double alpha = (1.0 - level) / 2.0;
  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(resamples - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, resamples - 1);
    const double frac = pos - static_cast<double>(lo);
    return means[lo] + frac * (means[hi] - means[lo]);
  };
  s.ci_low = quantile(alpha);
  s.ci_high = quantile(1.0 - alpha);
  // percentile intervals can miss the sample mean by rounding on tiny inputs
  s.ci_low = std::min(s.ci_low, s.mean);
  s.ci_high = std::max(s.ci_high, s.mean);
  return s;
}

bool disjoint(const SummaryStats& a, const SummaryStats& b) {
  return a.ci_high < b.ci_low || b.ci_high < a.ci_low;
}

double binomial_z(std::uint64_t successes, std::uint64_t trials, double p) {
  if (trials == 0) throw std::invalid_argument("binomial_z: no trials");
  const double t = static_cast<double>(trials);
  const double diff = static_cast<double>(successes) / t - p;
  const double sigma = std::sqrt(p * (1.0 - p) / t);
  if (sigma == 0.0) {
    if (diff == 0.0) return 0.0;
    return diff > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  }
  return diff / sigma;
}

namespace {

double chi_square_sf(double statistic, double dof) {
  if (dof < 1.0) return 1.0;
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

}  // namespace

double chi_square_gof_pvalue(std::span<const std::uint64_t> observed, std::span<const double> probabilities,
                             double min_expected) {
  if (observed.size() != probabilities.size()) throw std::invalid_argument("chi_square_gof: size mismatch");
  const double total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  if (total == 0.0) throw std::invalid_argument("chi_square_gof: no observations");

  std::vector<double> obs;
  std::vector<double> exp;
  double o_acc = 0.0;
  double e_acc = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    o_acc += static_cast<double>(observed[i]);
    e_acc += probabilities[i] * total;
    if (e_acc >= min_expected) {
      obs.push_back(o_acc);
      exp.push_back(e_acc);
      o_acc = e_acc = 0.0;
    }
  }
  if (o_acc > 0.0 || e_acc > 0.0) {
    if (obs.empty()) {
      obs.push_back(o_acc);
      exp.push_back(e_acc);
    } else {
      obs.back() += o_acc;
      exp.back() += e_acc;
    }
  }
  double stat = 0.0;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (exp[i] > 0.0) {
      stat += (obs[i] - exp[i]) * (obs[i] - exp[i]) / exp[i];
    } else if (obs[i] > 0.0) {
      return 0.0;
    }
  }
  return chi_square_sf(stat, static_cast<double>(obs.size()) - 1.0);
}

double chi_square_homogeneity_pvalue(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                     double min_expected) {
  if (a.size() != b.size()) throw std::invalid_argument("chi_square_homogeneity: size mismatch");
  const double na = static_cast<double>(std::accumulate(a.begin(), a.end(), std::uint64_t{0}));
  const double nb = static_cast<double>(std::accumulate(b.begin(), b.end(), std::uint64_t{0}));
  if (na == 0.0 || nb == 0.0) throw std::invalid_argument("chi_square_homogeneity: empty sample");
  const double n = na + nb;

  // pool adjacent categories until the smaller expected count reaches min_expected
  std::vector<std::pair<double, double>> cells;
  double ca = 0.0;
  double cb = 0.0;
  const double min_share = std::min(na, nb) / n;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca += static_cast<double>(a[i]);
    cb += static_cast<double>(b[i]);
    if ((ca + cb) * min_share >= min_expected) {
      cells.emplace_back(ca, cb);
      ca = cb = 0.0;
    }
  }
  if (ca + cb > 0.0) {
    if (cells.empty()) {
      cells.emplace_back(ca, cb);
    } else {
      cells.back().first += ca;
      cells.back().second += cb;
    }
  }
  double stat = 0.0;
  for (const auto& [oa, ob] : cells) {
    const double col = oa + ob;
    const double ea = col * na / n;
    const double eb = col * nb / n;
    stat += (oa - ea) * (oa - ea) / ea + (ob - eb) * (ob - eb) / eb;
  }
  return chi_square_sf(stat, static_cast<double>(cells.size()) - 1.0);
}

}  // namespace oasbench

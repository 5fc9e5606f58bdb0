#include "geomaug/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "geomaug/core/error.hpp"

namespace geomaug::metrics {

namespace {

struct Stats {
  double mean = 0.0;
  double sd = 0.0;
};

// Sample (n - 1) standard deviation; 0 for a single value.
Stats mean_sd(const std::vector<double>& v) {
  const double n = static_cast<double>(v.size());
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  if (v.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

}  // namespace

void RunRecord::validate() const {
  const std::string who = augmentation + " replicate " + std::to_string(replicate);
  if (train_losses.empty()) throw InvalidArgument(who + ": no training losses");
  for (double l : train_losses) {
    if (!(std::isfinite(l) && l > 0.0)) throw InvalidArgument(who + ": training losses must be finite and > 0");
  }
  if (!(acc_val >= 0.0 && acc_val <= 1.0)) throw InvalidArgument(who + ": acc_val outside [0, 1]");
  if (!(acc_field >= 0.0 && acc_field <= 1.0)) throw InvalidArgument(who + ": acc_field outside [0, 1]");
}

double window_mean(std::span<const double> losses, std::size_t window) {
  if (window == 0) throw InvalidArgument("loss window must be >= 1");
  if (losses.empty()) throw InvalidArgument("empty loss series");
  const std::size_t n = std::min(window, losses.size());
  const auto tail = losses.last(n);
  return std::accumulate(tail.begin(), tail.end(), 0.0) / static_cast<double>(n);
}

double diversity(const RunRecord& aug, const BaselineRecord& base, std::size_t window) {
  const double denom = window_mean(base.train_losses, window);
  if (!(denom > 0.0)) throw InvalidArgument("baseline mean training loss must be > 0");
  return window_mean(aug.train_losses, window) / denom;
}

double affinity(const RunRecord& rec) {
  if (!(rec.acc_val > 0.0)) {
    throw InvalidArgument("affinity undefined for " + rec.augmentation + ": validation accuracy is 0");
  }
  return rec.acc_field / rec.acc_val;
}

std::vector<MetricPoint> aggregate(std::span<const RunRecord> records, const BaselineRecord& base,
                                   std::size_t window) {
  struct Row {
    int replicate;
    double affinity;
    double diversity;
  };
  std::map<std::string, std::vector<Row>> groups;
  for (const RunRecord& rec : records) {
    rec.validate();
    groups[rec.augmentation].push_back({rec.replicate, affinity(rec), diversity(rec, base, window)});
  }

  std::vector<MetricPoint> points;
  points.reserve(groups.size());
  for (auto& [name, rows] : groups) {
    // Fixed summation order regardless of how the input was ordered.
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      return std::tie(a.replicate, a.affinity, a.diversity) < std::tie(b.replicate, b.affinity, b.diversity);
    });
    std::vector<double> aff;
    std::vector<double> div;
    for (const Row& r : rows) {
      aff.push_back(r.affinity);
      div.push_back(r.diversity);
    }
    const Stats a = mean_sd(aff);
    const Stats d = mean_sd(div);
    points.push_back({name, a.mean, d.mean, rows.size(), a.sd, d.sd});
  }
  return points;
}

}  // namespace geomaug::metrics

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace geomaug::metrics {

/// Number of trailing epochs averaged into a converged training loss.
inline constexpr std::size_t kDefaultLossWindow = 5;

/// One training run: per-epoch mean training loss plus final accuracies on the
/// held-out validation split and on field (shifted) data.
struct RunRecord {
  std::string augmentation;
  std::vector<double> train_losses;
  double acc_val = 0.0;
  double acc_field = 0.0;
  int replicate = 0;

  /// Throws InvalidArgument unless losses are non-empty, finite and positive and
  /// accuracies lie in [0, 1].
  void validate() const;
};

/// Training losses of the model trained without augmentation.
struct BaselineRecord {
  std::vector<double> train_losses;
};

struct MetricPoint {
  std::string augmentation;
  double affinity = 0.0;
  double diversity = 0.0;
  std::size_t n_replicates = 0;
  double affinity_std = 0.0;
  double diversity_std = 0.0;
};

/// Mean of the last min(window, size) values. window must be >= 1.
double window_mean(std::span<const double> losses, std::size_t window = kDefaultLossWindow);

/// Converged augmented loss over converged baseline loss.
double diversity(const RunRecord& aug, const BaselineRecord& base, std::size_t window = kDefaultLossWindow);

/// acc_field / acc_val; 1 means no distribution shift.
double affinity(const RunRecord& rec);

/// Group by augmentation name (output sorted by name) and reduce replicates to
/// mean and sample standard deviation. Independent of input order.
std::vector<MetricPoint> aggregate(std::span<const RunRecord> records, const BaselineRecord& base,
                                   std::size_t window = kDefaultLossWindow);

}  // namespace geomaug::metrics

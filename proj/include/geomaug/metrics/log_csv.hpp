#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geomaug/metrics/metrics.hpp"

namespace geomaug::metrics {

/// Parse a training log with header
///   augmentation,replicate,epoch,train_loss,acc_val,acc_field
/// (any column order). One row per epoch; the accuracy columns are read from
/// each run's last epoch and may be empty elsewhere. Throws ConfigError naming
/// the missing column or the offending line.
std::vector<RunRecord> read_run_log(std::istream& in);

/// Epoch-wise mean over every replicate named `name` (losses aligned by epoch
/// order). Throws ConfigError when no record has that name.
BaselineRecord baseline_from(std::span<const RunRecord> records, std::string_view name);

/// augmentation,affinity,affinity_std,diversity,diversity_std,n
void write_metrics_csv(std::ostream& out, std::span<const MetricPoint> points);

/// Affinity (x) versus diversity (y) scatter with one-sigma error bars.
std::string scatter_svg(std::span<const MetricPoint> points);

}  // namespace geomaug::metrics

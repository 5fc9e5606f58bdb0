#include "geomaug/metrics/log_csv.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "geomaug/core/error.hpp"

namespace geomaug::metrics {

namespace {

constexpr std::array<std::string_view, 6> kColumns{"augmentation", "replicate", "epoch",
                                                   "train_loss",   "acc_val",   "acc_field"};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, std::size_t line, std::string_view column) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError(fmt::format("line {}: column {}: '{}' is not a number", line, column, s));
}

int parse_int(const std::string& s, std::size_t line, std::string_view column) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError(fmt::format("line {}: column {}: '{}' is not an integer", line, column, s));
  }
  return v;
}

struct EpochRow {
  int epoch;
  double loss;
  std::optional<double> acc_val;
  std::optional<double> acc_field;
};

std::string svg_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<RunRecord> read_run_log(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("training log is empty; expected a header row");
  const auto header = split(line);
  std::array<std::size_t, kColumns.size()> col{};
  for (std::size_t c = 0; c < kColumns.size(); ++c) {
    const auto it = std::find(header.begin(), header.end(), kColumns[c]);
    if (it == header.end()) throw ConfigError(fmt::format("training log header is missing column '{}'", kColumns[c]));
    col[c] = static_cast<std::size_t>(it - header.begin());
  }

  std::map<std::pair<std::string, int>, std::vector<EpochRow>> runs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split(line);
    if (fields.size() < header.size()) fields.resize(header.size());
    if (fields.size() > header.size()) {
      throw ConfigError(fmt::format("line {}: expected {} fields, found {}", line_no, header.size(), fields.size()));
    }
    const std::string& name = fields[col[0]];
    if (name.empty()) throw ConfigError(fmt::format("line {}: empty augmentation name", line_no));
    EpochRow row{parse_int(fields[col[2]], line_no, kColumns[2]), parse_double(fields[col[3]], line_no, kColumns[3]),
                 std::nullopt, std::nullopt};
    if (!fields[col[4]].empty()) row.acc_val = parse_double(fields[col[4]], line_no, kColumns[4]);
    if (!fields[col[5]].empty()) row.acc_field = parse_double(fields[col[5]], line_no, kColumns[5]);
    runs[{name, parse_int(fields[col[1]], line_no, kColumns[1])}].push_back(row);
  }

  std::vector<RunRecord> records;
  for (auto& [key, rows] : runs) {
    std::stable_sort(rows.begin(), rows.end(), [](const EpochRow& a, const EpochRow& b) { return a.epoch < b.epoch; });
    const EpochRow& last = rows.back();
    if (!last.acc_val || !last.acc_field) {
      throw ConfigError(fmt::format("{} replicate {}: final epoch {} has no acc_val/acc_field", key.first,
                                    key.second, last.epoch));
    }
    RunRecord rec{key.first, {}, *last.acc_val, *last.acc_field, key.second};
    for (const auto& r : rows) rec.train_losses.push_back(r.loss);
    try {
      rec.validate();
    } catch (const InvalidArgument& ex) {
      throw ConfigError(ex.what());
    }
    records.push_back(std::move(rec));
  }
  return records;
}

BaselineRecord baseline_from(std::span<const RunRecord> records, std::string_view name) {
  std::vector<double> sums;
  std::vector<int> counts;
  bool found = false;
  for (const RunRecord& rec : records) {
    if (rec.augmentation != name) continue;
    found = true;
    if (rec.train_losses.size() > sums.size()) {
      sums.resize(rec.train_losses.size(), 0.0);
      counts.resize(rec.train_losses.size(), 0);
    }
    for (std::size_t i = 0; i < rec.train_losses.size(); ++i) {
      sums[i] += rec.train_losses[i];
      ++counts[i];
    }
  }
  if (!found) throw ConfigError(fmt::format("baseline '{}' not found in training log", name));
  BaselineRecord base;
  for (std::size_t i = 0; i < sums.size(); ++i) base.train_losses.push_back(sums[i] / counts[i]);
  return base;
}

void write_metrics_csv(std::ostream& out, std::span<const MetricPoint> points) {
  out << "augmentation,affinity,affinity_std,diversity,diversity_std,n\n";
  for (const auto& p : points) {
    out << fmt::format("{},{},{},{},{},{}\n", p.augmentation, p.affinity, p.affinity_std, p.diversity,
                       p.diversity_std, p.n_replicates);
  }
}

std::string scatter_svg(std::span<const MetricPoint> points) {
  constexpr double kWidth = 560;
  constexpr double kHeight = 420;
  constexpr double kMargin = 60;

  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
  if (!points.empty()) {
    x_lo = y_lo = std::numeric_limits<double>::infinity();
    x_hi = y_hi = -std::numeric_limits<double>::infinity();
    for (const auto& p : points) {
      x_lo = std::min(x_lo, p.affinity - p.affinity_std);
      x_hi = std::max(x_hi, p.affinity + p.affinity_std);
      y_lo = std::min(y_lo, p.diversity - p.diversity_std);
      y_hi = std::max(y_hi, p.diversity + p.diversity_std);
    }
    const double px = std::max(0.05 * (x_hi - x_lo), 0.01);
    const double py = std::max(0.05 * (y_hi - y_lo), 0.01);
    x_lo -= px, x_hi += px, y_lo -= py, y_hi += py;
  }
  const auto sx = [&](double v) { return kMargin + (v - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin); };
  const auto sy = [&](double v) { return kHeight - kMargin - (v - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin); };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<line x1=\"{2}\" y1=\"{3}\" x2=\"{4}\" y2=\"{3}\" stroke=\"black\"/>\n"
      "<line x1=\"{2}\" y1=\"{3}\" x2=\"{2}\" y2=\"{2}\" stroke=\"black\"/>\n"
      "<text x=\"{5}\" y=\"{6}\" text-anchor=\"middle\" font-size=\"14\">Affinity</text>\n"
      "<text x=\"16\" y=\"{7}\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 {7})\">Diversity</text>\n",
      kWidth, kHeight, kMargin, kHeight - kMargin, kWidth - kMargin, kWidth / 2, kHeight - 16, kHeight / 2);
  svg += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">{:.3g}</text>\n", kMargin,
                     kHeight - kMargin + 16, x_lo);
  svg += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">{:.3g}</text>\n",
                     kWidth - kMargin, kHeight - kMargin + 16, x_hi);
  svg += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"end\">{:.3g}</text>\n", kMargin - 6,
                     kHeight - kMargin, y_lo);
  svg += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"end\">{:.3g}</text>\n", kMargin - 6,
                     kMargin + 4, y_hi);

  for (const auto& p : points) {
    const double cx = sx(p.affinity);
    const double cy = sy(p.diversity);
    if (p.affinity_std > 0) {
      svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"gray\"/>\n",
                         sx(p.affinity - p.affinity_std), cy, sx(p.affinity + p.affinity_std), cy);
    }
    if (p.diversity_std > 0) {
      svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"gray\"/>\n", cx,
                         sy(p.diversity - p.diversity_std), cx, sy(p.diversity + p.diversity_std));
    }
    svg += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"5\" fill=\"steelblue\"/>\n", cx, cy);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"12\">{}</text>\n", cx + 8, cy - 8,
                       svg_escape(p.augmentation));
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace geomaug::metrics

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "geomaug/core/error.hpp"
#include "geomaug/metrics/log_csv.hpp"
#include "geomaug/metrics/metrics.hpp"

namespace geomaug::metrics {
namespace {

RunRecord run(std::string name, std::vector<double> losses, double acc_val, double acc_field, int rep = 0) {
  return RunRecord{std::move(name), std::move(losses), acc_val, acc_field, rep};
}

TEST(Diversity, DirectRatio) {
  EXPECT_DOUBLE_EQ(diversity(run("a", {0.5}, 1, 1), BaselineRecord{{0.25}}), 2.0);
  EXPECT_DOUBLE_EQ(diversity(run("a", {0.4, 0.4, 0.4, 0.5, 0.5}, 1, 1), BaselineRecord{{0.2, 0.2, 0.2, 0.2, 0.2}}),
                   2.2);
}

TEST(Diversity, BaselineAgainstItselfIsOne) {
  std::mt19937 gen(1);
  std::uniform_real_distribution<double> loss(0.01, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> l(1 + gen() % 40);
    for (auto& v : l) v = loss(gen);
    EXPECT_EQ(diversity(run("b", l, 1, 1), BaselineRecord{l}), 1.0);
  }
}

TEST(Diversity, WindowUsesTrailingEpochs) {
  const std::vector<double> l{9, 9, 9, 1, 2, 3, 4, 5};
  EXPECT_DOUBLE_EQ(window_mean(l), 3.0);
  EXPECT_DOUBLE_EQ(window_mean(l, 2), 4.5);
  EXPECT_DOUBLE_EQ(window_mean(l, 100), 42.0 / 8);
  EXPECT_THROW(window_mean(l, 0), InvalidArgument);
  EXPECT_THROW(window_mean({}, 3), InvalidArgument);
}

TEST(Diversity, RejectsNonPositiveBaseline) {
  EXPECT_THROW(diversity(run("a", {0.5}, 1, 1), BaselineRecord{{0.0}}), InvalidArgument);
  EXPECT_THROW(diversity(run("a", {0.5}, 1, 1), BaselineRecord{{-1.0}}), InvalidArgument);
}

TEST(Affinity, Values) {
  EXPECT_NEAR(affinity(run("a", {1}, 0.95, 0.85)), 0.894737, 1e-6);
  EXPECT_EQ(affinity(run("a", {1}, 0.73, 0.73)), 1.0);
  EXPECT_EQ(affinity(run("a", {1}, 0.6, 0.0)), 0.0);
  EXPECT_THROW(affinity(run("a", {1}, 0.0, 0.3)), InvalidArgument);
}

TEST(Affinity, EqualAccuraciesGiveExactlyOne) {
  std::mt19937 gen(2);
  std::uniform_real_distribution<double> acc(1e-6, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = acc(gen);
    EXPECT_EQ(affinity(run("a", {1}, a, a)), 1.0);
  }
}

TEST(Affinity, CommonScaleCancels) {
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> acc(0.05, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double v = acc(gen), f = acc(gen), c = acc(gen);
    EXPECT_NEAR(affinity(run("a", {1}, v * c, f * c)), affinity(run("a", {1}, v, f)), 1e-12 * (f / v + 1));
  }
}

TEST(Aggregate, ReplicateStatistics) {
  const BaselineRecord base{{0.5}};
  const std::vector<RunRecord> recs{run("x", {1.0}, 1.0, 0.8, 0), run("x", {1.0}, 1.0, 0.9, 1)};
  const auto pts = aggregate(recs, base);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_DOUBLE_EQ(pts[0].affinity, 0.85);
  EXPECT_NEAR(pts[0].affinity_std, 0.0707107, 1e-7);
  EXPECT_DOUBLE_EQ(pts[0].diversity, 2.0);
  EXPECT_EQ(pts[0].diversity_std, 0.0);
  EXPECT_EQ(pts[0].n_replicates, 2u);
}

TEST(Aggregate, SingleAndEmpty) {
  const BaselineRecord base{{0.5}};
  EXPECT_TRUE(aggregate({}, base).empty());
  const std::vector<RunRecord> one{run("solo", {0.25}, 0.5, 0.4)};
  const auto pts = aggregate(one, base);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].affinity_std, 0.0);
  EXPECT_EQ(pts[0].diversity_std, 0.0);
  EXPECT_EQ(pts[0].n_replicates, 1u);
}

TEST(Aggregate, SortedAndPermutationInvariant) {
  std::mt19937 gen(4);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  std::vector<RunRecord> recs;
  for (const char* name : {"zeta", "alpha", "mid"}) {
    for (int r = 0; r < 5; ++r) recs.push_back(run(name, {u(gen), u(gen), u(gen)}, u(gen), u(gen) * 0.9, r));
  }
  const BaselineRecord base{{0.3, 0.2}};
  const auto ref = aggregate(recs, base);
  ASSERT_EQ(ref.size(), 3u);
  EXPECT_EQ(ref[0].augmentation, "alpha");
  EXPECT_EQ(ref[2].augmentation, "zeta");
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(recs.begin(), recs.end(), gen);
    const auto got = aggregate(recs, base);
    for (std::size_t i = 0; i < ref.size(); ++i) {
      EXPECT_EQ(got[i].augmentation, ref[i].augmentation);
      EXPECT_EQ(got[i].affinity, ref[i].affinity);
      EXPECT_EQ(got[i].diversity, ref[i].diversity);
      EXPECT_EQ(got[i].affinity_std, ref[i].affinity_std);
      EXPECT_EQ(got[i].diversity_std, ref[i].diversity_std);
      EXPECT_TRUE(std::isfinite(got[i].affinity) && std::isfinite(got[i].diversity));
    }
  }
}

TEST(Records, Validation) {
  EXPECT_THROW(run("a", {}, 0.5, 0.5).validate(), InvalidArgument);
  EXPECT_THROW(run("a", {0.0}, 0.5, 0.5).validate(), InvalidArgument);
  EXPECT_THROW(run("a", {0.1}, 1.5, 0.5).validate(), InvalidArgument);
  EXPECT_NO_THROW(run("a", {0.1}, 1.0, 0.0).validate());
}

// ---------------------------------------------------------------------------
// CSV

constexpr const char* kLog =
    "augmentation,replicate,epoch,train_loss,acc_val,acc_field\n"
    "none,0,1,0.9,,\n"
    "none,0,2,0.5,,\n"
    "none,0,3,0.4,0.95,0.80\n"
    "tenengrad,0,1,1.2,,\n"
    "tenengrad,0,2,0.9,,\n"
    "tenengrad,0,3,0.7,0.90,0.81\n"
    "tenengrad,1,1,1.0,,\n"
    "tenengrad,1,2,0.8,,\n"
    "tenengrad,1,3,0.6,0.92,0.85\n";

TEST(LogCsv, ParsesRuns) {
  std::istringstream in(kLog);
  const auto recs = read_run_log(in);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0].augmentation, "none");
  EXPECT_EQ(recs[0].train_losses, (std::vector<double>{0.9, 0.5, 0.4}));
  EXPECT_EQ(recs[2].replicate, 1);
  EXPECT_DOUBLE_EQ(recs[2].acc_field, 0.85);
}

TEST(LogCsv, ColumnOrderDoesNotMatter) {
  std::istringstream in(
      "epoch,acc_field,augmentation,train_loss,replicate,acc_val\n"
      "1,,a,0.3,0,\n"
      "2,0.5,a,0.2,0,0.6\n");
  const auto recs = read_run_log(in);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].train_losses, (std::vector<double>{0.3, 0.2}));
  EXPECT_DOUBLE_EQ(recs[0].acc_val, 0.6);
}

TEST(LogCsv, MissingColumnIsNamed) {
  std::istringstream in("augmentation,replicate,epoch,acc_val,acc_field\nnone,0,1,0.5,0.5\n");
  try {
    read_run_log(in);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("train_loss"), std::string::npos) << e.what();
  }
}

TEST(LogCsv, BadNumberIsReported) {
  std::istringstream in("augmentation,replicate,epoch,train_loss,acc_val,acc_field\nnone,0,1,abc,0.5,0.5\n");
  EXPECT_THROW(read_run_log(in), ConfigError);
}

TEST(LogCsv, HandBuiltLogsMatchSpreadsheet) {
  std::istringstream in(kLog);
  const auto recs = read_run_log(in);
  const BaselineRecord base = baseline_from(recs, "none");
  const auto pts = aggregate(recs, base, 5);
  ASSERT_EQ(pts.size(), 2u);
  // none: mean(0.9, 0.5, 0.4) = 0.6; tenengrad replicates 0.9333.. and 0.8.
  EXPECT_NEAR(pts[0].diversity, 1.0, 1e-9);
  EXPECT_NEAR(pts[0].affinity, 0.80 / 0.95, 1e-9);
  EXPECT_NEAR(pts[1].diversity, ((2.8 / 3) / 0.6 + (2.4 / 3) / 0.6) / 2, 1e-9);
  EXPECT_NEAR(pts[1].diversity_std, std::abs((2.8 / 3) / 0.6 - (2.4 / 3) / 0.6) / std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(pts[1].affinity, (0.81 / 0.90 + 0.85 / 0.92) / 2, 1e-9);
  EXPECT_THROW(baseline_from(recs, "absent"), ConfigError);
}

TEST(LogCsv, BaselineAveragesReplicatesEpochWise) {
  const std::vector<RunRecord> recs{run("b", {1.0, 0.5}, 1, 1, 0), run("b", {0.6, 0.3}, 1, 1, 1)};
  EXPECT_EQ(baseline_from(recs, "b").train_losses, (std::vector<double>{0.8, 0.4}));
}

TEST(LogCsv, WritesMetricsTable) {
  const std::vector<MetricPoint> pts{{"tenengrad", 0.9, 1.5, 2, 0.01, 0.1}};
  std::ostringstream out;
  write_metrics_csv(out, pts);
  EXPECT_EQ(out.str(), "augmentation,affinity,affinity_std,diversity,diversity_std,n\ntenengrad,0.9,0.01,1.5,0.1,2\n");
  const std::string svg = scatter_svg(pts);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("tenengrad"), std::string::npos);
}

}  // namespace
}  // namespace geomaug::metrics

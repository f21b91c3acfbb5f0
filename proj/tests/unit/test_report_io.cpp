#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "mde/monte_carlo.hpp"
#include "mde/report_io.hpp"

namespace mde {
namespace {

McReport sample_report() {
  McConfig cfg = default_config(Experiment::LR);
  cfg.replications = 5;
  cfg.distribution.family = DistributionFamily::Laplace;
  return monte_carlo(cfg);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string f; std::getline(ss, f, ',');) out.push_back(f);
  return out;
}

TEST(ReportCsv, HeaderAndRows) {
  const McReport report = sample_report();
  std::istringstream in(report_to_csv(report));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "experiment,distribution,estimator,parameter,bias,se,mse,reps_used");
  std::size_t i = 0;
  while (std::getline(in, line)) {
    ASSERT_LT(i, report.rows.size());
    const auto f = split(line);
    ASSERT_EQ(f.size(), 8u);
    const McRow& row = report.rows[i++];
    EXPECT_EQ(f[0], "lr");
    EXPECT_EQ(f[1], "laplace");
    EXPECT_EQ(f[2], row.estimator);
    EXPECT_EQ(f[3], row.parameter);
    EXPECT_EQ(std::stod(f[4]), row.bias);
    EXPECT_EQ(std::stod(f[5]), row.se);
    EXPECT_EQ(std::stod(f[6]), row.mse);
    EXPECT_EQ(std::stoi(f[7]), row.reps_used);
  }
  EXPECT_EQ(i, report.rows.size());
}

TEST(ReportJson, MetadataAndRows) {
  const McReport report = sample_report();
  const auto doc = nlohmann::json::parse(report_to_json(report));
  const auto& meta = doc.at("metadata");
  EXPECT_EQ(meta.at("experiment"), "lr");
  EXPECT_EQ(meta.at("seed"), 1);
  EXPECT_EQ(meta.at("replications"), 5);
  EXPECT_EQ(meta.at("n"), 50);
  EXPECT_TRUE(meta.contains("elapsed_seconds"));
  ASSERT_EQ(doc.at("rows").size(), report.rows.size());
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = doc["rows"][i];
    EXPECT_EQ(r.at("estimator"), report.rows[i].estimator);
    EXPECT_EQ(r.at("mse").get<double>(), report.rows[i].mse);
    EXPECT_EQ(r.at("reps_used"), report.rows[i].reps_used);
  }
}

}  // namespace
}  // namespace mde

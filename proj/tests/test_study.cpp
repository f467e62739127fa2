#include <gtest/gtest.h>

#include <filesystem>

#include "saacg/study.hpp"

namespace saacg {
namespace {

namespace fs = std::filesystem;

StudyConfig smoke_config() {
  StudyConfig cfg;
  cfg.kind = PdeKind::AffineLinear;
  cfg.n = 8;
  cfg.M = 5;
  cfg.data = reference_problem_data(PdeKind::AffineLinear);
  cfg.N_ref = 16;
  cfg.N_grid = {2, 4, 8};
  cfg.replications = 2;
  cfg.base_seed = 3;
  cfg.solver = SolverConfig{1e-8, 100, LineSearch::Auto};
  cfg.reference_solver = SolverConfig{1e-10, 200, LineSearch::Auto};
  return cfg;
}

TEST(StudyConfig, ValidatesGrid) {
  StudyConfig cfg = smoke_config();
  cfg.N_grid = {4, 2};
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg.N_grid = {2, 4};
  cfg.N_ref = 4;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
}

TEST(Reference, DeterministicAndOptimalAtItself) {
  const StudyConfig cfg = smoke_config();
  const Reference a = build_reference(cfg);
  const Reference b = build_reference(cfg);
  EXPECT_TRUE(a.u_ref.values == b.u_ref.values);
  EXPECT_EQ(a.value, b.value);
  // metrics of the reference control against itself
  EXPECT_NEAR(a.problem.objective(a.u_ref) - a.value, 0.0, 1e-15);
  EXPECT_LE(a.problem.gap(a.u_ref).gap, cfg.reference_solver.gap_tol * 10);
}

TEST(Replication, DeterministicRows) {
  const StudyConfig cfg = smoke_config();
  const Reference ref = build_reference(cfg);
  const ReplicationRow r1 = run_replication(cfg, ref, 4, 0);
  const ReplicationRow r2 = run_replication(cfg, ref, 4, 0);
  EXPECT_TRUE(r1.ok);
  EXPECT_EQ(r1.obj_gap, r2.obj_gap);
  EXPECT_EQ(r1.l1_dist, r2.l1_dist);
  EXPECT_EQ(r1.ref_gap, r2.ref_gap);
  // different replication index gives a different draw
  const ReplicationRow r3 = run_replication(cfg, ref, 4, 1);
  EXPECT_NE(r1.saa_value, r3.saa_value);
}

TEST(Replication, ObjectiveGapNonnegative) {
  const StudyConfig cfg = smoke_config();
  const Reference ref = build_reference(cfg);
  for (int N : cfg.N_grid)
    for (int rep = 0; rep < cfg.replications; ++rep) {
      const ReplicationRow r = run_replication(cfg, ref, N, rep);
      ASSERT_TRUE(r.ok) << r.status;
      EXPECT_GE(r.obj_gap, -1e-9);
      EXPECT_GE(r.ref_gap, -1e-9);
      EXPECT_GE(r.l1_dist, 0.0);
    }
}

TEST(Study, SmokeRunEmitsArtifacts) {
  StudyConfig cfg = smoke_config();
  const std::string dir =
      (fs::temp_directory_path() / "saacg_study_smoke").string();
  fs::remove_all(dir);
  cfg.output_dir = dir;
  const StudyReport report = run_study(cfg);
  EXPECT_TRUE(report.valid);
  EXPECT_EQ(report.rows.size(), cfg.N_grid.size() * cfg.replications);
  EXPECT_EQ(report.summary.size(), cfg.N_grid.size());
  for (const auto& s : report.summary) {
    EXPECT_GE(s.mean_obj_gap, -1e-9);
    EXPECT_GE(s.mean_gap, -1e-9);
  }
  for (const char* f : {"raw.csv", "summary.csv", "rates.csv", "grid.csv",
                        "rate_obj_gap.svg", "rate_l1_dist.svg", "rate_ref_gap.svg",
                        "control_ref.csv", "control_ref.svg", "reference.csv"})
    EXPECT_TRUE(fs::exists(dir + "/" + f)) << f;

  // report regeneration from raw rows is lossless for the summary
  const StudyReport again =
      report_from_rows(load_raw_csv(dir + "/raw.csv"), cfg.N_grid, report.ref_value);
  ASSERT_EQ(again.summary.size(), report.summary.size());
  for (std::size_t i = 0; i < report.summary.size(); ++i) {
    EXPECT_EQ(again.summary[i].mean_obj_gap, report.summary[i].mean_obj_gap);
    EXPECT_EQ(again.summary[i].mean_l1, report.summary[i].mean_l1);
    EXPECT_EQ(again.summary[i].mean_gap, report.summary[i].mean_gap);
  }
  EXPECT_EQ(again.rate_obj_gap.slope, report.rate_obj_gap.slope);
  fs::remove_all(dir);
}

TEST(Study, BangBangFractionHelper) {
  ControlField u{Eigen::VectorXd::Zero(10)};
  u.values[0] = 1.0;
  u.values[1] = -1.0;
  u.values[2] = 0.5;  // not a bang-bang-off level
  EXPECT_NEAR(bang_bang_off_fraction(u, -1.0, 1.0), 0.9, 1e-15);
}

TEST(Study, RawCsvRoundTrip) {
  std::vector<ReplicationRow> rows;
  for (int i = 0; i < 4; ++i) {
    ReplicationRow r;
    r.N = 2 << i;
    r.rep = i;
    r.obj_gap = 0.1 / (i + 1);
    r.l1_dist = 0.2 / (i + 1);
    r.ref_gap = 0.3 / (i + 1);
    r.ok = i != 2;
    rows.push_back(r);
  }
  const std::string path = (fs::temp_directory_path() / "saacg_raw.csv").string();
  save_raw_csv(rows, path);
  const auto loaded = load_raw_csv(path);
  ASSERT_EQ(loaded.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(loaded[i].N, rows[i].N);
    EXPECT_EQ(loaded[i].obj_gap, rows[i].obj_gap);
    EXPECT_EQ(loaded[i].ok, rows[i].ok);
  }
  fs::remove(path);
}

TEST(Study, TooManyFailuresInvalidatesReport) {
  std::vector<ReplicationRow> rows;
  for (int rep = 0; rep < 4; ++rep) {
    ReplicationRow r;
    r.N = 2;
    r.rep = rep;
    r.obj_gap = r.l1_dist = r.ref_gap = 0.1;
    r.ok = rep > 0;  // 25% failed
    rows.push_back(r);
  }
  for (int rep = 0; rep < 4; ++rep) {
    ReplicationRow r;
    r.N = 4;
    r.rep = rep;
    r.obj_gap = r.l1_dist = r.ref_gap = 0.05;
    rows.push_back(r);
  }
  ReplicationRow r8;
  r8.N = 8;
  r8.rep = 0;
  r8.obj_gap = r8.l1_dist = r8.ref_gap = 0.02;
  rows.push_back(r8);
  const StudyReport report = report_from_rows(rows, {2, 4, 8}, 0.0);
  EXPECT_FALSE(report.valid);
}

}  // namespace
}  // namespace saacg

// Command-line driver: nominal/reference solves, convergence-rate studies,
// sample-size bound calculator and report regeneration.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "saacg/bounds.hpp"
#include "saacg/composite.hpp"
#include "saacg/cond_grad.hpp"
#include "saacg/config.hpp"
#include "saacg/study.hpp"
#include "saacg/svg.hpp"

namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "saacg 0.1.0";

struct GlobalOpts {
  std::string config_path;
  std::string out_dir = "out";
  unsigned threads = 0;
  std::optional<std::uint64_t> seed;
};

saacg::CliConfig load_config(const GlobalOpts& g) {
  saacg::CliConfig cfg;
  if (!g.config_path.empty()) cfg = saacg::parse_config_file(g.config_path);
  if (g.seed) cfg.seed = *g.seed;
  return cfg;
}

void write_manifest(const GlobalOpts& g, const saacg::CliConfig& cfg,
                    const std::string& command) {
  fs::create_directories(g.out_dir);
  std::ofstream out(g.out_dir + "/manifest.txt");
  out << "version = " << kVersion << "\n"
      << "command = " << command << "\n"
      << "seed = " << cfg.seed << "\n"
      << "threads = " << saacg::num_threads() << "\n"
      << "config_file = " << (g.config_path.empty() ? "<defaults>" : g.config_path)
      << "\n\n# effective configuration\n"
      << "[mesh]\nn = " << cfg.n << "\n"
      << "[field]\nM = " << cfg.M << "\ncorr_len = " << cfg.corr_len
      << "\namplitude = " << cfg.amplitude << "\nkappa_floor = " << cfg.kappa_floor
      << "\n[problem]\nkind = "
      << (cfg.kind == saacg::PdeKind::AffineLinear ? "affine" : "bilinear")
      << "\nbeta = " << cfg.problem_data().beta
      << "\nlower = " << cfg.problem_data().lower
      << "\nupper = " << cfg.problem_data().upper
      << "\n[solver]\ngap_tol = " << cfg.solver.gap_tol
      << "\nmax_iters = " << cfg.solver.max_iters
      << "\nreference_max_iters = " << cfg.reference_max_iters
      << "\n[study]\nN_ref = " << cfg.N_ref << "\nN_grid = ";
  for (std::size_t i = 0; i < cfg.N_grid.size(); ++i)
    out << (i ? "," : "") << cfg.N_grid[i];
  out << "\nreplications = " << cfg.replications << "\nseed = " << cfg.seed
      << "\n";
}

int cmd_solve_nominal(const GlobalOpts& g) {
  const saacg::CliConfig cfg = load_config(g);
  write_manifest(g, cfg, "solve-nominal");
  const saacg::Mesh mesh = saacg::build_mesh(cfg.n);
  const saacg::KLFieldSpec spec =
      saacg::default_kl_spec(cfg.M, cfg.corr_len, cfg.amplitude, cfg.kappa_floor);
  // nominal problem: the single sample xi = E[xi] = 0
  saacg::SampleSet nominal;
  nominal.M = spec.M;
  nominal.samples.push_back(Eigen::VectorXd::Zero(spec.M));
  saacg::CompositeProblem problem(cfg.kind, cfg.problem_data(), spec,
                                  std::move(nominal), mesh);
  saacg::SolverConfig solver = cfg.solver;
  const saacg::SolveTrace trace =
      saacg::solve(problem, saacg::zero_control(mesh), solver);
  trace.save_csv(g.out_dir + "/trace_nominal.csv");
  saacg::save_control_csv(trace.final_u, g.out_dir + "/control_nominal.csv");
  saacg::save_control_heatmap_svg(mesh, trace.final_u,
                                  g.out_dir + "/control_nominal.svg",
                                  cfg.problem_data().lower, cfg.problem_data().upper);
  std::cout << "nominal solve: " << trace.iterations() << " iterations, final gap "
            << trace.gaps.back() << ", objective " << trace.objectives.back()
            << "\n";
  return 0;
}

int cmd_solve_reference(const GlobalOpts& g) {
  const saacg::CliConfig cfg = load_config(g);
  write_manifest(g, cfg, "solve-reference");
  const saacg::StudyConfig study = cfg.study_config(g.out_dir);
  const saacg::Reference ref = saacg::build_reference(study);
  saacg::save_control_csv(ref.u_ref, g.out_dir + "/control_ref.csv");
  saacg::save_control_heatmap_svg(ref.problem.mesh(), ref.u_ref,
                                  g.out_dir + "/control_ref.svg",
                                  study.data.lower, study.data.upper);
  std::ofstream meta(g.out_dir + "/reference.csv");
  meta.precision(17);
  meta << "ref_value,bang_bang_fraction\n"
       << ref.value << ","
       << saacg::bang_bang_off_fraction(ref.u_ref, study.data.lower,
                                        study.data.upper)
       << "\n";
  std::cout << "reference solve: objective " << ref.value << ", N_ref "
            << cfg.N_ref << "\n";
  return 0;
}

int cmd_run_study(const GlobalOpts& g) {
  const saacg::CliConfig cfg = load_config(g);
  write_manifest(g, cfg, "run-study");
  const saacg::StudyReport report =
      saacg::run_study(cfg.study_config(g.out_dir));
  std::cout << "study " << (report.valid ? "completed" : "INVALID (too many failures)")
            << "\n  slope obj_gap  = " << report.rate_obj_gap.slope
            << "\n  slope l1_dist  = " << report.rate_l1.slope
            << "\n  slope ref_gap  = " << report.rate_gap.slope
            << "\n  bang-bang-off fraction = " << report.bang_bang_fraction << "\n";
  return report.valid ? 0 : 1;
}

int cmd_report(const std::string& dir) {
  if (!fs::exists(dir + "/raw.csv") || !fs::exists(dir + "/grid.csv")) {
    std::cerr << "report: " << dir << " is not a completed study directory\n";
    return 3;
  }
  std::vector<int> grid;
  {
    std::ifstream in(dir + "/grid.csv");
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line))
      if (!line.empty()) grid.push_back(std::stoi(line));
  }
  double ref_value = 0.0;
  if (fs::exists(dir + "/reference.csv")) {
    std::ifstream in(dir + "/reference.csv");
    std::string line;
    std::getline(in, line);
    if (std::getline(in, line))
      ref_value = std::stod(line.substr(0, line.find(',')));
  }
  const saacg::StudyReport report =
      saacg::report_from_rows(saacg::load_raw_csv(dir + "/raw.csv"), grid, ref_value);
  saacg::persist_report(report, grid, dir);
  std::cout << "report regenerated in " << dir << "\n";
  return 0;
}

saacg::BoundInputs parse_covering(const std::string& model,
                                  saacg::BoundInputs base) {
  const auto colon = model.find(':');
  if (colon == std::string::npos)
    throw saacg::InvalidArgument("covering model must be const:<C> or poly:<s>");
  const std::string name = model.substr(0, colon);
  const double param = std::stod(model.substr(colon + 1));
  if (name == "const") {
    base.covering = [param](double) { return std::max(1.0, param); };
  } else if (name == "poly") {
    // N(nu) = max(1, ceil(nu^{-s}))
    base.covering = [param](double nu) {
      return std::max(1.0, std::ceil(std::pow(nu, -param)));
    };
  } else {
    throw saacg::InvalidArgument("unknown covering model '" + name + "'");
  }
  return base;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SAA conditional-gradient solver for elliptic control under uncertainty"};
  app.set_version_flag("--version", kVersion);

  GlobalOpts g;
  app.add_option("--config", g.config_path, "configuration file");
  app.add_option("--out", g.out_dir, "output directory");
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "base seed override");

  auto* nominal = app.add_subcommand("solve-nominal", "solve the mean-parameter problem");
  auto* reference = app.add_subcommand("solve-reference", "solve the QMC reference problem");
  auto* study = app.add_subcommand("run-study", "run the convergence-rate study");
  auto* bound = app.add_subcommand("bound", "theoretical sample-size estimate");
  auto* report = app.add_subcommand("report", "regenerate summary and plots");
  app.require_subcommand(1);

  double b_r = 1.0, b_tau = 1.0, b_L = 1.0;
  std::vector<double> b_eps;
  std::string b_cov = "const:1";
  bound->add_option("--r", b_r, "feasible-set diameter r_ad");
  bound->add_option("--tau", b_tau, "sub-Gaussian constant");
  bound->add_option("--L", b_L, "gradient Lipschitz constant");
  bound->add_option("--eps", b_eps, "target accuracies")->required();
  bound->add_option("--covering", b_cov, "covering model const:<C> or poly:<s>");

  std::string report_dir;
  report->add_option("dir", report_dir, "study directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  saacg::set_num_threads(g.threads);
  if (seed_opt->count()) g.seed = seed_value;

  try {
    if (*nominal) return cmd_solve_nominal(g);
    if (*reference) return cmd_solve_reference(g);
    if (*study) return cmd_run_study(g);
    if (*report) return cmd_report(report_dir);
    if (*bound) {
      saacg::BoundInputs inp;
      inp.r_ad = b_r;
      inp.tau = b_tau;
      inp.L = b_L;
      inp = parse_covering(b_cov, inp);
      for (double eps : b_eps)
        std::cout << saacg::sample_size_bound(inp, eps) << "\n";
      return 0;
    }
  } catch (const saacg::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "saacg/common.hpp"
#include "saacg/cond_grad.hpp"
#include "saacg/pde.hpp"
#include "saacg/study.hpp"

namespace saacg {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Parsed `key = value` configuration with [section] headers. Defaults
/// mirror the reference experiment: n=64, M=100, corr_len=1, N_ref=8192,
/// beta and bounds per model. Unknown sections or keys are rejected with a
/// line diagnostic.
struct CliConfig {
  PdeKind kind = PdeKind::AffineLinear;
  int n = 64;
  int M = 100;
  double corr_len = 1.0;
  double amplitude = 0.04;
  double kappa_floor = 0.1;
  std::optional<double> beta;   // model default when unset
  std::optional<double> lower;
  std::optional<double> upper;
  SolverConfig solver;
  int N_ref = 8192;
  std::vector<int> N_grid = {2, 8, 32, 128};
  int replications = 40;
  std::uint64_t seed = 0;
  int reference_max_iters = 500;

  std::string echo;  // normalized text for the provenance manifest

  ProblemData problem_data() const {
    ProblemData d = reference_problem_data(kind);
    if (beta) d.beta = *beta;
    if (lower) d.lower = *lower;
    if (upper) d.upper = *upper;
    return d;
  }

  StudyConfig study_config(const std::string& output_dir) const {
    StudyConfig s;
    s.kind = kind;
    s.n = n;
    s.M = M;
    s.corr_len = corr_len;
    s.amplitude = amplitude;
    s.kappa_floor = kappa_floor;
    s.data = problem_data();
    s.N_ref = N_ref;
    s.N_grid = N_grid;
    s.replications = replications;
    s.base_seed = seed;
    s.solver = solver;
    s.reference_solver = SolverConfig{solver.gap_tol, reference_max_iters,
                                      LineSearch::Auto};
    s.output_dir = output_dir;
    return s;
  }
};

namespace detail {

[[noreturn]] inline void config_fail(int line, int col, const std::string& msg) {
  throw ConfigError("config:" + std::to_string(line) + ":" + std::to_string(col) +
                    ": " + msg);
}

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<int> parse_int_list(const std::string& s, int line) {
  std::vector<int> out;
  std::istringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) config_fail(line, 1, "empty entry in integer list");
    try {
      out.push_back(std::stoi(tok));
    } catch (...) {
      config_fail(line, 1, "invalid integer '" + tok + "'");
    }
  }
  if (out.empty()) config_fail(line, 1, "empty integer list");
  return out;
}

}  // namespace detail

inline CliConfig parse_config_text(const std::string& text) {
  static const std::map<std::string, std::set<std::string>> schema = {
      {"mesh", {"n"}},
      {"field", {"M", "corr_len", "amplitude", "kappa_floor"}},
      {"problem", {"kind", "beta", "lower", "upper"}},
      {"solver", {"gap_tol", "max_iters", "line_search", "reference_max_iters"}},
      {"study", {"N_ref", "N_grid", "replications", "seed"}},
  };
  CliConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  std::ostringstream echo;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim(raw);
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = detail::trim(line.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        detail::config_fail(lineno, static_cast<int>(line.size()),
                            "unterminated section header");
      section = detail::trim(line.substr(1, line.size() - 2));
      if (!schema.count(section))
        detail::config_fail(lineno, 1, "unknown section [" + section + "]");
      echo << "[" << section << "]\n";
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      detail::config_fail(lineno, 1, "expected 'key = value'");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (section.empty())
      detail::config_fail(lineno, 1, "key '" + key + "' outside any section");
    if (!schema.at(section).count(key))
      detail::config_fail(lineno, 1,
                          "unknown key '" + key + "' in section [" + section + "]");
    if (value.empty())
      detail::config_fail(lineno, static_cast<int>(eq + 2), "empty value");
    echo << key << " = " << value << "\n";
    try {
      if (section == "mesh") {
        cfg.n = std::stoi(value);
      } else if (section == "field") {
        if (key == "M")
          cfg.M = std::stoi(value);
        else if (key == "corr_len")
          cfg.corr_len = std::stod(value);
        else if (key == "amplitude")
          cfg.amplitude = std::stod(value);
        else
          cfg.kappa_floor = std::stod(value);
      } else if (section == "problem") {
        if (key == "kind") {
          if (value == "affine" || value == "affine-linear")
            cfg.kind = PdeKind::AffineLinear;
          else if (value == "bilinear")
            cfg.kind = PdeKind::Bilinear;
          else
            detail::config_fail(lineno, 1, "kind must be 'affine' or 'bilinear'");
        } else if (key == "beta")
          cfg.beta = std::stod(value);
        else if (key == "lower")
          cfg.lower = std::stod(value);
        else
          cfg.upper = std::stod(value);
      } else if (section == "solver") {
        if (key == "gap_tol")
          cfg.solver.gap_tol = std::stod(value);
        else if (key == "max_iters")
          cfg.solver.max_iters = std::stoi(value);
        else if (key == "reference_max_iters")
          cfg.reference_max_iters = std::stoi(value);
        else {
          if (value == "auto")
            cfg.solver.line_search = LineSearch::Auto;
          else if (value == "exact")
            cfg.solver.line_search = LineSearch::Exact;
          else if (value == "armijo")
            cfg.solver.line_search = LineSearch::Armijo;
          else
            detail::config_fail(lineno, 1,
                                "line_search must be auto, exact or armijo");
        }
      } else {  // study
        if (key == "N_ref")
          cfg.N_ref = std::stoi(value);
        else if (key == "N_grid")
          cfg.N_grid = detail::parse_int_list(value, lineno);
        else if (key == "replications")
          cfg.replications = std::stoi(value);
        else
          cfg.seed = std::stoull(value);
      }
    } catch (const ConfigError&) {
      throw;
    } catch (...) {
      detail::config_fail(lineno, static_cast<int>(eq + 2),
                          "invalid value '" + value + "' for key '" + key + "'");
    }
  }
  cfg.echo = echo.str();
  return cfg;
}

inline CliConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace saacg

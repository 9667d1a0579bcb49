// Copyright 2026 The qwteleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwteleport/criteria.hpp"
#include "qwteleport/procedure_io.hpp"
#include "qwteleport/rng.hpp"
#include "qwteleport/walk.hpp"

namespace {

using namespace qwt;

// Exit codes shared with CI: 0 member / success, 1 non-member or
// zero-probability outcome, 2 theorem/oracle disagreement, 3 invalid
// config or input.
constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitInvalidInput = 3;

std::string fmt_complex(const Complex& z) {
  char buf[48];
  // + 0.0 canonicalizes -0.0 so reports do not depend on signed zeros.
  std::snprintf(buf, sizeof(buf), "%+.6f%+.6fi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

std::string fmt_vec2(const Vec2& v) {
  return "[" + fmt_complex(v[0]) + ", " + fmt_complex(v[1]) + "]";
}

std::string outcome_label(const Outcome& out) {
  std::string s = "(" + std::to_string(out.position) + ",";
  s += (out.coin == CoinOutcome::kR) ? "R" : "L";
  s += ")";
  return s;
}

std::optional<Vec2> parse_phi_flag(const std::string& text) {
  double parts[4];
  int consumed = 0;
  const int n = std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf%n", &parts[0], &parts[1], &parts[2],
                            &parts[3], &consumed);
  if (n != 4 || consumed != static_cast<int>(text.size())) return std::nullopt;
  Vec2 phi = {{Complex(parts[0], parts[1]), Complex(parts[2], parts[3])}};
  if (!is_finite(phi) || std::abs(norm(phi) - 1.0) > 1e-8) return std::nullopt;
  return phi;
}

std::optional<Outcome> parse_outcome_flag(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos || comma + 2 != text.size()) return std::nullopt;
  int j = 0;
  try {
    std::size_t used = 0;
    j = std::stoi(text.substr(0, comma), &used);
    if (used != comma) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (j != -2 && j != 0 && j != 2) return std::nullopt;
  const char eps = text.back();
  if (eps != 'R' && eps != 'L') return std::nullopt;
  return Outcome{j, eps == 'R' ? CoinOutcome::kR : CoinOutcome::kL};
}

std::optional<ProcedureConfig> load_or_complain(const std::string& path) {
  try {
    return load_procedure_config(path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return std::nullopt;
  }
}

// ---- check ----

int cmd_check(const std::string& path, double tol) {
  const auto config = load_or_complain(path);
  if (!config) return kExitInvalidInput;
  const Verdict v = classify(config->procedure, tol);
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  std::cout << "cond_I       " << flag(v.cond_i) << "\n";
  std::cout << "cond_II      " << flag(v.cond_ii) << "\n";
  std::cout << "cond_III_i   " << flag(v.cond_iii_i) << "\n";
  std::cout << "cond_III_ii  " << flag(v.cond_iii_ii) << "\n";
  std::cout << "theorem      " << (v.theorem_member ? "member" : "non-member") << "\n";
  std::cout << "oracle       " << (v.oracle_member ? "member" : "non-member") << "\n";
  std::cout << "agree        " << flag(v.agree()) << "\n";
  if (!v.agree()) return kExitDisagreement;
  return v.theorem_member ? kExitMember : kExitNonMember;
}

// ---- table ----

int cmd_table(const std::string& path, double tol, const std::string& csv_path) {
  const auto config = load_or_complain(path);
  if (!config) return kExitInvalidInput;
  const Procedure& proc = config->procedure;

  std::vector<OutcomeAnalysis> analyses;
  std::vector<Outcome> failing;
  for (const Outcome& out : kAllOutcomes) {
    analyses.push_back(analyze_outcome(proc, out, tol));
    if (!analyses.back().kappa) failing.push_back(out);
  }
  if (!failing.empty()) {
    std::cout << "not proportional to a unitary for outcomes:";
    for (const Outcome& out : failing) std::cout << " " << outcome_label(out);
    std::cout << "\n";
    return kExitNonMember;
  }

  std::cout << "outcome  " << "V (row-major)" << std::string(67, ' ') << "U (row-major)"
            << std::string(67, ' ') << "prob\n";
  for (const OutcomeAnalysis& a : analyses) {
    const double kappa = *a.kappa;
    const Mat2 v = Complex(1.0 / kappa) * a.v_tilde;
    const Mat2& u = *a.correction;
    char line[352];
    std::snprintf(line, sizeof(line), "%-8s %s %s %s %s  %s %s %s %s  %.9f\n",
                  outcome_label(a.outcome).c_str(), fmt_complex(v(0, 0)).c_str(),
                  fmt_complex(v(0, 1)).c_str(), fmt_complex(v(1, 0)).c_str(),
                  fmt_complex(v(1, 1)).c_str(), fmt_complex(u(0, 0)).c_str(),
                  fmt_complex(u(0, 1)).c_str(), fmt_complex(u(1, 0)).c_str(),
                  fmt_complex(u(1, 1)).c_str(), kappa * kappa);
    std::cout << line;
  }

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) {
      std::cerr << "cannot write csv file " << csv_path << "\n";
      return kExitInvalidInput;
    }
    csv << "j,eps,V00re,V00im,V01re,V01im,V10re,V10im,V11re,V11im,"
           "U00re,U00im,U01re,U01im,U10re,U10im,U11re,U11im,prob\n";
    for (const OutcomeAnalysis& a : analyses) {
      const double kappa = *a.kappa;
      const Mat2 v = Complex(1.0 / kappa) * a.v_tilde;
      const Mat2& u = *a.correction;
      char line[640];
      std::snprintf(line, sizeof(line),
                    "%d,%c,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                    "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    a.outcome.position, a.outcome.coin == CoinOutcome::kR ? 'R' : 'L',
                    v(0, 0).real(), v(0, 0).imag(), v(0, 1).real(), v(0, 1).imag(),
                    v(1, 0).real(), v(1, 0).imag(), v(1, 1).real(), v(1, 1).imag(),
                    u(0, 0).real(), u(0, 0).imag(), u(0, 1).real(), u(0, 1).imag(),
                    u(1, 0).real(), u(1, 0).imag(), u(1, 1).real(), u(1, 1).imag(),
                    kappa * kappa);
      csv << line;
    }
  }
  return kExitMember;
}

// ---- simulate ----

int cmd_simulate(const std::string& path, double tol, const std::string& phi_flag,
                 const std::string& outcome_flag, std::uint64_t seed) {
  const auto config = load_or_complain(path);
  if (!config) return kExitInvalidInput;
  const Procedure& proc = config->procedure;

  Vec2 phi;
  if (!phi_flag.empty()) {
    const auto parsed = parse_phi_flag(phi_flag);
    if (!parsed) {
      std::cerr << "invalid --phi: expected re,im,re,im with unit norm\n";
      return kExitInvalidInput;
    }
    phi = *parsed;
  } else if (config->phi) {
    phi = *config->phi;
  } else {
    std::cerr << "no target state: pass --phi or add \"phi\" to the config\n";
    return kExitInvalidInput;
  }

  Outcome out;
  if (!outcome_flag.empty()) {
    const auto parsed = parse_outcome_flag(outcome_flag);
    if (!parsed) {
      std::cerr << "invalid --outcome: expected <j>,<R|L> with j in {-2,0,2}\n";
      return kExitInvalidInput;
    }
    out = *parsed;
    if (outcome_probability(proc, phi, out) <= tol) {
      std::cerr << "outcome " << outcome_label(out)
                << " has zero probability for this target\n";
      return kExitNonMember;
    }
  } else {
    // Sample from the outcome distribution.
    Rng rng(seed);
    const double u = rng.uniform();
    double cumulative = 0.0;
    out = kAllOutcomes.back();
    for (const Outcome& candidate : kAllOutcomes) {
      cumulative += outcome_probability(proc, phi, candidate);
      if (u < cumulative) {
        out = candidate;
        break;
      }
    }
  }

  const OutcomeAnalysis analysis = analyze_outcome(proc, out, tol);
  TeleportRound round;
  try {
    round = teleport_round(proc, phi, out, tol);
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return kExitNonMember;
  }
  const Vec2 collapsed = analysis.v_tilde * phi;
  const Vec2 pre = Complex(1.0 / norm(collapsed)) * collapsed;

  char line[128];
  std::cout << "outcome      " << outcome_label(out) << "\n";
  std::snprintf(line, sizeof(line), "probability  %.12f\n",
                outcome_probability(proc, phi, out));
  std::cout << line;
  std::cout << "corrected    " << (analysis.correction ? "yes" : "no") << "\n";
  std::cout << "bob_pre      " << fmt_vec2(pre) << "\n";
  std::cout << "bob_post     " << fmt_vec2(round.bob_state) << "\n";
  std::snprintf(line, sizeof(line), "fidelity     %.12f\n", round.fidelity);
  std::cout << line;
  return kExitMember;
}

// ---- verify ----

int cmd_verify(int trials, std::uint64_t seed, double tol, const std::string& families_csv) {
  std::vector<Family> families;
  std::string token;
  std::istringstream stream(families_csv);
  while (std::getline(stream, token, ',')) {
    const auto family = family_from_name(token);
    if (!family) {
      std::cerr << "unknown family \"" << token << "\" (expected generic, h_set, "
                   "twisted_fourier, seed3_orbit)\n";
      return kExitInvalidInput;
    }
    families.push_back(*family);
  }
  const HarnessReport report = equivalence_harness(trials, seed, tol, families);
  std::cout << report.to_text();
  return report.pass() ? kExitMember : kExitDisagreement;
}

// ---- walk ----

std::optional<Mat2> named_coin(const std::string& name) {
  if (name == "H") return hadamard();
  if (name == "I") return identity2();
  if (name == "X") return pauli_x();
  if (name == "Z") return pauli_z();
  return std::nullopt;
}

std::optional<Vec2> named_coin_state(const std::string& name) {
  const double s = 1.0 / std::sqrt(2.0);
  if (name == "R") return ket_r();
  if (name == "L") return ket_l();
  if (name == "+") return Vec2{{Complex(s), Complex(s)}};
  if (name == "-") return Vec2{{Complex(s), Complex(-s)}};
  return std::nullopt;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) out.push_back(token);
  return out;
}

int cmd_walk(const std::string& config_path, const std::string& coins_csv,
             const std::string& init_csv, int steps, const std::string& phi_flag) {
  WalkConfig walk_config;
  std::vector<Vec2> init;

  if (!config_path.empty()) {
    const auto config = load_or_complain(config_path);
    if (!config) return kExitInvalidInput;
    walk_config.coins = {config->procedure.c1, config->procedure.c2};
    Vec2 phi;
    if (!phi_flag.empty()) {
      const auto parsed = parse_phi_flag(phi_flag);
      if (!parsed) {
        std::cerr << "invalid --phi: expected re,im,re,im with unit norm\n";
        return kExitInvalidInput;
      }
      phi = *parsed;
    } else if (config->phi) {
      phi = *config->phi;
    } else {
      std::cerr << "no coin-1 state: pass --phi or add \"phi\" to the config\n";
      return kExitInvalidInput;
    }
    init = {phi, config->procedure.psi};
  } else if (!coins_csv.empty()) {
    for (const std::string& name : split_csv(coins_csv)) {
      const auto coin = named_coin(name);
      if (!coin) {
        std::cerr << "unknown coin \"" << name << "\" (expected H, I, X or Z)\n";
        return kExitInvalidInput;
      }
      walk_config.coins.push_back(*coin);
    }
    const int m = walk_config.coin_count();
    if (init_csv.empty()) {
      init.assign(static_cast<std::size_t>(m), ket_r());
    } else {
      for (const std::string& name : split_csv(init_csv)) {
        const auto state = named_coin_state(name);
        if (!state) {
          std::cerr << "unknown coin state \"" << name << "\" (expected R, L, + or -)\n";
          return kExitInvalidInput;
        }
        init.push_back(*state);
      }
      if (static_cast<int>(init.size()) != m) {
        std::cerr << "--init must list one state per coin\n";
        return kExitInvalidInput;
      }
    }
  } else {
    std::cerr << "walk needs either a config file or --coins\n";
    return kExitInvalidInput;
  }

  const int m = walk_config.coin_count();
  if (steps < 0) steps = m;
  if (steps > m) {
    std::cerr << "steps (" << steps << ") exceed the coin count (" << m
              << "); this walk uses one coin per step\n";
    return kExitInvalidInput;
  }

  try {
    validate_walk_config(walk_config);
    WalkState state = initial_state(0, init);
    for (int n = 1; n <= steps; ++n) state = step(walk_config, state, n);
    std::cout << "position  probability\n";
    for (const auto& [pos, p] : position_distribution(state)) {
      char line[64];
      std::snprintf(line, sizeof(line), "%8d  %.12f\n", pos, p);
      std::cout << line;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitMember;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-coin quantum-walk teleportation: membership checks, correction "
               "tables, simulation and the theorem/oracle cross-validation harness"};
  app.require_subcommand(1);

  std::string config_path;
  std::string csv_path;
  std::string phi_flag;
  std::string outcome_flag;
  std::string families_csv = "generic,h_set,twisted_fourier,seed3_orbit";
  std::string coins_csv;
  std::string init_csv;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  int trials = 1000;
  int steps = -1;

  CLI::App* check = app.add_subcommand("check", "classify a procedure config");
  check->add_option("config", config_path, "procedure config (JSON)")->required();
  check->add_option("--tol", tol, "classification tolerance");

  CLI::App* table = app.add_subcommand("table", "per-outcome correction table");
  table->add_option("config", config_path, "procedure config (JSON)")->required();
  table->add_option("--tol", tol, "classification tolerance");
  table->add_option("--csv", csv_path, "also write the table as CSV");

  CLI::App* simulate = app.add_subcommand("simulate", "one teleportation round");
  simulate->add_option("config", config_path, "procedure config (JSON)")->required();
  simulate->add_option("--tol", tol, "classification tolerance");
  simulate->add_option("--phi", phi_flag, "target state as re,im,re,im");
  simulate->add_option("--outcome", outcome_flag, "force an outcome: <j>,<R|L>");
  simulate->add_option("--seed", seed, "seed for outcome sampling");

  CLI::App* verify = app.add_subcommand("verify", "theorem/oracle equivalence harness");
  verify->add_option("--trials", trials, "trials per family")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "harness seed");
  verify->add_option("--tol", tol, "classification tolerance");
  verify->add_option("--families", families_csv, "comma-separated family list");

  CLI::App* walk = app.add_subcommand("walk", "m-coin walk position distribution");
  walk->add_option("config", config_path, "procedure config (coins c1, c2)");
  walk->add_option("--coins", coins_csv, "comma-separated coins (H, I, X, Z)");
  walk->add_option("--init", init_csv, "comma-separated coin states (R, L, +, -)");
  walk->add_option("--steps", steps, "steps to run (default: one per coin)");
  walk->add_option("--phi", phi_flag, "coin-1 state as re,im,re,im (config mode)");

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) return cmd_check(config_path, tol);
  if (table->parsed()) return cmd_table(config_path, tol, csv_path);
  if (simulate->parsed()) return cmd_simulate(config_path, tol, phi_flag, outcome_flag, seed);
  if (verify->parsed()) return cmd_verify(trials, seed, tol, families_csv);
  if (walk->parsed()) return cmd_walk(config_path, coins_csv, init_csv, steps, phi_flag);
  return kExitInvalidInput;
}

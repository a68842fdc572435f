// Copyright 2026 The dpsynth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: synth, privacy, sweep, simulate, validate-formats.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpsynth/error.h"
#include "dpsynth/gridworld.h"
#include "dpsynth/io.h"
#include "dpsynth/ltl.h"
#include "dpsynth/pipeline.h"
#include "dpsynth/rollout.h"

namespace {

using namespace dpsynth;

constexpr int kExitInput = 2;
constexpr int kExitTruncated = 3;

struct ModelArgs {
  std::string game_path;
  std::string grid_path;
  std::string formula;
  std::string dra_path;
  std::size_t start = 0;
  double tol = 1e-9;
  std::size_t max_iter = 100000;
};

void AddModelOptions(CLI::App* cmd, ModelArgs& args) {
  auto* game = cmd->add_option("--game", args.game_path, "Game file");
  auto* grid = cmd->add_option("--grid", args.grid_path, "Grid spec file");
  game->excludes(grid);
  auto* formula =
      cmd->add_option("--formula", args.formula, "LTL formula (template)");
  auto* dra = cmd->add_option("--dra", args.dra_path, "Rabin automaton file");
  formula->excludes(dra);
  cmd->add_option("--start", args.start, "Initial game state")
      ->capture_default_str();
  cmd->add_option("--tol", args.tol, "Value iteration tolerance")
      ->capture_default_str();
  cmd->add_option("--max-iter", args.max_iter, "Value iteration sweep cap")
      ->capture_default_str();
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

std::ofstream OpenOutput(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  return out;
}

template <typename F>
auto WithFile(const std::string& path, F read) {
  std::ifstream in = OpenInput(path);
  try {
    return read(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0, 0);
  }
}

StochasticGame LoadGame(const ModelArgs& args) {
  if (!args.grid_path.empty()) {
    GridSpec spec = WithFile(args.grid_path, ParseGridSpec);
    return BuildGrid(spec);
  }
  if (args.game_path.empty()) throw ParameterError("need --game or --grid");
  return WithFile(args.game_path, ReadGame);
}

RabinAutomaton LoadAutomaton(const ModelArgs& args,
                             const StochasticGame& game) {
  if (!args.dra_path.empty()) return WithFile(args.dra_path, ReadAutomaton);
  if (args.formula.empty()) throw ParameterError("need --formula or --dra");
  return DraFromTemplate(ParseLtl(args.formula), game.props());
}

SynthesisRun Synthesize(const ModelArgs& args) {
  StochasticGame game = LoadGame(args);
  RabinAutomaton automaton = LoadAutomaton(args, game);
  SynthesisRun run = RunSynthesis(game, automaton, args.start,
                                  IterationOptions{args.tol, args.max_iter});
  if (run.accepting.size() == 0) {
    std::cerr << "warning: the accepting set is empty; every value is 0\n";
  }
  if (!run.synthesis.values.converged) {
    std::cerr << "warning: value iteration stopped after "
              << run.synthesis.values.iterations << " sweeps\n";
  }
  return run;
}

int Synth(const ModelArgs& args, const std::string& out_dir) {
  SynthesisRun run = Synthesize(args);
  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  {
    auto out = OpenOutput(dir / "values.csv");
    WriteValues(run.synthesis.values.values, out);
  }
  {
    auto out = OpenOutput(dir / "policy.txt");
    WritePolicy(run.synthesis.mu, run.product.def_actions(), out);
  }
  {
    auto out = OpenOutput(dir / "accepting.csv");
    WriteAcceptingSet(run.accepting, run.product, out);
  }
  std::cout << "initial_state " << run.initial << "\n";
  std::cout << "value " << FormatDouble(run.InitialValue()) << "\n";
  std::cout << "accepting_states " << run.accepting.size() << "\n";
  return 0;
}

struct PrivacyArgs {
  std::vector<double> epsilons{1.0};
  std::optional<double> m;
  std::optional<double> delta;
  double term_tol = 1e-6;
  double fixpoint_tol = 1e-9;
  std::size_t fixpoint_max_iter = 10000;
};

void AddPrivacyOptions(CLI::App* cmd, PrivacyArgs& args) {
  cmd->add_option("--M", args.m,
                  "Policy total-variation bound (default 0.01/alpha)");
  cmd->add_option("--term-tol", args.term_tol,
                  "Distance bound for terminal pairs")
      ->capture_default_str();
  cmd->add_option("--fixpoint-tol", args.fixpoint_tol,
                  "Distance fixed-point tolerance")
      ->capture_default_str();
  cmd->add_option("--fixpoint-max-iter", args.fixpoint_max_iter,
                  "Distance fixed-point sweep cap")
      ->capture_default_str();
}

int Privacy(const ModelArgs& model_args, const PrivacyArgs& args,
            const std::string& out_dir) {
  SynthesisRun run = Synthesize(model_args);
  PrivacyModel model = BuildPrivacyModel(run);
  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  const auto& states = model.sub.original;
  for (std::size_t i = 0; i < args.epsilons.size(); ++i) {
    const double eps = args.epsilons[i];
    PrivacyOptions po;
    po.m = args.m ? *args.m : 0.01 / std::exp(eps);
    po.delta = args.delta;
    po.term_tol = args.term_tol;
    po.fixpoint = {args.fixpoint_tol, args.fixpoint_max_iter};
    PrivacyResult r = AnalyzePrivacy(model, eps, po);
    if (!r.fixpoint.converged) {
      std::cerr << "warning: distance fixed point stopped after "
                << r.fixpoint.iterations << " sweeps (epsilon "
                << FormatDouble(eps) << ")\n";
    }
    const std::string suffix = "_" + std::to_string(i);
    {
      auto out = OpenOutput(dir / ("dstar" + suffix + ".csv"));
      out << "s,t,dstar\n";
      const DistanceTable& d = r.fixpoint.distances;
      for (std::size_t s = 0; s < d.num_states(); ++s) {
        for (std::size_t t = s + 1; t < d.num_states(); ++t) {
          out << states[s] << "," << states[t] << "," << FormatDouble(d(s, t))
              << "\n";
        }
      }
    }
    {
      auto out = OpenOutput(dir / ("relation" + suffix + ".txt"));
      WriteRelation(r.relation, states, out);
    }
    {
      auto out = OpenOutput(dir / ("certificate" + suffix + ".txt"));
      WriteCertificate(r.certificate, out);
    }
    if (r.relation.pairs().empty()) {
      std::cerr << "warning: empty relation at epsilon " << FormatDouble(eps)
                << "\n";
    }
    std::cout << "epsilon " << FormatDouble(eps) << " alpha "
              << FormatDouble(r.alpha) << " delta_min "
              << (r.certificate.defined ? FormatDouble(r.certificate.delta_min)
                                        : "undefined")
              << " off_diagonal_pairs " << r.certificate.off_diagonal_pairs
              << "\n";
  }
  return 0;
}

struct SweepArgs {
  std::vector<double> epsilons{0.1, 0.5, 1.0, 2.0};
  std::vector<double> deltas{0.001, 0.01, 0.05, 0.1};
  std::size_t length = 10;
  std::uint64_t seed = 1;
  std::optional<std::size_t> ref_start;
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
  std::string out = "sweep.csv";
};

int Sweep(const ModelArgs& model_args, const PrivacyArgs& privacy_args,
          const SweepArgs& args) {
  SynthesisRun run = Synthesize(model_args);
  PrivacyModel model = BuildPrivacyModel(run);
  SweepOptions so;
  so.m = privacy_args.m;
  so.term_tol = privacy_args.term_tol;
  so.trajectory_length = args.length;
  so.seed = args.seed;
  if (args.ref_start) {
    so.reference_start = SubStateForGameState(run, model, *args.ref_start);
  }
  so.budget = args.budget;
  so.fixpoint = {privacy_args.fixpoint_tol, privacy_args.fixpoint_max_iter};
  std::vector<SweepRow> rows = RunSweep(model, args.epsilons, args.deltas, so);
  auto out = OpenOutput(args.out);
  WriteSweep(rows, out);
  bool truncated = false;
  for (const SweepRow& r : rows) {
    if (r.truncated) {
      truncated = true;
      std::cerr << "warning: count truncated at epsilon "
                << FormatDouble(r.epsilon) << ", delta "
                << FormatDouble(r.delta) << "\n";
    }
  }
  std::cout << "rows " << rows.size() << "\n";
  return truncated ? kExitTruncated : 0;
}

int Simulate(const ModelArgs& model_args, std::size_t rollouts,
             std::size_t horizon, std::uint64_t seed) {
  SynthesisRun run = Synthesize(model_args);
  MarkovChain chain =
      InduceChain(run.product, run.synthesis.mu, run.adversary);
  SatisfactionEstimate est = EstimateSatisfaction(
      chain, run.initial, run.accepting.member, rollouts, horizon, seed);
  const double v = run.InitialValue();
  std::cout << "value " << FormatDouble(v) << "\n";
  std::cout << "estimate " << FormatDouble(est.estimate) << " +- "
            << FormatDouble(est.half_width) << "\n";
  if (v - est.estimate > 3.0 * est.half_width + 0.01) {
    std::cerr << "warning: estimate is well below the value; the horizon may "
                 "be too short\n";
  }
  return 0;
}

int ValidateFormats(const ModelArgs& args, const std::string& policy_path,
                    const std::string& values_path) {
  std::optional<StochasticGame> game;
  if (!args.game_path.empty() || !args.grid_path.empty()) {
    game = LoadGame(args);
    std::cout << "game ok: " << game->num_states() << " states\n";
  }
  if (!args.dra_path.empty()) {
    RabinAutomaton a = WithFile(args.dra_path, ReadAutomaton);
    std::cout << "automaton ok: " << a.num_states() << " states\n";
  }
  if (!args.formula.empty()) {
    LtlFormula f = ParseLtl(args.formula);
    std::cout << "formula ok: " << f.ToString() << "\n";
  }
  if (!policy_path.empty()) {
    if (!game) throw ParameterError("--policy needs --game or --grid");
    RabinAutomaton automaton = LoadAutomaton(args, *game);
    ProductGame product = BuildProduct(*game, automaton);
    MixedPolicy mu = WithFile(policy_path, [&](std::istream& in) {
      return ReadPolicy(in, product.num_states(), product.def_actions());
    });
    std::cout << "policy ok: " << mu.num_states() << " states\n";
  }
  if (!values_path.empty()) {
    std::vector<double> v = WithFile(values_path, ReadValues);
    std::cout << "values ok: " << v.size() << " rows\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Policy synthesis and trajectory privacy certificates for "
               "stochastic games"};
  app.require_subcommand(1);

  ModelArgs model;
  PrivacyArgs privacy;
  SweepArgs sweep;
  std::string out_dir = ".";
  std::size_t rollouts = 10000;
  std::size_t horizon = 200;
  std::uint64_t sim_seed = 1;
  std::string policy_path;
  std::string values_path;

  auto* synth = app.add_subcommand("synth", "Synthesize a defender policy");
  AddModelOptions(synth, model);
  synth->add_option("--out-dir", out_dir, "Output directory")
      ->capture_default_str();

  auto* priv = app.add_subcommand("privacy", "Distances, relation, certificate");
  AddModelOptions(priv, model);
  AddPrivacyOptions(priv, privacy);
  priv->add_option("--epsilon", privacy.epsilons, "Epsilon values")
      ->delimiter(',')
      ->capture_default_str();
  priv->add_option("--delta", privacy.delta,
                   "Restrict the relation to pairs certifiable at this delta");
  priv->add_option("--out-dir", out_dir, "Output directory")
      ->capture_default_str();

  auto* sw = app.add_subcommand("sweep", "Trajectory counts over (eps, delta)");
  AddModelOptions(sw, model);
  AddPrivacyOptions(sw, privacy);
  sw->add_option("--epsilons", sweep.epsilons, "Epsilon grid")
      ->delimiter(',')
      ->capture_default_str();
  sw->add_option("--deltas", sweep.deltas, "Delta grid")
      ->delimiter(',')
      ->capture_default_str();
  sw->add_option("--length", sweep.length, "Trajectory length")
      ->capture_default_str();
  sw->add_option("--seed", sweep.seed, "Seed for the reference trajectory")
      ->capture_default_str();
  sw->add_option("--ref-start", sweep.ref_start,
                 "Game state the reference trajectory starts from "
                 "(default: --start)");
  sw->add_option("--budget", sweep.budget, "Cap on each trajectory count");
  sw->add_option("--out", sweep.out, "CSV output")->capture_default_str();

  auto* sim = app.add_subcommand("simulate", "Monte Carlo satisfaction check");
  AddModelOptions(sim, model);
  sim->add_option("--rollouts", rollouts, "Number of rollouts")
      ->capture_default_str();
  sim->add_option("--horizon", horizon, "Steps per rollout")
      ->capture_default_str();
  sim->add_option("--seed", sim_seed, "Random seed")->capture_default_str();

  auto* validate =
      app.add_subcommand("validate-formats", "Parse and check input files");
  AddModelOptions(validate, model);
  validate->add_option("--policy", policy_path, "Policy file");
  validate->add_option("--values", values_path, "Values CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*synth) return Synth(model, out_dir);
    if (*priv) return Privacy(model, privacy, out_dir);
    if (*sw) return Sweep(model, privacy, sweep);
    if (*sim) return Simulate(model, rollouts, horizon, sim_seed);
    if (*validate) return ValidateFormats(model, policy_path, values_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}

// Copyright 2026 The chandist Authors
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

#include "chandist/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "chandist/discriminate.hpp"
#include "chandist/examples.hpp"
#include "chandist/io.hpp"
#include "chandist/metrics.hpp"
#include "chandist/oracle.hpp"
#include "chandist/rankred.hpp"

namespace chandist::cli {

namespace {

using io::Json;

class UsageError : public Error {
 public:
  using Error::Error;
};

// Solver finished but could not certify its answer.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

struct GlobalFlags {
  double tol = 1e-6;
  int restarts = 16;
  std::uint64_t seed = 0;
  int max_iters = 5000;
  int threads = 1;
  bool verbose = false;
  bool from_stdin = false;
};

SolverOptions solver_options(const GlobalFlags& g) {
  SolverOptions o;
  o.tol = g.tol;
  o.restarts = g.restarts;
  o.seed = g.seed;
  o.max_iters = g.max_iters;
  o.threads = g.threads;
  return o;
}

std::string read_source(const std::string& name, std::istream& in) {
  std::ostringstream text;
  if (name == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream file(name);
    if (!file) throw UsageError("cannot open '" + name + "'");
    text << file.rdbuf();
  }
  return text.str();
}

Json load(const std::string& name, std::istream& in) {
  return io::parse(read_source(name, in), name == "-" ? "<stdin>" : name);
}

// A document naming one input per key, read from stdin, or one file per key.
std::vector<Json> load_inputs(const GlobalFlags& g, const std::vector<std::string>& files,
                              const std::vector<std::string>& keys, std::istream& in) {
  std::vector<Json> out;
  if (g.from_stdin) {
    if (!files.empty()) throw UsageError("--stdin takes no file arguments");
    const Json doc = load("-", in);
    for (const auto& k : keys) {
      if (!doc.is_object() || !doc.contains(k)) throw io::SchemaError(k, "missing field");
      out.push_back(doc[k]);
    }
    return out;
  }
  if (files.size() != keys.size()) {
    throw UsageError("expected " + std::to_string(keys.size()) + " input files, got " +
                     std::to_string(files.size()));
  }
  for (const auto& f : files) out.push_back(load(f, in));
  return out;
}

// Channels in a pair document are reported under their key, e.g. "phi1.data[0]".
std::pair<SuperOp, SuperOp> load_pair(const GlobalFlags& g,
                                      const std::vector<std::string>& files,
                                      std::istream& in) {
  const auto docs = load_inputs(g, files, {"phi0", "phi1"}, in);
  const std::string p0 = g.from_stdin ? "phi0" : "";
  const std::string p1 = g.from_stdin ? "phi1" : "";
  return {io::channel_from_json(docs[0], p0), io::channel_from_json(docs[1], p1)};
}

void require_channels(const SuperOp& phi0, const SuperOp& phi1) {
  if (phi0.dim_in() != phi1.dim_in() || phi0.dim_out() != phi1.dim_out()) {
    throw UsageError("the two channels have different dimensions");
  }
  for (const auto* phi : {&phi0, &phi1}) {
    if (!is_cp(*phi) || !is_trace_preserving(*phi)) {
      throw UsageError(std::string(phi == &phi0 ? "phi0" : "phi1") +
                       " is not a channel (CP and trace preserving)");
    }
  }
}

std::vector<int> parse_k_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw UsageError("--k-list: '" + item + "' is not an integer");
    }
    out.push_back(k);
  }
  if (out.empty()) throw UsageError("--k-list is empty");
  return out;
}

Json cmd_convert(const GlobalFlags& g, const std::vector<std::string>& files,
                 const std::string& to, std::istream& in) {
  Json doc;
  if (g.from_stdin) {
    if (!files.empty()) throw UsageError("--stdin takes no file arguments");
    doc = load("-", in);
  } else {
    if (files.size() != 1) throw UsageError("convert takes exactly one channel file");
    doc = load(files[0], in);
  }
  Json out = io::channel_to_json(io::channel_from_json(doc), io::parse_representation(to));
  out["schema_version"] = io::kSchemaVersion;
  return out;
}

Json cmd_dnorm(const GlobalFlags& g, const std::vector<std::string>& files,
               std::istream& in) {
  const auto [phi0, phi1] = load_pair(g, files, in);
  require_channels(phi0, phi1);
  const DiamondNormResult r = dnorm(difference(phi0, phi1), solver_options(g));
  if (!r.converged) {
    throw NumericalFailure("diamond norm solver did not converge: value " +
                           std::to_string(r.value) + ", certified bound " +
                           std::to_string(r.upper_bound));
  }
  Json out = {{"schema_version", io::kSchemaVersion},
              {"dnorm", r.value},
              {"success_probability", 0.5 + r.value / 4.0},
              {"choi_rank", r.choi_rank},
              {"upper_bound", r.upper_bound}};
  if (g.verbose) out["iterations"] = r.iterations;
  return out;
}

Json cmd_discriminate(const GlobalFlags& g, const std::vector<std::string>& files,
                      std::istream& in) {
  const auto [phi0, phi1] = load_pair(g, files, in);
  require_channels(phi0, phi1);
  const DiscriminationResult r = optimal_input(phi0, phi1, solver_options(g));
  const VerificationReport v = verify(r, phi0, phi1);
  if (!r.diagnostics.solver_converged) {
    throw NumericalFailure("fidelity solver did not converge");
  }
  if (r.diagnostics.discrepancy) {
    throw NumericalFailure("fidelity and trace-norm values disagree: " +
                           std::to_string(r.diagnostics.fidelity_route_value) + " vs " +
                           std::to_string(r.diagnostics.trace_norm_route_value));
  }
  if (!v.passed) {
    throw NumericalFailure("result failed verification: " + v.failures.front());
  }
  Json out = io::to_json(r, g.verbose);
  out["verification"] = io::to_json(v);
  return out;
}

Json cmd_example(const GlobalFlags& g, const std::string& family_name, int n,
                 const std::string& k_text) {
  examples::Family family;
  try {
    family = examples::parse_family(family_name);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (n == 0) n = 2;
  if (family == examples::Family::werner && n < 2) {
    throw UsageError("--n must be at least 2 for the werner family");
  }
  if (family == examples::Family::pauli && n != 2) {
    throw UsageError("--n must be 2 for the pauli family");
  }
  std::vector<int> ks;
  if (k_text.empty()) {
    for (int k = 1; k <= n; ++k) ks.push_back(k);
  } else {
    ks = parse_k_list(k_text);
  }
  for (int k : ks) {
    if (k < 1 || k > n) {
      throw UsageError("--k-list entries must lie in [1, " + std::to_string(n) + "]");
    }
  }
  Json rows = Json::array();
  for (const auto& r : examples::run_example_sweep(family, n, ks, solver_options(g))) {
    rows.push_back(io::to_json(r));
  }
  return {{"schema_version", io::kSchemaVersion},
          {"family", examples::family_name(family)},
          {"n", n},
          {"rows", std::move(rows)}};
}

Json cmd_rank_reduce(const GlobalFlags& g, const std::vector<std::string>& files,
                     std::istream& in) {
  const auto docs = load_inputs(g, files, {"channel", "rho"}, in);
  const SuperOp phi = io::channel_from_json(docs[0], g.from_stdin ? "channel" : "");
  const DensityMatrix rho = io::density_from_json(docs[1], g.from_stdin ? "rho" : "");
  if (rho.dim() != phi.dim_in()) {
    throw UsageError("state dimension " + std::to_string(rho.dim()) +
                     " does not match the channel input " + std::to_string(phi.dim_in()));
  }
  const ReductionResult r = reduce_preimage(phi, rho);
  Json out = {{"schema_version", io::kSchemaVersion},
              {"rho_reduced", io::matrix_to_json(r.rho.matrix())},
              {"rank_before", r.rank_before},
              {"rank_after", r.rank_after},
              {"target_rank", r.target_rank},
              {"residual", r.residual}};
  if (g.verbose) out["trace"] = io::to_json(r.trace);
  return out;
}

Json cmd_oracle(const GlobalFlags& g, bool restarts_given, const std::string& kind,
                const std::vector<std::string>& files, std::istream& in) {
  if (kind == "unitary") {
    const auto docs = load_inputs(g, files, {"u", "v"}, in);
    const ComplexMatrix u = io::matrix_from_json(docs[0], g.from_stdin ? "u" : "<root>");
    const ComplexMatrix v = io::matrix_from_json(docs[1], g.from_stdin ? "v" : "<root>");
    return {{"schema_version", io::kSchemaVersion},
            {"kind", kind},
            {"value", oracle::unitary_pair_reference(u, v)}};
  }
  const auto [a, b] = load_pair(g, files, in);
  double value = 0.0;
  if (kind == "dnorm") {
    require_channels(a, b);
    value = oracle::brute_dnorm(difference(a, b), restarts_given ? g.restarts : 64,
                                g.seed, g.threads);
  } else if (kind == "fmax") {
    value = oracle::brute_fmax(a, b, restarts_given ? g.restarts : 32, g.seed, g.threads);
  } else {
    throw UsageError("unknown oracle kind '" + kind + "'");
  }
  return {{"schema_version", io::kSchemaVersion}, {"kind", kind}, {"value", value}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Distinguishability measures and optimal inputs for quantum channels",
               "chandist"};
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--tol", g.tol, "Certified gap for the diamond-norm solve")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  CLI::Option* restarts_opt =
      app.add_option("--restarts", g.restarts, "Random restarts for nonconvex searches")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for all random starts")->capture_default_str();
  app.add_option("--max-iters", g.max_iters, "Iteration cap per solver stage")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--verbose", g.verbose, "Include iteration counts and traces");
  app.add_flag("--stdin", g.from_stdin, "Read one JSON document from standard input");

  std::vector<std::string> files;
  std::string to;
  auto* convert = app.add_subcommand("convert", "Convert a channel between representations");
  convert->add_option("channel", files, "Channel JSON file ('-' for stdin)");
  convert->add_option("--to", to, "Target representation")
      ->required()
      ->check(CLI::IsMember({"kraus", "choi", "stinespring"}));

  auto* dnorm_cmd = app.add_subcommand("dnorm", "Diamond norm of the difference of two channels");
  dnorm_cmd->add_option("channels", files, "phi0.json phi1.json");

  std::string out_path;
  auto* disc = app.add_subcommand("discriminate", "Optimal input state and measurement");
  disc->add_option("channels", files, "phi0.json phi1.json");
  disc->add_option("--out", out_path, "Write the result here instead of stdout");

  std::string family;
  int n = 0;
  std::string k_list;
  auto* example = app.add_subcommand("example", "Reproduce a standard example family");
  example->add_option("--family", family, "werner or pauli")->required();
  example->add_option("--n", n, "Input dimension");
  example->add_option("--k-list", k_list, "Comma-separated ancilla dimensions");

  auto* reduce = app.add_subcommand("rank-reduce", "Lower-rank preimage of a channel output");
  reduce->add_option("inputs", files, "channel.json rho.json");

  std::string kind;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference values");
  oracle_cmd->add_option("kind", kind, "dnorm, fmax or unitary")
      ->required()
      ->check(CLI::IsMember({"dnorm", "fmax", "unitary"}));
  oracle_cmd->add_option("inputs", files, "two input files");

  for (auto* sub : {convert, dnorm_cmd, disc, example, reduce, oracle_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "chandist: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Json result;
    if (convert->parsed()) {
      result = cmd_convert(g, files, to, in);
    } else if (dnorm_cmd->parsed()) {
      result = cmd_dnorm(g, files, in);
    } else if (disc->parsed()) {
      result = cmd_discriminate(g, files, in);
    } else if (example->parsed()) {
      result = cmd_example(g, family, n, k_list);
    } else if (reduce->parsed()) {
      result = cmd_rank_reduce(g, files, in);
    } else {
      result = cmd_oracle(g, restarts_opt->count() > 0, kind, files, in);
    }
    const std::string text = io::dump(result) + "\n";
    if (disc->parsed() && !out_path.empty()) {
      std::ofstream file(out_path);
      if (!(file << text)) throw UsageError("cannot write '" + out_path + "'");
    } else {
      out << text;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "chandist: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::SchemaError& e) {
    err << "chandist: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "chandist: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "chandist: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "chandist: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace chandist::cli

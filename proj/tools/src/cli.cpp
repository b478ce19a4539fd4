#include "cutsparse_cli/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cutsparse/flow.hpp"
#include "cutsparse/generators.hpp"
#include "cutsparse/ni_forest.hpp"
#include "cutsparse/partition_tree.hpp"
#include "cutsparse/sampler.hpp"
#include "cutsparse/schemes.hpp"
#include "cutsparse/verify.hpp"
#include "json.hpp"

namespace cutsparse::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Bad flags or parameter values; mapped to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes to `path`, or to `fallback` when path is empty.
template <class Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  write(file);
}

SamplingParams sampling_params(const RunConfig& c) {
  SamplingParams p;
  p.epsilon = c.epsilon;
  p.alpha = c.alpha;
  p.c0 = c.c0.value_or(kDefaultC0);
  p.seed = c.seed;
  try {
    p.validate();
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  return p;
}

Scheme scheme_or_usage(const std::string& name) {
  try {
    return parse_scheme(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Json number_or_null(long double x) {
  if (!std::isfinite(static_cast<double>(x))) return nullptr;
  return static_cast<double>(x);
}

Json report_json(const VerificationReport& r, const Json& scheme, double epsilon, const Json& c0,
                 const Json& seed) {
  Json j;
  j["scheme"] = scheme;
  j["epsilon"] = epsilon;
  j["c0"] = c0;
  j["seed"] = seed;
  j["cuts_checked"] = r.cuts_checked;
  j["max_rel_error"] = number_or_null(r.max_rel_error);
  j["argmax_cut"] = r.argmax_cut;
  j["failures"] = r.failures;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

VerificationReport verify_skeleton(const RunConfig& c, VerifyMode mode, const Graph& g,
                                   const WeightedGraph& sk) {
  if (mode == VerifyMode::exact) {
    if (g.vertex_count() > kExactCutsMaxVertices) {
      throw UsageError("exact verification needs n <= 20; use --mode sampled");
    }
    return exact_cut_errors(g, sk, c.epsilon);
  }
  return sampled_cut_errors(g, sk, c.trials, c.seed, c.epsilon, c.threads);
}

int cmd_sparsify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const SamplingParams params = sampling_params(c);
  const bool two_step = c.scheme == "two-step";
  const Scheme scheme = two_step ? Scheme::step1 : scheme_or_usage(c.scheme);
  const Graph g = load_graph_file(c.input, c.format);
  const Skeleton sk = two_step ? sparsify_two_step(g, params) : sparsify(g, scheme, params);

  emit(c.output, out, [&](std::ostream& os) { sk.write(os); });
  std::string provenance_path = c.provenance;
  if (provenance_path.empty() && !c.output.empty()) provenance_path = c.output + ".provenance.json";
  if (!provenance_path.empty()) {
    emit(provenance_path, out, [&](std::ostream& os) { os << provenance_json(sk.provenance) << '\n'; });
  }
  if (c.verify == VerifyMode::off) return kExitOk;
  const VerificationReport r = verify_skeleton(c, c.verify, g, sk.to_weighted());
  emit(c.report, err, [&](std::ostream& os) {
    os << report_json(r, sk.provenance.scheme, c.epsilon, params.c0, params.seed).dump(2) << '\n';
  });
  return r.failures == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_ni(const RunConfig& c, std::ostream& out) {
  if (c.order != "scan" && c.order != "decreasing") throw UsageError("--order must be scan or decreasing");
  const Graph g = load_graph_file(c.input, c.format);
  const NIDecomposition d = c.order == "scan" ? decompose_weighted(g) : decompose_decreasing(g);
  emit(c.output, out, [&](std::ostream& os) {
    for (EdgeId e = 0; e < d.edge_count(); ++e) os << e << '\t' << d.first_index(e) << '\n';
    os << "K\t" << d.forest_count() << '\n';
  });
  return kExitOk;
}

int cmd_lambda(const RunConfig& c, std::ostream& out) {
  const Scheme scheme = scheme_or_usage(c.scheme);
  const Graph g = load_graph_file(c.input, c.format);
  const SchemeResult r = compute_scheme(scheme, g, false);
  emit(c.output, out, [&](std::ostream& os) {
    os << std::setprecision(17);
    for (EdgeId e = 0; e < r.lambda.lambda.size(); ++e) os << e << '\t' << r.lambda.lambda[e] << '\n';
    os << "alpha\t" << r.lambda.alpha << '\n';
  });
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  if (!(c.epsilon > 0.0 && c.epsilon <= 1.0)) throw UsageError("epsilon must lie in (0, 1]");
  if (c.skeleton.empty()) throw UsageError("verify needs --skeleton");
  const Graph g = load_graph_file(c.input, c.format);
  const WeightedGraph sk = load_weighted_edge_list_file(c.skeleton);
  VerifyMode mode = c.verify;
  if (mode == VerifyMode::off) {
    mode = g.vertex_count() <= kExactCutsMaxVertices ? VerifyMode::exact : VerifyMode::sampled;
  }
  Json scheme = nullptr;
  Json c0 = nullptr;
  Json seed = nullptr;
  if (!c.provenance.empty()) {
    const Json prov = Json::parse(read_file(c.provenance));
    scheme = prov.value("scheme", Json());
    c0 = prov.value("c0", Json());
    seed = prov.value("seed", Json());
  }
  const VerificationReport r = verify_skeleton(c, mode, g, sk);
  emit(c.output, out, [&](std::ostream& os) {
    os << report_json(r, scheme, c.epsilon, c0, seed).dump(2) << '\n';
  });
  return r.failures == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_count_projections(const RunConfig& c, std::ostream& out) {
  const Graph g = load_graph_file(c.input, c.format);
  if (g.vertex_count() > kProjectionMaxVertices) {
    throw SizeGuardError("count-projections needs n <= 14");
  }
  Weight k = c.k;
  if (k == 0 && g.vertex_count() >= 2) k = global_min_cut(g).weight;
  ProjectionCount pc;
  try {
    pc = count_k_projections(g, k, c.projection_alpha);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const double bound = std::pow(static_cast<double>(g.vertex_count()), 2.0 * c.projection_alpha);
  Json j;
  j["n"] = g.vertex_count();
  j["k"] = k;
  j["alpha"] = c.projection_alpha;
  j["min_cut"] = pc.min_cut;
  j["cuts"] = pc.cuts;
  j["projections"] = pc.projections;
  j["bound"] = bound;
  emit(c.output, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  return static_cast<double>(pc.projections) <= bound ? kExitOk : kExitVerificationFailed;
}

int cmd_bench(const RunConfig& c, std::ostream& out) {
  const Scheme scheme = scheme_or_usage(c.scheme);
  const SamplingParams params = sampling_params(c);
  if (c.min_log < 4 || c.max_log < c.min_log || c.max_log > 26) {
    throw UsageError("bench needs 4 <= min-log <= max-log <= 26");
  }
  if (c.repeats < 1) throw UsageError("--repeats must be >= 1");
  // Repeats cycle over all sizes so a slow stretch of the machine is shared
  // by every size instead of inflating one ratio.
  std::vector<Graph> graphs;
  for (int lg = c.min_log; lg <= c.max_log; ++lg) {
    const std::size_t m = std::size_t{1} << lg;
    graphs.push_back(random_connected(m / 8, m, c.seed + static_cast<std::uint64_t>(lg)));
  }
  std::vector<double> best(graphs.size(), HUGE_VAL);
  for (int rep = 0; rep < c.repeats; ++rep) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i];
      const auto start = std::chrono::steady_clock::now();
      const SchemeResult r = compute_scheme(scheme, g, false);
      const Skeleton sk = sample_skeleton(g, r.lambda, params);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      best[i] = std::min(best[i], ms);
      if (sk.vertex_count != g.vertex_count()) throw std::logic_error("bench skeleton size mismatch");
    }
  }
  Json rows = Json::array();
  double max_ratio = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    Json row;
    row["m"] = graphs[i].edge_count();
    row["n"] = graphs[i].vertex_count();
    row["best_ms"] = best[i];
    if (i > 0) {
      row["ratio"] = best[i] / best[i - 1];
      max_ratio = std::max(max_ratio, best[i] / best[i - 1]);
    } else {
      row["ratio"] = nullptr;
    }
    rows.push_back(row);
  }
  Json j;
  j["scheme"] = std::string(scheme_name(scheme));
  j["repeats"] = c.repeats;
  j["rows"] = rows;
  j["max_ratio"] = max_ratio;
  emit(c.output, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::sparsify: return cmd_sparsify(config, out, err);
      case Command::ni: return cmd_ni(config, out);
      case Command::lambda: return cmd_lambda(config, out);
      case Command::verify: return cmd_verify(config, out);
      case Command::count_projections: return cmd_count_projections(config, out);
      case Command::bench: return cmd_bench(config, out);
    }
    throw UsageError("unknown command");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cut sparsification by connectivity-driven sampling"};
  app.require_subcommand(1);
  RunConfig c;
  std::string format = "edge-list";
  std::string verify_mode = "off";

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", c.input, "Input graph file")->required();
    sub->add_option("--format", format, "edge-list or dimacs");
    sub->add_option("-o,--output", c.output, "Output path (default stdout)");
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--epsilon", c.epsilon, "Error parameter in (0, 1]");
    sub->add_option("--alpha", c.alpha, "Override the scheme's alpha");
    sub->add_option("--c0", c.c0, "Override the sampling constant 96/0.38");
    sub->add_option("--seed", c.seed, "Random seed");
  };

  CLI::App* sparsify_cmd = app.add_subcommand("sparsify", "Sample a cut sparsifier");
  add_input(sparsify_cmd);
  add_sampling(sparsify_cmd);
  sparsify_cmd->add_option("--scheme", c.scheme,
                           "ni|step1|setlambda|decreasing|conn|resistance|strong|two-step");
  sparsify_cmd->add_option("--provenance", c.provenance, "Provenance JSON path");
  sparsify_cmd->add_option("--verify", verify_mode, "off|exact|sampled");
  sparsify_cmd->add_option("--report", c.report, "Verification report path (default stderr)");
  sparsify_cmd->add_option("--trials", c.trials, "Random cuts for sampled verification");
  sparsify_cmd->add_option("--threads", c.threads, "Verification threads");

  CLI::App* ni_cmd = app.add_subcommand("ni", "Print NI forest indices");
  add_input(ni_cmd);
  ni_cmd->add_option("--order", c.order, "scan or decreasing");

  CLI::App* lambda_cmd = app.add_subcommand("lambda", "Print per-edge lambda values");
  add_input(lambda_cmd);
  lambda_cmd->add_option("--scheme", c.scheme, "ni|step1|setlambda|decreasing|conn|resistance|strong");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Compare a skeleton's cuts with the graph");
  add_input(verify_cmd);
  verify_cmd->add_option("--skeleton", c.skeleton, "Skeleton edge list")->required();
  verify_cmd->add_option("--mode", verify_mode, "exact or sampled");
  verify_cmd->add_option("--epsilon", c.epsilon, "Failure threshold on relative error");
  verify_cmd->add_option("--trials", c.trials, "Random cuts for sampled mode");
  verify_cmd->add_option("--seed", c.seed, "Seed for random cuts");
  verify_cmd->add_option("--threads", c.threads, "Verification threads");
  verify_cmd->add_option("--provenance", c.provenance, "Provenance JSON of the skeleton");

  CLI::App* proj_cmd = app.add_subcommand("count-projections", "Count distinct k-projections");
  add_input(proj_cmd);
  proj_cmd->add_option("--k", c.k, "Heaviness threshold (default: min cut)");
  proj_cmd->add_option("--alpha", c.projection_alpha, "Cut weight factor");

  CLI::App* bench_cmd = app.add_subcommand("bench", "Time a scheme over doubling edge counts");
  bench_cmd->add_option("--scheme", c.scheme, "Scheme to time");
  bench_cmd->add_option("--min-log", c.min_log, "Smallest lg m");
  bench_cmd->add_option("--max-log", c.max_log, "Largest lg m");
  bench_cmd->add_option("--repeats", c.repeats, "Timings per size (best is kept)");
  bench_cmd->add_option("--seed", c.seed, "Graph seed");
  bench_cmd->add_option("-o,--output", c.output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    c.format = parse_graph_format(format);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (verify_mode == "off") {
    c.verify = VerifyMode::off;
  } else if (verify_mode == "exact") {
    c.verify = VerifyMode::exact;
  } else if (verify_mode == "sampled") {
    c.verify = VerifyMode::sampled;
  } else {
    err << "error: unknown verify mode '" << verify_mode << "'\n";
    return kExitUsage;
  }

  if (sparsify_cmd->parsed()) {
    c.command = Command::sparsify;
  } else if (ni_cmd->parsed()) {
    c.command = Command::ni;
  } else if (lambda_cmd->parsed()) {
    c.command = Command::lambda;
  } else if (verify_cmd->parsed()) {
    c.command = Command::verify;
  } else if (proj_cmd->parsed()) {
    c.command = Command::count_projections;
  } else {
    c.command = Command::bench;
    if (bench_cmd->count("--scheme") == 0) c.scheme = "step1";
  }
  return run(c, out, err);
}

}  // namespace cutsparse::cli

// Command-line front end: generate, reduce, solve, verify, and inspect
// SES / SESSP instances with JSON file interchange.
//
// Exit codes: 0 yes/accepted, 1 no/rejected, 2 usage or parse error,
// 3 reduction infeasible, 4 resource limits.

#include "sesq/errors.hpp"
#include "sesq/io.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <iostream>
#include <random>

namespace {

using namespace sesq;

struct GenArgs {
  std::string kind;
  int n = 0;
  long long max_value = 0;
  unsigned seed = 0;
  std::string output;
};

int cmd_gen(const GenArgs& args) {
  std::mt19937 rng(args.seed);
  // modulo draw keeps files byte-identical across standard libraries
  auto draw = [&](long long hi) { return static_cast<long long>(rng() % hi) + 1; };

  ClassicalInstance inst;
  if (args.kind == "subset-sum") {
    SubsetSumInstance ss;
    long long total = 0;
    for (int i = 0; i < args.n; ++i) {
      ss.sizes.push_back(draw(args.max_value));
      total += ss.sizes.back();
    }
    ss.target = draw(total);
    inst = ss;
  } else {
    PartitionInstance p;
    for (int i = 0; i < args.n; ++i) p.sizes.push_back(draw(args.max_value));
    inst = p;
  }
  write_json_file(args.output, classical_to_json(inst));
  return 0;
}

int cmd_reduce(const std::string& input, const std::string& target,
               const std::string& output) {
  ClassicalInstance classical = classical_from_json(load_json_file(input));

  json bundle;
  if (target == "sessp") {
    const auto* p = std::get_if<PartitionInstance>(&classical);
    if (!p) throw ParseError("sessp reduction needs a partition instance");
    auto [inst, map] = reduce_to_sessp(*p);
    std::cout << "sessp: n=" << inst.state.n
              << " chi=" << max_bipartite_rank(inst.state)
              << " weight=" << to_string(inst.weight)
              << " epsilon=" << format_decimal(inst.epsilon) << "\n";
    bundle = bundle_to_json(QuantumInstance{std::move(inst)}, map);
  } else {
    NormalizedRealInstance normalized;
    if (const auto* ss = std::get_if<SubsetSumInstance>(&classical)) {
      normalized = normalize(lift_to_real(*ss, Rational(1, 4)));
    } else if (const auto* rs = std::get_if<RealSubsetSumInstance>(&classical)) {
      normalized = normalize(*rs);
    } else {
      throw ParseError("ses reductions need a subset-sum or real-subset-sum instance");
    }
    auto [inst, map] = target == "ses" ? reduce_to_ses_magnetization(normalized)
                                       : reduce_to_ses_entropy(normalized);
    std::cout << target << ": n=" << inst.state.n
              << " chi=" << max_bipartite_rank(inst.state)
              << " weight=" << to_string(inst.weight) << "\n";
    bundle = bundle_to_json(QuantumInstance{std::move(inst)}, map);
  }
  write_json_file(output, bundle);
  return 0;
}

json unwrap_instance(const json& j) {
  if (j.contains("instance")) return j.at("instance");
  return j;
}

int cmd_solve(const std::string& input, const std::string& strategy, int parallel,
              bool deterministic, const std::string& output, bool as_json) {
  json j = unwrap_instance(load_json_file(input));

  SolveResult result;
  std::string problem = j.value("problem", "");
  if (problem == "subset-sum" || problem == "partition") {
    ClassicalInstance classical = classical_from_json(j);
    if (strategy != "dp" && strategy != "auto")
      throw ParseError("classical instances are solved with --strategy dp");
    std::optional<std::vector<int>> witness;
    if (const auto* ss = std::get_if<SubsetSumInstance>(&classical))
      witness = solve_subset_sum_dp(ss->sizes, ss->target);
    else
      witness = solve_partition_dp(std::get<PartitionInstance>(classical).sizes);
    result.strategy = "dp";
    result.yes = witness.has_value();
    if (witness) result.subset_cert = SubsetCertificate{*witness};
  } else {
    QuantumInstance inst = quantum_instance_from_json(j);
    SolveOptions opts;
    opts.threads = parallel;
    opts.deterministic = deterministic;
    if (auto* ses = std::get_if<SESInstance>(&inst)) {
      bool separable = is_product(ses->state) &&
                       ses->weight.kind == WeightFunction::Kind::Magnetization;
      if (strategy == "separable-mim" || (strategy == "auto" && separable))
        result = solve_ses_separable(*ses);
      else if (strategy == "brute" || strategy == "auto")
        result = solve_ses_bruteforce(*ses, opts);
      else
        throw ParseError("unknown strategy for ses: " + strategy);
    } else {
      if (strategy != "brute" && strategy != "auto")
        throw ParseError("sessp instances are solved with --strategy brute");
      result = solve_sessp_bruteforce(std::get<SESSPInstance>(inst), opts);
    }
  }

  std::cerr << "strategy=" << result.strategy
            << " subsets=" << result.stats.subsets_examined
            << " wall_ms=" << result.stats.wall_ms << "\n";
  // the result file omits timing so deterministic runs are byte-identical
  json out = result_to_json(result);
  if (!output.empty()) write_json_file(output, out);
  if (as_json || output.empty()) std::cout << out.dump(2) << "\n";
  return result.yes ? 0 : 1;
}

int cmd_verify(const std::string& instance_path, const std::string& cert_path) {
  json j = unwrap_instance(load_json_file(instance_path));
  json c = load_json_file(cert_path);
  QuantumInstance inst = quantum_instance_from_json(j);
  bool accepted = false;
  if (const auto* ses = std::get_if<SESInstance>(&inst)) {
    SubsetCertificate cert{c.at("sites").get<std::vector<int>>()};
    accepted = verify_ses(*ses, cert);
  } else {
    SplitCertificate cert{c.at("side_a").get<std::vector<int>>()};
    accepted = verify_sessp(std::get<SESSPInstance>(inst), cert);
  }
  std::cout << (accepted ? "accepted" : "rejected") << "\n";
  return accepted ? 0 : 1;
}

int cmd_inspect(const std::string& input, bool as_json) {
  json j = unwrap_instance(load_json_file(input));

  json report;
  if (j.contains("gammas")) {  // bare state file
    MPSState state = state_from_json(j);
    report["n"] = state.n;
    report["chi"] = max_bipartite_rank(state);
    report["cut_ranks"] = cut_ranks(state);
    report["norm_ok"] = true;
  } else {
    QuantumInstance inst = quantum_instance_from_json(j);
    const MPSState& state = std::holds_alternative<SESInstance>(inst)
                                ? std::get<SESInstance>(inst).state
                                : std::get<SESSPInstance>(inst).state;
    report["n"] = state.n;
    report["chi"] = max_bipartite_rank(state);
    report["cut_ranks"] = cut_ranks(state);
    report["norm_ok"] = true;  // state_from_json validated the invariants
    if (const auto* ses = std::get_if<SESInstance>(&inst)) {
      report["problem"] = "ses";
      report["weight"] = to_string(ses->weight);
      report["B"] = format_decimal(ses->target);
      report["epsilon"] = format_decimal(ses->epsilon);
    } else {
      const auto& sp = std::get<SESSPInstance>(inst);
      report["problem"] = "sessp";
      report["weight"] = to_string(sp.weight);
      report["epsilon"] = format_decimal(sp.epsilon);
    }
  }

  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "n = " << report["n"] << "\nchi = " << report["chi"] << "\ncut ranks =";
    for (const auto& r : report["cut_ranks"]) std::cout << " " << r;
    std::cout << "\nnorm check: ok\n";
    if (report.contains("problem")) {
      std::cout << "problem = " << report["problem"].get<std::string>()
                << "\nweight = " << report["weight"].get<std::string>() << "\n";
      if (report.contains("B")) std::cout << "B = " << report["B"].get<std::string>() << "\n";
      if (report.contains("epsilon"))
        std::cout << "epsilon = " << report["epsilon"].get<std::string>() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slightly-entangled state decision problems: instances, reductions, solvers"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random classical instance");
  gen_cmd->add_option("kind", gen.kind, "subset-sum | partition")
      ->check(CLI::IsMember({"subset-sum", "partition"}))
      ->required();
  gen_cmd->add_option("--n", gen.n, "number of items")->check(CLI::PositiveNumber)->required();
  gen_cmd->add_option("--max", gen.max_value, "maximum item size")
      ->check(CLI::PositiveNumber)
      ->required();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->default_val(0);
  gen_cmd->add_option("-o,--output", gen.output, "output file")->required();

  std::string input, output, target, strategy = "auto", cert_path;
  int parallel = 1;
  bool deterministic = false, as_json = false;

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a classical instance to SES/SESSP");
  reduce_cmd->add_option("-i,--input", input, "classical instance file")->required();
  reduce_cmd->add_option("--target", target, "ses | sessp | ses-entropy")
      ->check(CLI::IsMember({"ses", "sessp", "ses-entropy"}))
      ->required();
  reduce_cmd->add_option("-o,--output", output, "output bundle file")->required();

  auto* solve_cmd = app.add_subcommand("solve", "decide an instance");
  solve_cmd->add_option("-i,--input", input, "instance or bundle file")->required();
  solve_cmd->add_option("--strategy", strategy, "brute | separable-mim | dp | auto")
      ->check(CLI::IsMember({"brute", "separable-mim", "dp", "auto"}));
  solve_cmd->add_option("--parallel", parallel, "worker count")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--deterministic", deterministic, "stable witness tie-break");
  solve_cmd->add_option("-o,--output", output, "result file");
  solve_cmd->add_flag("--json", as_json, "print the result as JSON");

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
  verify_cmd->add_option("-i,--input", input, "instance or bundle file")->required();
  verify_cmd->add_option("-c,--certificate", cert_path, "certificate file")->required();

  auto* inspect_cmd = app.add_subcommand("inspect", "report on an instance or state file");
  inspect_cmd->add_option("-i,--input", input, "instance, bundle, or state file")->required();
  inspect_cmd->add_flag("--json", as_json, "print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (reduce_cmd->parsed()) return cmd_reduce(input, target, output);
    if (solve_cmd->parsed())
      return cmd_solve(input, strategy, parallel, deterministic, output, as_json);
    if (verify_cmd->parsed()) return cmd_verify(input, cert_path);
    if (inspect_cmd->parsed()) return cmd_inspect(input, as_json);
  } catch (const WindowTooNarrow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const TableTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const BlockCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include <iostream>

#include <CLI11.hpp>

#include "rtvd/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = rtvd::cli;
  CLI::App app{"Exact solvers for relaxed transitive-free vertex deletion"};
  app.require_subcommand(1);

  cli::SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("file", solve.path, "Instance file")->required();
  solve_cmd->add_option("--engine", solve.engine, "auto|oracle|tournament|alpha|alt|hitting")
      ->check(CLI::IsMember({"auto", "oracle", "tournament", "alpha", "alt", "hitting"}));
  solve_cmd->add_option("--alpha", solve.alpha, "Independence-number bound for the alpha engine");
  solve_cmd->add_option("--ell", solve.ell, "Override the allowed number of transitive arcs");
  solve_cmd->add_option("--k", solve.k, "Override the deletion budget");
  solve_cmd->add_option("--oracle-cap", solve.oracle_cap, "Brute-force cap (log2 of candidate sets)");

  cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a deletion set");
  verify_cmd->add_option("file", verify.path, "Instance file")->required();
  verify_cmd->add_option("--solution", verify.solution, "Comma separated 1-based vertex ids")->required();
  verify_cmd->add_option("--ell", verify.ell, "Override ell");
  verify_cmd->add_option("--k", verify.k, "Override k");

  cli::KernelizeOptions kernelize;
  auto* kernel_cmd = app.add_subcommand("kernelize", "Kernelize an in- or out-tournament instance");
  kernel_cmd->add_option("file", kernelize.path, "Instance file")->required();
  kernel_cmd->add_option("--provider", kernelize.provider, "trivial|flow")
      ->check(CLI::IsMember({"trivial", "flow"}));

  cli::ReduceOptions reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build an instance from vertex cover or multicut");
  reduce_cmd->add_option("--from", reduce.from, "vc|multicut")->required()->check(CLI::IsMember({"vc", "multicut"}));
  reduce_cmd->add_option("file", reduce.path, "Source instance (p edge / p mcut format)")->required();
  reduce_cmd->add_option("--k", reduce.k, "Budget")->required();
  reduce_cmd->add_option("--ell", reduce.ell, "Allowed transitive arcs (vc only)");

  cli::GenerateOptions generate;
  auto* gen_cmd = app.add_subcommand("generate", "Emit a seeded random instance");
  gen_cmd->add_option("--class", generate.graph_class, "tournament|alt|in|out|dag")
      ->required()
      ->check(CLI::IsMember({"tournament", "alt", "in", "out", "dag"}));
  gen_cmd->add_option("--n", generate.n, "Vertex count");
  gen_cmd->add_option("--seed", generate.seed, "Seed");
  gen_cmd->add_option("--p", generate.p, "Arc probability");
  gen_cmd->add_option("--reach", generate.reach, "alt: comma separated 1-based reach values");
  gen_cmd->add_option("--width", generate.width, "alt/in/out: maximum reach width");
  gen_cmd->add_option("--mode", generate.mode, "in/out: rejection|structured|thinned");
  gen_cmd->add_option("--k", generate.k, "Budget written to the header");
  gen_cmd->add_option("--ell", generate.ell, "ell written to the header");

  std::string recognize_path;
  auto* rec_cmd = app.add_subcommand("recognize", "Report graph classes");
  rec_cmd->add_option("file", recognize_path, "Instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitParse;
  }

  if (*solve_cmd) return cli::cmd_solve(solve, std::cout, std::cerr);
  if (*verify_cmd) return cli::cmd_verify(verify, std::cout, std::cerr);
  if (*kernel_cmd) return cli::cmd_kernelize(kernelize, std::cout, std::cerr);
  if (*reduce_cmd) return cli::cmd_reduce(reduce, std::cout, std::cerr);
  if (*gen_cmd) return cli::cmd_generate(generate, std::cout, std::cerr);
  return cli::cmd_recognize(recognize_path, std::cout, std::cerr);
}

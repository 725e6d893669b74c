// cubify: lattice basis reduction by cubification, with an LLL baseline.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cubify/commands.hpp"

int main(int argc, char** argv) {
  using namespace cubify;
  CLI::App app{"Exact lattice basis reduction by cubification (rhombicity-driven), with an LLL baseline"};
  app.require_subcommand(1);

  const std::map<std::string, LagrangeVariant> lagrange_map{{"append", LagrangeVariant::Append},
                                                            {"insert", LagrangeVariant::Insert}};
  const std::map<std::string, SimplificationVariant> simplify_map{{"append", SimplificationVariant::Append},
                                                                  {"insert", SimplificationVariant::Insert}};
  const std::map<std::string, MatrixFamily> family_map{{"full", MatrixFamily::FullRandom},
                                                       {"columnar", MatrixFamily::ColumnarRandom}};

  cli::ReduceArgs reduce;
  LagrangeVariant lagrange{};
  SimplificationVariant simplification{};
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a matrix by cubification");
  reduce_cmd->add_option("input", reduce.input, "Matrix file (one row vector per line)")->required();
  reduce_cmd->add_option("--method", reduce.method, "auto, 1 or 2")->check(CLI::IsMember({"auto", "1", "2"}));
  auto* lagrange_opt = reduce_cmd->add_option("--lagrange", lagrange, "Lagrange's division variant")
                           ->transform(CLI::CheckedTransformer(lagrange_map, CLI::ignore_case));
  auto* simplify_opt = reduce_cmd->add_option("--simplify", simplification, "Simplification variant")
                           ->transform(CLI::CheckedTransformer(simplify_map, CLI::ignore_case));
  reduce_cmd->add_flag("--pre-hyperplanar", reduce.pre_hyperplanar,
                       "Run one hyperplanar pass without sublattice reduction first");
  reduce_cmd->add_option("--max-cycles", reduce.max_cycles, "Cycle limit")->check(CLI::PositiveNumber);
  reduce_cmd->add_option("--out", reduce.out, "Write the reduced matrix here");
  reduce_cmd->add_option("--report", reduce.report, "Write the JSON report here");
  reduce_cmd->add_flag("--json", reduce.json, "Print the JSON report instead of a summary");

  cli::CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "Run cubification and LLL (alpha = 3/4) on the same matrix");
  compare_cmd->add_option("input", compare.input, "Matrix file")->required();
  compare_cmd->add_flag("--json", compare.json, "Print JSON");

  cli::BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Reduction factors on a battery of random matrices");
  bench_cmd->add_option("--family", bench.family, "full or columnar")
      ->transform(CLI::CheckedTransformer(family_map, CLI::ignore_case));
  bench_cmd->add_option("--dim", bench.dim, "Matrix dimension (>= 2)")->check(CLI::Range(2, 1000));
  bench_cmd->add_option("--count", bench.count, "Number of matrices")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Seed of the first matrix");
  bench_cmd->add_flag("--json", bench.json, "Print JSON");

  cli::VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a reduced matrix against its original and report");
  verify_cmd->add_option("original", verify.original, "Original matrix file")->required();
  verify_cmd->add_option("reduced", verify.reduced, "Reduced matrix file")->required();
  verify_cmd->add_option("report", verify.report, "JSON report written by reduce")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  try {
    if (*reduce_cmd) {
      if (*lagrange_opt) reduce.lagrange = lagrange;
      if (*simplify_opt) reduce.simplification = simplification;
      return cli::cmd_reduce(reduce, std::cout, std::cerr);
    }
    if (*compare_cmd) return cli::cmd_compare(compare, std::cout, std::cerr);
    if (*bench_cmd) return cli::cmd_bench(bench, std::cout, std::cerr);
    if (*verify_cmd) return cli::cmd_verify(verify, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 70;
  }
  return cli::kUsage;
}

#pragma once

// Implementation of the command-line subcommands, independent of argument
// parsing so they can be driven from tests.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "cubify/bench.hpp"
#include "cubify/cubifier.hpp"

namespace cubify::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseFailure = 1,
  kSingularInput = 2,
  kGenerationFailure = 3,
  kVerificationFailure = 4,
  kUsage = 64,
};

struct ReduceArgs {
  std::filesystem::path input;
  std::string method = "auto";  // auto | 1 | 2
  std::optional<LagrangeVariant> lagrange;
  std::optional<SimplificationVariant> simplification;
  bool pre_hyperplanar = false;
  std::size_t max_cycles = 1000;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> report;
  bool json = false;
};

struct CompareArgs {
  std::filesystem::path input;
  bool json = false;
};

struct BenchArgs {
  MatrixFamily family = MatrixFamily::FullRandom;
  std::size_t dim = 10;
  std::size_t count = 50;
  std::uint64_t seed = 1;
  bool json = false;
};

struct VerifyArgs {
  std::filesystem::path original;
  std::filesystem::path reduced;
  std::filesystem::path report;
};

int cmd_reduce(const ReduceArgs& args, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

/// Options that cmd_reduce would run with (after classification and overrides).
std::optional<CubifyOptions> resolve_options(const ReduceArgs& args, const Basis& input);

}  // namespace cubify::cli

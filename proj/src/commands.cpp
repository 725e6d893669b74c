#include "cubify/commands.hpp"

#include <chrono>
#include <fstream>

#include "cubify/lll.hpp"
#include "cubify/matrix_io.hpp"
#include "cubify/report_json.hpp"

namespace cubify::cli {

namespace {

// Reads and validates an input matrix; on failure reports and sets `code`.
std::optional<Basis> load_basis(const std::filesystem::path& path, std::ostream& err, int& code) {
  try {
    Basis b = read_matrix_file(path);
    require_independent(b);
    return b;
  } catch (const ParseError& e) {
    err << path.string() << ": " << e.what() << '\n';
    code = kParseFailure;
  } catch (const SingularBasisError& e) {
    err << path.string() << ": " << e.what() << '\n';
    code = kSingularInput;
  }
  return std::nullopt;
}

void print_summary(std::ostream& out, const CubifyResult& res) {
  const ReductionReport& r = res.report;
  if (r.classification) out << "class:   " << to_string(*r.classification) << '\n';
  out << "method:  " << to_string(r.options.method) << " (lagrange " << to_string(r.options.lagrange)
      << ", simplification " << to_string(r.options.simplification)
      << (r.options.pre_hyperplanar ? ", pre-hyperplanar" : "") << ")\n";
  out << "R:       " << r.r_in << " -> " << r.r_out << '\n';
  out << "S:       " << r.s_in << " -> " << r.s_out << '\n';
  out << "cycles:  " << r.cycles << (r.max_cycles_reached ? " (max cycles reached)" : "") << '\n';
  out << "time:    " << r.timings.total.count() << " s\n";
}

}  // namespace

std::optional<CubifyOptions> resolve_options(const ReduceArgs& args, const Basis& input) {
  const bool overridden = args.lagrange || args.simplification || args.pre_hyperplanar || args.max_cycles != 1000;
  if (args.method == "auto" && !overridden) return std::nullopt;

  CubifyOptions o;
  if (args.method == "auto") {
    o = options_for(classify(input));
  } else if (args.method == "1" || args.method == "2") {
    o.method = args.method == "1" ? Method::Method1 : Method::Method2;
  } else {
    throw std::invalid_argument("--method must be auto, 1 or 2");
  }
  if (args.lagrange) o.lagrange = *args.lagrange;
  if (args.simplification) o.simplification = *args.simplification;
  if (args.pre_hyperplanar) o.pre_hyperplanar = true;
  o.max_cycles = args.max_cycles;
  return o;
}

int cmd_reduce(const ReduceArgs& args, std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto input = load_basis(args.input, err, code);
  if (!input) return code;

  std::optional<CubifyOptions> opts;
  try {
    opts = resolve_options(args, *input);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  CubifyResult res = cubify(*input, opts);
  if (opts) res.report.classification = classify(*input);
  const Verification v = verify(*input, res.basis, res.report);
  const nlohmann::json doc = reduce_document(*input, res, v);

  if (args.out) write_matrix_file(*args.out, res.basis);
  if (args.report) {
    std::ofstream rep(*args.report);
    rep << doc.dump(2) << '\n';
  }
  if (args.json) {
    out << doc.dump(2) << '\n';
  } else {
    print_summary(out, res);
    out << "verified: " << (v.ok ? "yes" : "NO") << '\n';
    if (!args.out) out << '\n' << format_matrix(res.basis);
  }
  return v.ok ? kOk : kVerificationFailure;
}

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto input = load_basis(args.input, err, code);
  if (!input) return code;

  CubifyResult cub = cubify(*input);
  const auto start = std::chrono::steady_clock::now();
  LllResult lll = lll_reduce_tracked(*input);
  const double lll_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (args.json) {
    out << compare_document(*input, cub, lll, lll_seconds).dump(2) << '\n';
  } else {
    const MetricTensor m = metric_tensor(lll.basis);
    out << "input:        R = " << cub.report.r_in << ", S = " << cub.report.s_in << '\n';
    out << "cubification: R = " << cub.report.r_out << ", S = " << cub.report.s_out << ", cycles "
        << cub.report.cycles << ", " << cub.report.timings.total.count() << " s\n";
    out << "LLL (3/4):    R = " << rhombicity(m) << ", S = " << norm_sum(m) << ", swaps " << lll.swaps << ", "
        << lll_seconds << " s\n";
  }
  return kOk;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.dim < 2 || args.count < 1) {
    err << "bench: --dim must be >= 2 and --count >= 1\n";
    return kUsage;
  }
  GeneratorSpec spec;
  spec.family = args.family;
  spec.dim = args.dim;
  spec.seed = args.seed;
  const Algorithm algorithms[] = {Algorithm::Cubify, Algorithm::Lll};
  BatteryResult battery;
  try {
    battery = run_battery(spec, args.count, algorithms);
  } catch (const GenerationError& e) {
    err << e.what() << '\n';
    return kGenerationFailure;
  } catch (const VerificationFailure& e) {
    err << e.what() << '\n';
    return kVerificationFailure;
  }

  if (args.json) {
    out << bench_document(battery).dump(2) << '\n';
  } else {
    out << to_string(spec.family) << " random " << spec.dim << 'x' << spec.dim << ", " << battery.count
        << " matrices, seeds " << spec.seed << ".." << spec.seed + battery.count - 1 << '\n';
    for (const auto& a : battery.aggregates) {
      out << "  " << to_string(a.algorithm) << ": R factor " << a.mean_r_factor << ", S factor " << a.mean_s_factor
          << ", mean time " << a.mean_seconds << " s\n";
    }
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  Basis original, reduced;
  ReductionReport report;
  try {
    original = read_matrix_file(args.original);
    reduced = read_matrix_file(args.reduced);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kParseFailure;
  }
  try {
    std::ifstream in(args.report);
    if (!in) throw std::invalid_argument("cannot open " + args.report.string());
    report = report_from_json(nlohmann::json::parse(in));
  } catch (const std::exception& e) {
    err << args.report.string() << ": " << e.what() << '\n';
    return kParseFailure;
  }

  const Verification v = verify(original, reduced, report);
  for (const auto& d : v.diagnostics) err << "verify: " << d << '\n';
  out << (v.ok ? "OK" : "FAILED") << '\n';
  return v.ok ? kOk : kVerificationFailure;
}

}  // namespace cubify::cli

#include "cubify/report_json.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include "cubify/matrix_io.hpp"

namespace cubify {

using nlohmann::json;

namespace {

constexpr std::int64_t kSafeInteger = (std::int64_t{1} << 53) - 1;

json timings_to_json(const PhaseTimings& t) {
  return {{"pre_hyperplanar", t.pre_hyperplanar.count()},
          {"sort", t.sort.count()},
          {"directional", t.directional.count()},
          {"hyperplanar", t.hyperplanar.count()},
          {"total", t.total.count()}};
}

PhaseTimings timings_from_json(const json& j) {
  PhaseTimings t;
  t.pre_hyperplanar = PhaseTimings::Duration(j.value("pre_hyperplanar", 0.0));
  t.sort = PhaseTimings::Duration(j.value("sort", 0.0));
  t.directional = PhaseTimings::Duration(j.value("directional", 0.0));
  t.hyperplanar = PhaseTimings::Duration(j.value("hyperplanar", 0.0));
  t.total = PhaseTimings::Duration(j.value("total", 0.0));
  return t;
}

MatrixClass class_from_string(const std::string& s) {
  for (MatrixClass c : {MatrixClass::SmallColumnar, MatrixClass::LargeColumnar, MatrixClass::LargeHeterogeneous,
                        MatrixClass::Random}) {
    if (s == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown matrix class '" + s + "'");
}

}  // namespace

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) {
    const long v = x.get_si();
    if (v >= -kSafeInteger && v <= kSafeInteger) return static_cast<std::int64_t>(v);
  }
  return x.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("not a decimal integer: " + j.dump());
    return x;
  }
  throw std::invalid_argument("expected an integer or decimal string, got " + j.dump());
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(integer_to_json(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  IntMatrix m;
  for (const auto& row : j) {
    IntVector r;
    for (const auto& x : row) r.push_back(integer_from_json(x));
    m.push_back(std::move(r));
  }
  return m;
}

std::string input_digest(const Basis& b) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_matrix(b)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

json options_to_json(const CubifyOptions& o) {
  return {{"method", std::stoi(to_string(o.method))},
          {"lagrange", to_string(o.lagrange)},
          {"simplification", to_string(o.simplification)},
          {"pre_hyperplanar", o.pre_hyperplanar},
          {"max_cycles", o.max_cycles}};
}

CubifyOptions options_from_json(const json& j) {
  CubifyOptions o;
  o.method = j.at("method").get<int>() == 2 ? Method::Method2 : Method::Method1;
  o.lagrange = j.at("lagrange").get<std::string>() == "append" ? LagrangeVariant::Append : LagrangeVariant::Insert;
  o.simplification = j.at("simplification").get<std::string>() == "append" ? SimplificationVariant::Append
                                                                          : SimplificationVariant::Insert;
  o.pre_hyperplanar = j.at("pre_hyperplanar").get<bool>();
  o.max_cycles = j.at("max_cycles").get<std::size_t>();
  return o;
}

json reduce_document(const Basis& input, const CubifyResult& result, const Verification& verification) {
  const ReductionReport& r = result.report;
  json history = json::array();
  for (const auto& x : r.r_history) history.push_back(integer_to_json(x));
  return {{"schema", kReportSchema},
          {"kind", "reduce"},
          {"input_digest", input_digest(input)},
          {"dimension", input.dim()},
          {"classification", r.classification ? json(to_string(*r.classification)) : json(nullptr)},
          {"options", options_to_json(r.options)},
          {"r_in", integer_to_json(r.r_in)},
          {"r_out", integer_to_json(r.r_out)},
          {"s_in", integer_to_json(r.s_in)},
          {"s_out", integer_to_json(r.s_out)},
          {"cycles", r.cycles},
          {"max_cycles_reached", r.max_cycles_reached},
          {"r_history", std::move(history)},
          {"transform", matrix_to_json(r.transform)},
          {"output", matrix_to_json(result.basis.rows())},
          {"timings", timings_to_json(r.timings)},
          {"verification", {{"ok", verification.ok}, {"diagnostics", verification.diagnostics}}}};
}

ReductionReport report_from_json(const json& doc) {
  if (doc.value("schema", "") != kReportSchema) {
    throw std::invalid_argument(std::string("unsupported report schema, expected ") + kReportSchema);
  }
  ReductionReport r;
  r.r_in = integer_from_json(doc.at("r_in"));
  r.r_out = integer_from_json(doc.at("r_out"));
  r.s_in = integer_from_json(doc.at("s_in"));
  r.s_out = integer_from_json(doc.at("s_out"));
  r.cycles = doc.at("cycles").get<std::size_t>();
  r.max_cycles_reached = doc.value("max_cycles_reached", false);
  r.options = options_from_json(doc.at("options"));
  if (doc.contains("classification") && !doc.at("classification").is_null()) {
    r.classification = class_from_string(doc.at("classification").get<std::string>());
  }
  r.transform = matrix_from_json(doc.at("transform"));
  if (doc.contains("timings")) r.timings = timings_from_json(doc.at("timings"));
  if (doc.contains("r_history")) {
    for (const auto& x : doc.at("r_history")) r.r_history.push_back(integer_from_json(x));
  }
  return r;
}

json compare_document(const Basis& input, const CubifyResult& cubified, const LllResult& lll, double lll_seconds) {
  const MetricTensor m = metric_tensor(lll.basis);
  return {{"schema", kReportSchema},
          {"kind", "compare"},
          {"input_digest", input_digest(input)},
          {"dimension", input.dim()},
          {"r_in", integer_to_json(cubified.report.r_in)},
          {"s_in", integer_to_json(cubified.report.s_in)},
          {"cubify",
           {{"classification", cubified.report.classification ? json(to_string(*cubified.report.classification))
                                                              : json(nullptr)},
            {"options", options_to_json(cubified.report.options)},
            {"r_out", integer_to_json(cubified.report.r_out)},
            {"s_out", integer_to_json(cubified.report.s_out)},
            {"cycles", cubified.report.cycles},
            {"seconds", cubified.report.timings.total.count()},
            {"transform", matrix_to_json(cubified.report.transform)},
            {"output", matrix_to_json(cubified.basis.rows())}}},
          {"lll",
           {{"alpha", "3/4"},
            {"r_out", integer_to_json(rhombicity(m))},
            {"s_out", integer_to_json(norm_sum(m))},
            {"swaps", lll.swaps},
            {"seconds", lll_seconds},
            {"transform", matrix_to_json(lll.transform)},
            {"output", matrix_to_json(lll.basis.rows())}}}};
}

json bench_document(const BatteryResult& battery) {
  json records = json::array();
  for (const auto& r : battery.records) {
    records.push_back({{"index", r.index},
                       {"seed", r.seed},
                       {"algorithm", to_string(r.algorithm)},
                       {"r_in", integer_to_json(r.r_in)},
                       {"r_out", integer_to_json(r.r_out)},
                       {"s_in", integer_to_json(r.s_in)},
                       {"s_out", integer_to_json(r.s_out)},
                       {"r_factor", r.r_factor},
                       {"s_factor", r.s_factor},
                       {"seconds", r.seconds}});
  }
  json aggregates = json::array();
  for (const auto& a : battery.aggregates) {
    aggregates.push_back({{"algorithm", to_string(a.algorithm)},
                          {"count", a.count},
                          {"mean_r_factor", a.mean_r_factor},
                          {"mean_s_factor", a.mean_s_factor},
                          {"mean_seconds", a.mean_seconds}});
  }
  return {{"schema", kReportSchema},
          {"kind", "bench"},
          {"family", to_string(battery.spec.family)},
          {"dimension", battery.spec.dim},
          {"count", battery.count},
          {"seed", battery.spec.seed},
          {"entry_range", {battery.spec.entry_min, battery.spec.entry_max}},
          {"records", std::move(records)},
          {"aggregates", std::move(aggregates)}};
}

}  // namespace cubify

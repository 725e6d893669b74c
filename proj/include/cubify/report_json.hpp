#pragma once

// JSON documents emitted by the command-line tool ("schema": "cubify-report/1").
// Integers beyond the 53-bit safe range are written as decimal strings.

#include <string>

#include <json.hpp>

#include "cubify/bench.hpp"
#include "cubify/cubifier.hpp"
#include "cubify/lll.hpp"

namespace cubify {

inline constexpr const char* kReportSchema = "cubify-report/1";

nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

/// FNV-1a 64-bit hash of the canonical text form, as "fnv1a64:<hex>".
std::string input_digest(const Basis& b);

nlohmann::json options_to_json(const CubifyOptions& o);
CubifyOptions options_from_json(const nlohmann::json& j);

nlohmann::json reduce_document(const Basis& input, const CubifyResult& result, const Verification& verification);
/// Reads back the report part of a reduce document.
ReductionReport report_from_json(const nlohmann::json& doc);

nlohmann::json compare_document(const Basis& input, const CubifyResult& cubified, const LllResult& lll,
                                double lll_seconds);

nlohmann::json bench_document(const BatteryResult& battery);

}  // namespace cubify

#pragma once

#include <string>

#include <json.hpp>

#include "ftspan/congest.hpp"
#include "ftspan/detkit.hpp"
#include "ftspan/spanner_result.hpp"
#include "ftspan/verifier.hpp"

namespace ftspan {

using Json = nlohmann::json;

/// Wall times appear only with `timings`, so default output is byte-stable.
Json to_json(const SpannerResult& r, bool timings = false);
SpannerResult spanner_result_from_json(const Json& j);

Json to_json(const VerificationReport& r);
Json to_json(const CertificateReport& r);
Json to_json(const RoundReport& r);

/// {"ground": [...], "sets": [[...], ...], "delta": x, "beta": b, "c": c}
HittingInstance hitting_instance_from_json(const Json& j);

/// Two-space indented, keys sorted, trailing newline.
std::string dump(const Json& j);

SpannerResult load_result(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace ftspan

#pragma once

#include <string>

#include "json.hpp"
#include "revo/harness.hpp"
#include "revo/mahler.hpp"
#include "revo/reduction.hpp"
#include "revo/revolve.hpp"
#include "revo/slide_family.hpp"

namespace revo {

using Json = nlohmann::ordered_json;

// Readers validate every invariant and throw IoError naming the offending
// field. Accepted shapes:
//   polygon            {"chain": [[x, y], ...]}
//   generating function {"a": real, "breakpoints": [[x, f], ...]}
//                       {"a": real, "analytic": "unit-disk"}
//   parallel sections  {"crossSection": <polygon>, "generator": <function>}
//   axis profile       {"h": real, "breakpoints": [[x, f], ...]}
UnconditionalPolygon read_polygon(const Json& j, const std::string& where);
GeneratingFunction read_generating_function(const Json& j, const std::string& where);
ParallelSectionsBody read_psh_body(const Json& j, const std::string& where);
AxisProfile read_axis_profile(const Json& j, const std::string& where);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Json polygon_to_json(const UnconditionalPolygon& p);
Json generating_function_to_json(const GeneratingFunction& f);
Json mahler_report_to_json(const MahlerReport& report);
Json santalo_result_to_json(const SantaloSearchResult& result);
Json slice_report_to_json(const SliceDualityReport& report);
Json sign_claim_report_to_json(const slide::SignClaimReport& report);
Json certificate_to_json(const UnconditionalPolygon& input, const ReductionCertificate& cert);
Json sweep_summary_to_json(const SweepConfig& cfg, const SweepSummary& summary);
Json golden_report_to_json(const GoldenReport& report);

}  // namespace revo

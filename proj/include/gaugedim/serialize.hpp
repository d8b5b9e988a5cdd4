#ifndef GAUGEDIM_SERIALIZE_HPP
#define GAUGEDIM_SERIALIZE_HPP

#include <cstdint>
#include <string>

#include "json.hpp"

#include "gaugedim/algodim.hpp"
#include "gaugedim/constructions.hpp"
#include "gaugedim/covering.hpp"
#include "gaugedim/dimension.hpp"
#include "gaugedim/hyperspace.hpp"
#include "gaugedim/report.hpp"

namespace gaugedim {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "gaugedim";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json to_json(const CheckItem& item);
nlohmann::json to_json(const ValidationReport& rep);
nlohmann::json to_json(const Scale& s);
nlohmann::json to_json(const CoveringProfile& prof);
nlohmann::json to_json(const LogCountProfile& prof);
nlohmann::json to_json(const DimensionEstimate& est);
nlohmann::json to_json(const IntervalSet& set);
nlohmann::json to_json(const ComplexityProfile& prof);
nlohmann::json to_json(const HyperCoverResult& res);
nlohmann::json to_json(const HyperVerifyReport& rep);
nlohmann::json to_json(const CompactApprox& approx);

IntervalSet interval_set_from_json(const nlohmann::json& j);

/// Artifact envelope: schema version, tool id, command, seed, the fully
/// resolved config and the result. Deterministic bytes for fixed inputs.
nlohmann::json make_artifact(const std::string& command,
                             const nlohmann::json& config,
                             std::uint64_t seed,
                             nlohmann::json result);

/// Parses and checks the envelope (schema field etc.); throws on mismatch.
nlohmann::json parse_artifact(const std::string& text);

/// CSV emitters; columns documented and stable.
/// delta,n_cover,n_cover_dense,n_pack,mode
std::string profile_csv(const CoveringProfile& prof);
/// delta,k,provenance
std::string complexity_csv(const ComplexityProfile& prof);
/// delta,count_or_k,gauge_value_log2,candidate_s,trend  (one row per
/// scale/candidate pair; empty diagnostics give a header-only file)
std::string estimate_diagnostics_csv(const DimensionEstimate& est, const LogCountProfile& source);
/// value,s_lo,s_hi,kind,method,gauge,delta_max,delta_min (one row per estimate)
std::string estimates_summary_csv(const std::vector<DimensionEstimate>& estimates);
/// delta,lower,upper,exact
std::string hyper_bounds_csv(const std::vector<std::pair<Scale, HyperCoverResult>>& rows);

void write_text_file(const std::string& path, const std::string& text);

} // namespace gaugedim

#endif

#include "gaugedim/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gaugedim/errors.hpp"

namespace gaugedim {

using nlohmann::json;

json to_json(const CheckItem& item) {
    json j{{"name", item.name}, {"pass", item.pass}};
    if (!item.witness.empty()) j["witness"] = item.witness;
    if (!item.data.empty()) j["data"] = item.data;
    return j;
}

json to_json(const ValidationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back(to_json(c));
    return json{{"subject", rep.subject}, {"all_pass", rep.all_pass()}, {"checks", checks}};
}

json to_json(const Scale& s) {
    json j{{"value", s.value}};
    if (s.exact) j["exact"] = s.exact->str();
    return j;
}

json to_json(const CoveringProfile& prof) {
    json rows = json::array();
    for (const auto& e : prof.entries) {
        json r{{"delta", to_json(e.delta)},
               {"n_cover", e.n_cover},
               {"mode", to_string(e.mode)}};
        if (e.n_cover_dense) r["n_cover_dense"] = *e.n_cover_dense;
        if (e.n_pack) r["n_pack"] = *e.n_pack;
        rows.push_back(std::move(r));
    }
    return json{{"entries", rows}};
}

json to_json(const LogCountProfile& prof) {
    json rows = json::array();
    for (const auto& [delta, log2n] : prof.entries)
        rows.push_back(json{{"delta", to_json(delta)}, {"log2_count", log2n}});
    return json{{"entries", rows}};
}

json to_json(const DimensionEstimate& est) {
    json diags = json::array();
    for (const auto& d : est.diagnostics) {
        json vals = json::array();
        for (double v : d.window_values)
            vals.push_back(std::isinf(v) ? json("-inf") : json(v));
        diags.push_back(json{{"s", d.s},
                             {"accepted", d.accepted},
                             {"reason", d.reason},
                             {"window_values", vals}});
    }
    return json{{"value", est.value},
                {"bracket", json::array({est.s_lo, est.s_hi})},
                {"kind", to_string(est.kind)},
                {"method", est.method},
                {"gauge", est.gauge},
                {"scale_window", json::array({est.window_delta_max, est.window_delta_min})},
                {"diagnostics", diags}};
}

json to_json(const IntervalSet& set) {
    json iv = json::array();
    for (long long n : set.nums) iv.push_back(json::array({n, n + 1}));
    return json{{"level", set.level},
                {"denominator_power", set.level},
                {"intervals", iv},
                {"labels", set.labels}};
}

IntervalSet interval_set_from_json(const json& j) {
    IntervalSet set;
    set.level = j.at("level").get<int>();
    for (const auto& pair : j.at("intervals")) {
        if (!pair.is_array() || pair.size() != 2 ||
            pair[1].get<long long>() != pair[0].get<long long>() + 1)
            throw precondition_error("bad interval entry in JSON");
        set.nums.push_back(pair[0].get<long long>());
    }
    if (j.contains("labels")) set.labels = j.at("labels").get<std::vector<std::string>>();
    return set;
}

json to_json(const ComplexityProfile& prof) {
    json rows = json::array();
    for (const auto& [delta, k] : prof.entries)
        rows.push_back(json{{"delta", to_json(delta)}, {"k", k}});
    return json{{"entries", rows}, {"provenance", prof.provenance}};
}

json to_json(const HyperCoverResult& res) {
    json j{{"lower", res.lower},
           {"upper", res.upper},
           {"packing_m", res.packing_m},
           {"covering_n", res.covering_n}};
    if (res.exact) j["exact"] = *res.exact;
    return j;
}

json to_json(const HyperVerifyReport& rep) {
    return json{{"base", to_json(rep.base)},
                {"hyper_upper", to_json(rep.hyper_upper)},
                {"hyper_lower", to_json(rep.hyper_lower)},
                {"difference_upper", rep.diff_upper},
                {"difference_lower", rep.diff_lower},
                {"tolerance", rep.tolerance},
                {"pass", rep.pass},
                {"base_profile", to_json(rep.base_profile)},
                {"hyper_upper_profile", to_json(rep.hyper_upper_profile)},
                {"hyper_lower_profile", to_json(rep.hyper_lower_profile)}};
}

json to_json(const CompactApprox& approx) {
    std::vector<std::string> pts;
    pts.reserve(approx.points.size());
    for (PointId p : approx.points) pts.push_back(approx.space->point_repr(p));
    std::sort(pts.begin(), pts.end());
    return json{{"points", pts},
                {"resolution", to_json(approx.resolution)},
                {"space", approx.space->describe()}};
}

json make_artifact(const std::string& command,
                   const json& config,
                   std::uint64_t seed,
                   json result) {
    return json{{"schema", kSchemaVersion},
                {"tool", json{{"name", kToolName}, {"version", kToolVersion}}},
                {"command", command},
                {"seed", seed},
                {"config", config},
                {"result", std::move(result)}};
}

json parse_artifact(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("schema") || j["schema"].get<int>() != kSchemaVersion)
        throw precondition_error("artifact schema version mismatch");
    for (const char* key : {"tool", "command", "config", "result"})
        if (!j.contains(key)) throw precondition_error(std::string("artifact missing ") + key);
    return j;
}

namespace {

std::string num(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

std::string profile_csv(const CoveringProfile& prof) {
    std::ostringstream os;
    os << "delta,n_cover,n_cover_dense,n_pack,mode\n";
    for (const auto& e : prof.entries) {
        os << num(e.delta.value) << "," << e.n_cover << ",";
        if (e.n_cover_dense) os << *e.n_cover_dense;
        os << ",";
        if (e.n_pack) os << *e.n_pack;
        os << "," << to_string(e.mode) << "\n";
    }
    return os.str();
}

std::string complexity_csv(const ComplexityProfile& prof) {
    std::ostringstream os;
    os << "delta,k,provenance\n";
    for (const auto& [delta, k] : prof.entries)
        os << num(delta.value) << "," << num(k) << "," << prof.provenance << "\n";
    return os.str();
}

std::string estimate_diagnostics_csv(const DimensionEstimate& est, const LogCountProfile& source) {
    std::ostringstream os;
    os << "delta,count_or_k,gauge_value_log2,candidate_s,trend\n";
    if (source.entries.empty()) return os.str();
    for (const auto& rec : est.diagnostics) {
        std::size_t w = rec.window_values.size();
        if (w > source.entries.size()) continue;
        std::size_t begin = source.entries.size() - w;
        for (std::size_t i = 0; i < w; ++i) {
            const auto& [delta, log2n] = source.entries[begin + i];
            double gauge_log2 = rec.window_values[i] - log2n;
            os << num(delta.value) << "," << num(log2n) << "," << num(gauge_log2) << ","
               << num(rec.s) << "," << (rec.accepted ? "accept" : "reject") << "\n";
        }
    }
    return os.str();
}

std::string estimates_summary_csv(const std::vector<DimensionEstimate>& estimates) {
    std::ostringstream os;
    os << "value,s_lo,s_hi,kind,method,gauge,delta_max,delta_min\n";
    for (const auto& e : estimates)
        os << num(e.value) << "," << num(e.s_lo) << "," << num(e.s_hi) << ","
           << to_string(e.kind) << "," << e.method << "," << e.gauge << ","
           << num(e.window_delta_max) << "," << num(e.window_delta_min) << "\n";
    return os.str();
}

std::string hyper_bounds_csv(const std::vector<std::pair<Scale, HyperCoverResult>>& rows) {
    std::ostringstream os;
    os << "delta,lower,upper,exact\n";
    for (const auto& [delta, res] : rows) {
        os << num(delta.value) << "," << res.lower << "," << res.upper << ",";
        if (res.exact) os << *res.exact;
        os << "\n";
    }
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw precondition_error("cannot write " + path);
    out << text;
    if (!out) throw precondition_error("write failed: " + path);
}

} // namespace gaugedim

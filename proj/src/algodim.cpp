#include "gaugedim/algodim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "gaugedim/errors.hpp"

namespace gaugedim {

namespace {

std::size_t ceil_log2(std::size_t n) {
    std::size_t b = 0;
    while ((std::size_t(1) << b) < n) ++b;
    return b;
}

} // namespace

std::size_t lz78_code_length(const std::vector<std::uint8_t>& bits) {
    // trie over {0,1}; node 0 is the empty phrase
    std::vector<std::array<std::int32_t, 2>> child;
    child.push_back({-1, -1});
    std::size_t phrases = 0;
    std::size_t total_bits = 0;
    std::int32_t cur = 0;
    for (std::uint8_t b : bits) {
        if (b > 1) throw precondition_error("lz78 input must be 0/1");
        std::int32_t nxt = child[cur][b];
        if (nxt >= 0) {
            cur = nxt;
            continue;
        }
        ++phrases;
        total_bits += ceil_log2(phrases) + 1; // index into current dictionary + literal
        child[cur][b] = static_cast<std::int32_t>(child.size());
        child.push_back({-1, -1});
        cur = 0;
    }
    if (cur != 0) {
        ++phrases;
        total_bits += ceil_log2(phrases); // trailing phrase: index only
    }
    return total_bits;
}

std::size_t lz78_code_length(const std::string& bits01) {
    std::vector<std::uint8_t> v;
    v.reserve(bits01.size());
    for (char c : bits01) {
        if (c != '0' && c != '1') throw precondition_error("lz78 input must be 0/1");
        v.push_back(c == '1' ? 1 : 0);
    }
    return lz78_code_length(v);
}

void ComplexityProfile::validate() const {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!(entries[i].second >= 0.0) || !std::isfinite(entries[i].second))
            throw precondition_error("complexity values must be finite and >= 0");
        if (i > 0 && !(entries[i].first.value < entries[i - 1].first.value))
            throw precondition_error("profile deltas must be strictly decreasing");
    }
}

namespace {

std::size_t codeword_complexity(const std::string& minimal, int resolution) {
    // K(q): min over q's codewords = minimal expansion + trailing-zero pads
    std::string w = minimal;
    std::size_t best = lz78_code_length(w);
    while (static_cast<int>(w.size()) < resolution) {
        w.push_back('0');
        best = std::min(best, lz78_code_length(w));
    }
    return best;
}

template <typename Candidates>
double min_complexity(const Candidates& cands) {
    if (cands.empty()) throw precondition_error("net too coarse: no codeword within delta");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : cands)
        best = std::min(best, static_cast<double>(codeword_complexity(c.minimal_codeword, c.resolution)));
    return best;
}

} // namespace

double point_complexity_at(double x, int r) {
    return min_complexity(DyadicEnumeration::candidates_near(x, std::exp2(-r), r));
}

ComplexityProfile complexity_profile_of_point(double x, const std::vector<int>& resolutions) {
    if (resolutions.empty()) throw precondition_error("empty resolution schedule");
    ComplexityProfile prof;
    prof.provenance = "proxy";
    for (std::size_t i = 0; i < resolutions.size(); ++i) {
        int r = resolutions[i];
        if (i > 0 && r <= resolutions[i - 1])
            throw precondition_error("resolutions must be strictly increasing");
        prof.entries.emplace_back(Scale::power_of(2, r), point_complexity_at(x, r));
    }
    prof.validate();
    return prof;
}

ComplexityProfile complexity_profile_of_bits(const std::vector<std::uint8_t>& x_bits,
                                             const std::vector<int>& resolutions) {
    if (resolutions.empty()) throw precondition_error("empty resolution schedule");
    ComplexityProfile prof;
    prof.provenance = "proxy";
    for (std::size_t i = 0; i < resolutions.size(); ++i) {
        int r = resolutions[i];
        if (i > 0 && r <= resolutions[i - 1])
            throw precondition_error("resolutions must be strictly increasing");
        double k = min_complexity(DyadicEnumeration::candidates_near_bits(x_bits, r));
        if (r > 1060) throw precondition_error("resolution beyond supported depth");
        // exact rational scales up to 2^-96; deeper ones carry the double only
        prof.entries.push_back(
            {r <= 96 ? Scale::power_of(2, r) : Scale::of(std::exp2(-r)), k});
    }
    prof.validate();
    return prof;
}

ComplexityProfile synthetic_profile(const std::string& descriptor, int r_min, int r_max) {
    if (r_min < 1 || r_max < r_min) throw precondition_error("bad synthetic profile range");
    auto colon = descriptor.find(':');
    if (colon == std::string::npos)
        throw precondition_error("bad synthetic descriptor: " + descriptor);
    std::string kind = descriptor.substr(0, colon);
    std::string args = descriptor.substr(colon + 1);
    auto parse_num = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw precondition_error("bad synthetic descriptor: " + descriptor);
        }
    };
    ComplexityProfile prof;
    prof.provenance = "synthetic";
    for (int r = r_min; r <= r_max; ++r) {
        double k = 0.0;
        if (kind == "ratio") {
            k = parse_num(args) * r;
        } else if (kind == "pow2") {
            k = std::exp2(parse_num(args) * r);
        } else if (kind == "alt") {
            auto comma = args.find(',');
            if (comma == std::string::npos)
                throw precondition_error("bad synthetic descriptor: " + descriptor);
            double a = parse_num(args.substr(0, comma));
            double b = parse_num(args.substr(comma + 1));
            k = (r % 2 == 0 ? a : b) * r;
        } else if (kind == "const") {
            k = parse_num(args);
        } else {
            throw precondition_error("bad synthetic descriptor: " + descriptor);
        }
        prof.entries.push_back(
            {r <= 96 ? Scale::power_of(2, r) : Scale::of(std::exp2(-r)), k});
    }
    return prof;
}

DimensionEstimate gauged_dim_from_profile(const ComplexityProfile& profile,
                                          const GaugeFamily& family,
                                          DimKind kind,
                                          const EstimatorConfig& cfg) {
    profile.validate();
    LogCountProfile lp;
    for (const auto& [delta, k] : profile.entries) lp.entries.emplace_back(delta, k);
    return estimate_log_profile(lp, family, kind, cfg, "gauged-algo");
}

double direct_ratio_dimension(const ComplexityProfile& profile,
                              DimKind kind,
                              std::size_t window) {
    profile.validate();
    const auto& es = profile.entries;
    if (es.size() < 2) throw precondition_error("ratio dimension needs >= 2 scales");
    std::size_t w = window == 0 ? (es.size() + 1) / 2 : std::min(window, es.size());
    double best = kind == DimKind::upper ? -std::numeric_limits<double>::infinity()
                                         : std::numeric_limits<double>::infinity();
    for (std::size_t i = es.size() - w; i < es.size(); ++i) {
        double ratio = es[i].second / -std::log2(es[i].first.value);
        best = kind == DimKind::upper ? std::max(best, ratio) : std::min(best, ratio);
    }
    return best;
}

JumpCharacterization jump_characterization(const ComplexityProfile& profile,
                                           const GaugeFamily& family,
                                           DimKind kind,
                                           const EstimatorConfig& cfg) {
    profile.validate();
    JumpCharacterization out;

    // s_direct: inf{s : lim K(delta) phi_s(delta) = 0}, log2 K in the product
    LogCountProfile direct;
    for (const auto& [delta, k] : profile.entries)
        direct.entries.emplace_back(delta, k > 0.0 ? std::log2(k)
                                                   : -std::numeric_limits<double>::infinity());
    out.direct = estimate_log_profile(direct, family, kind, cfg, "jump-direct");

    // s_jump: gauged dimension under the jump family
    out.jumped = gauged_dim_from_profile(profile, GaugeFamily::jump_of(family), kind, cfg);
    out.jumped.method = "jump-gauged";

    out.discrepancy = std::fabs(out.direct.value - out.jumped.value);
    return out;
}

} // namespace gaugedim

#include "gaugedim/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gaugedim/errors.hpp"

namespace gaugedim {

namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

struct Window {
    std::size_t begin = 0; // index into profile entries (delta descending)
    std::size_t end = 0;
};

Window pick_window(std::size_t n, std::size_t requested) {
    std::size_t w = requested == 0 ? (n + 1) / 2 : std::min(requested, n);
    if (w < 2) w = std::min<std::size_t>(2, n);
    return {n - w, n};
}

struct TrendDecision {
    bool accepted = false;
    std::string reason;
    std::vector<double> values; // clamped to double for reporting
};

// The limit statements are tail statements; the surrogate classifies the
// windowed sequence. Strict monotonicity handles clean profiles; the
// half-envelope comparison handles oscillating ones (liminf/limsup proper).
TrendDecision classify(const std::vector<long double>& v, DimKind kind) {
    TrendDecision d;
    d.values.reserve(v.size());
    for (long double x : v)
        d.values.push_back(x < -1e308L ? -std::numeric_limits<double>::infinity()
                                       : static_cast<double>(x));
    std::size_t n = v.size();
    std::size_t fine_begin = n - n / 2; // fine = later (smaller-delta) half
    long double coarse_max = kNegInf, fine_max = kNegInf;
    long double coarse_min = -kNegInf, fine_min = -kNegInf;
    for (std::size_t i = 0; i < n; ++i) {
        if (i < fine_begin) {
            coarse_max = std::max(coarse_max, v[i]);
            coarse_min = std::min(coarse_min, v[i]);
        } else {
            fine_max = std::max(fine_max, v[i]);
            fine_min = std::min(fine_min, v[i]);
        }
    }
    bool fine_all_zero = std::isinf((double)fine_max) && fine_max < 0;
    if (kind == DimKind::upper) {
        if (fine_all_zero) {
            d.accepted = true;
            d.reason = "product identically zero over fine window (gauge underflow)";
            return d;
        }
        bool last_neg = v.back() < 0;
        bool env = fine_max < coarse_max;
        d.accepted = last_neg && fine_max < 0 && env;
        d.reason = d.accepted ? "window max decreasing and final value below 0"
                 : !last_neg  ? "final value not below 0"
                 : fine_max >= 0 ? "fine-window max not below 0"
                                 : "window max not decreasing";
    } else {
        if (fine_all_zero || (std::isinf((double)fine_min) && fine_min < 0)) {
            d.accepted = true;
            d.reason = "window minima reach zero product";
            return d;
        }
        bool env = fine_min < coarse_min;
        d.accepted = fine_min < 0 && env;
        d.reason = d.accepted ? "window minima decreasing below 0"
                 : fine_min >= 0 ? "fine-window min not below 0"
                                 : "window minima not decreasing";
    }
    return d;
}

} // namespace

DimensionEstimate estimate_log_profile(const LogCountProfile& profile,
                                       const GaugeFamily& family,
                                       DimKind kind,
                                       const EstimatorConfig& cfg,
                                       const std::string& method_tag) {
    const auto& es = profile.entries;
    if (es.size() < 4) throw precondition_error("estimator needs at least 4 scales");
    for (std::size_t i = 1; i < es.size(); ++i)
        if (!(es[i].first.value < es[i - 1].first.value))
            throw precondition_error("profile deltas must be strictly decreasing");
    if (!(cfg.s_min > 0.0 && cfg.s_min < cfg.s_max && cfg.tol > 0.0))
        throw precondition_error("bad estimator config");

    Window w = pick_window(es.size(), cfg.window);

    DimensionEstimate out;
    out.kind = kind;
    out.method = method_tag;
    out.gauge = family.descriptor();
    out.window_delta_max = es[w.begin].first.value;
    out.window_delta_min = es.back().first.value;

    auto evaluate = [&](double s) -> TrendDecision {
        std::vector<long double> v;
        v.reserve(w.end - w.begin);
        for (std::size_t i = w.begin; i < w.end; ++i) {
            long double g = family.log2_eval_l(s, es[i].first.value);
            long double count = es[i].second;
            v.push_back(count + g);
        }
        return classify(v, kind);
    };

    auto record = [&](double s, const TrendDecision& d) {
        out.diagnostics.push_back({s, d.values, d.accepted, d.reason});
    };

    TrendDecision at_min = evaluate(cfg.s_min);
    record(cfg.s_min, at_min);
    if (at_min.accepted) {
        // the infimum lies at or below the range minimum
        out.value = cfg.s_min;
        out.s_lo = cfg.s_min;
        out.s_hi = cfg.s_min;
        return out;
    }
    TrendDecision at_max = evaluate(cfg.s_max);
    record(cfg.s_max, at_max);
    if (!at_max.accepted) {
        std::ostringstream os;
        os << "s-range (" << cfg.s_min << ", " << cfg.s_max
           << ") does not bracket a decision change for kind=" << to_string(kind)
           << "; at s_min=" << cfg.s_min << ": " << at_min.reason
           << "; at s_max=" << cfg.s_max << ": " << at_max.reason
           << " (effectively infinite " << to_string(kind) << " dimension)";
        throw no_bracket_error(os.str());
    }

    double lo = cfg.s_min, hi = cfg.s_max;
    for (int it = 0; it < cfg.max_iter && hi - lo > cfg.tol; ++it) {
        double mid = 0.5 * (lo + hi);
        TrendDecision d = evaluate(mid);
        record(mid, d);
        (d.accepted ? hi : lo) = mid;
    }
    out.s_lo = lo;
    out.s_hi = hi;
    out.value = 0.5 * (lo + hi);
    return out;
}

namespace {

LogCountProfile to_log_profile(const CoveringProfile& profile) {
    LogCountProfile lp;
    for (const auto& e : profile.entries) {
        if (e.n_cover == 0) throw precondition_error("covering profile with zero count");
        lp.entries.emplace_back(e.delta, std::log2(static_cast<double>(e.n_cover)));
    }
    return lp;
}

} // namespace

DimensionEstimate minkowski_dimension(const CoveringProfile& profile,
                                      const GaugeFamily& family,
                                      DimKind kind,
                                      const EstimatorConfig& cfg) {
    return estimate_log_profile(to_log_profile(profile), family, kind, cfg, "bisection");
}

DimensionEstimate loglog_slope_log_profile(const LogCountProfile& profile, std::size_t window) {
    const auto& es = profile.entries;
    if (es.size() < 3) throw precondition_error("loglog slope needs at least 3 scales");
    Window w = pick_window(es.size(), window == 0 ? es.size() : window);
    if (w.end - w.begin < 3) w.begin = es.size() - 3;

    double sx = 0, sy = 0;
    std::size_t n = w.end - w.begin;
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = -std::log2(es[w.begin + i].first.value); // log2(1/delta)
        ys[i] = es[w.begin + i].second;
        sx += xs[i];
        sy += ys[i];
    }
    double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw precondition_error("zero variance in log(1/delta)");

    DimensionEstimate out;
    out.value = sxy / sxx;
    out.s_lo = out.value;
    out.s_hi = out.value;
    out.kind = DimKind::upper;
    out.method = "loglog";
    out.gauge = "theta";
    out.window_delta_max = es[w.begin].first.value;
    out.window_delta_min = es[w.end - 1].first.value;
    TrendRecord rec;
    rec.s = out.value;
    rec.window_values = ys;
    rec.accepted = true;
    rec.reason = "least-squares fit";
    out.diagnostics.push_back(std::move(rec));
    return out;
}

DimensionEstimate loglog_slope(const CoveringProfile& profile, std::size_t window) {
    return loglog_slope_log_profile(to_log_profile(profile), window);
}

CoverSumResult cover_sum(const std::vector<double>& diameters,
                         const GaugeFamily& family,
                         double s) {
    CoverSumResult res;
    if (diameters.empty()) {
        res.empty = true;
        res.log2_sum = Log2Value::zero();
        return res;
    }
    std::vector<double> logs;
    logs.reserve(diameters.size());
    double m = -std::numeric_limits<double>::infinity();
    for (double d : diameters) {
        if (!(d > 0.0)) throw precondition_error("cover diameters must be positive");
        double l = family.log2_eval(s, d);
        logs.push_back(l);
        m = std::max(m, l);
    }
    if (std::isinf(m) && m < 0) {
        res.log2_sum = Log2Value::zero();
        return res;
    }
    // compensated accumulation of 2^(l - m)
    double sum = 0.0, comp = 0.0;
    for (double l : logs) {
        double term = std::exp2(l - m);
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    res.log2_sum = Log2Value::from_log2(m + std::log2(sum));
    return res;
}

PackingSumResult packing_sum(const MetricSpace& space,
                             const std::vector<PointId>& E,
                             const Scale& delta,
                             const GaugeFamily& family,
                             double s,
                             CoverMode mode) {
    PackResult p = packing_number(space, E, delta, mode);
    PackingSumResult res;
    res.n_pack = p.count;
    res.mode = p.mode;
    res.log2_value = std::log2(static_cast<double>(p.count)) + family.log2_eval(s, delta.value);
    return res;
}

} // namespace gaugedim

#ifndef GAUGEDIM_DIMENSION_HPP
#define GAUGEDIM_DIMENSION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gaugedim/covering.hpp"
#include "gaugedim/gauge.hpp"
#include "gaugedim/logspace.hpp"
#include "gaugedim/metric.hpp"

namespace gaugedim {

enum class DimKind { lower, upper };
inline const char* to_string(DimKind k) { return k == DimKind::upper ? "upper" : "lower"; }

/// One candidate-s evaluation: the windowed log2 products and the decision.
struct TrendRecord {
    double s = 0.0;
    std::vector<double> window_values; // log2(count * phi_s(delta)) over the window
    bool accepted = false;
    std::string reason;
};

struct DimensionEstimate {
    double value = 0.0;
    double s_lo = 0.0, s_hi = 0.0; // bracket from bisection
    DimKind kind = DimKind::upper;
    double window_delta_max = 0.0, window_delta_min = 0.0;
    std::string method; // bisection | loglog | gauged-algo
    std::string gauge;
    std::vector<TrendRecord> diagnostics;
};

struct EstimatorConfig {
    double s_min = 1e-3;
    double s_max = 64.0;
    double tol = 1e-3;
    int max_iter = 60;
    std::size_t window = 0; // 0: finest ceil(n/2) of the schedule
};

/// Generic profile input: strictly decreasing deltas with log2 of the
/// associated count (covering counts, 2^N hyperspace bounds, complexity
/// values all flow through here; counts like 2^{2^l} stay finite in log2).
struct LogCountProfile {
    std::vector<std::pair<Scale, double>> entries;
};

/// Bisection over s of the windowed trend of log2(count) + log2(phi_s):
/// kind=upper needs the window values trending down with the last below 0
/// ("limsup -> 0" surrogate), kind=lower needs decreasing window minima
/// below 0 ("liminf -> 0" surrogate). Throws no_bracket_error when the
/// s-range does not bracket a decision change (the s_max side failing
/// signals an effectively infinite dimension).
DimensionEstimate estimate_log_profile(const LogCountProfile& profile,
                                       const GaugeFamily& family,
                                       DimKind kind,
                                       const EstimatorConfig& cfg = {},
                                       const std::string& method_tag = "bisection");

/// Gauged Minkowski dimension estimate from a covering profile
/// (inf{s : lim N(E,delta) phi_s(delta) = 0} via bisection).
DimensionEstimate minkowski_dimension(const CoveringProfile& profile,
                                      const GaugeFamily& family,
                                      DimKind kind,
                                      const EstimatorConfig& cfg = {});

/// Classical box-counting regression: least-squares slope of log2 N against
/// log2(1/delta) over the window; cross-check for the canonical family.
DimensionEstimate loglog_slope(const CoveringProfile& profile, std::size_t window = 0);
DimensionEstimate loglog_slope_log_profile(const LogCountProfile& profile, std::size_t window = 0);

/// Sum phi_s(diam U) over an explicit cover, in log2 space with compensated
/// summation. The empty cover is a valid cover of the empty set; flagged.
struct CoverSumResult {
    Log2Value log2_sum;
    bool empty = false;
};
CoverSumResult cover_sum(const std::vector<double>& diameters,
                         const GaugeFamily& family,
                         double s);

/// Equal-diameter packing value N_p(E,delta) * phi_s(delta) in log2 space;
/// a lower bound for the delta-packing pre-measure.
struct PackingSumResult {
    double log2_value = 0.0;
    std::uint64_t n_pack = 0;
    CoverMode mode = CoverMode::exact;
};
PackingSumResult packing_sum(const MetricSpace& space,
                             const std::vector<PointId>& E,
                             const Scale& delta,
                             const GaugeFamily& family,
                             double s,
                             CoverMode mode = CoverMode::exact);

} // namespace gaugedim

#endif

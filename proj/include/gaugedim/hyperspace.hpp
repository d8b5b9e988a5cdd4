#ifndef GAUGEDIM_HYPERSPACE_HPP
#define GAUGEDIM_HYPERSPACE_HPP

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "gaugedim/covering.hpp"
#include "gaugedim/dimension.hpp"
#include "gaugedim/metric.hpp"

namespace gaugedim {

/// A finite point set with a resolution tag: both a delta-approximation of a
/// compact set and a single point of the hyperspace K(X).
struct CompactApprox {
    std::shared_ptr<const MetricSpace> space;
    std::vector<PointId> points;
    Scale resolution;

    /// nonempty, all points in range, duplicate-free (exact comparison).
    void validate() const;
};

/// Exact Hausdorff metric between nonempty finite sets in one space.
double hausdorff_distance(const MetricSpace& space,
                          const std::vector<PointId>& E,
                          const std::vector<PointId>& F);

/// rho_H(E,F) < delta decided through the space's (exact where supported)
/// point comparisons: every point of each set has a strict-delta neighbor in
/// the other.
bool hausdorff_lt(const MetricSpace& space,
                  const std::vector<PointId>& E,
                  const std::vector<PointId>& F,
                  const Scale& delta);

/// All 2^|F|-1 nonempty subsets of a finite delta-net F of E; a delta-net of
/// K(E) in the Hausdorff metric. include_empty must be false (the empty set
/// is not a hyperspace point).
std::vector<std::vector<PointId>> hyperspace_net(const MetricSpace& space,
                                                 const std::vector<PointId>& F,
                                                 bool include_empty = false,
                                                 std::size_t cap = 20);

enum class HyperMode { bounds, greedy, exact };

struct HyperCoverResult {
    std::uint64_t lower = 0;            // 2^{M(2 delta)} - 1
    std::uint64_t upper = 0;            // 2^{N(E, delta)}, E-centered N
    std::optional<std::uint64_t> exact; // min subset-centered rho_H ball cover
    std::uint64_t packing_m = 0;        // M(2 delta)
    std::uint64_t covering_n = 0;       // N(E, delta) with centers in E
};

/// Covering-number bounds for the hyperspace of a finite set. The upper
/// bound uses the E-centered covering number so that the witness cover's
/// subsets are available as hyperspace ball centers; exact mode solves the
/// set cover over all nonempty subsets of E (cap on 2^|E|-1).
HyperCoverResult hyperspace_covering_number(const MetricSpace& space,
                                            const std::vector<PointId>& E,
                                            const Scale& delta,
                                            HyperMode mode = HyperMode::exact,
                                            std::size_t subset_cap = 4095,
                                            std::size_t node_cap = 1u << 20);

using NetGenerator = std::function<CompactApprox(const Scale&)>;

struct HyperVerifyConfig {
    EstimatorConfig estimator;
    double tolerance = 0.1;
};

/// Desk-scale check of the hyperspace Minkowski dimension theorem:
/// dim^{jump(phi)}(K(E)) against dim^{phi}(E), with the hyperspace profile
/// sandwiched between the M(2 delta)- and N(delta)-based exponents.
struct HyperVerifyReport {
    DimensionEstimate base;        // phi-gauged dimension of E
    DimensionEstimate hyper_upper; // jump(phi)-gauged, N-based exponents
    DimensionEstimate hyper_lower; // jump(phi)-gauged, M-based exponents
    double diff_upper = 0.0;
    double diff_lower = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    LogCountProfile base_profile;
    LogCountProfile hyper_upper_profile;
    LogCountProfile hyper_lower_profile;
};

HyperVerifyReport verify_hyperspace_minkowski(const NetGenerator& nets,
                                              const GaugeFamily& family,
                                              const std::vector<Scale>& schedule,
                                              DimKind kind,
                                              const HyperVerifyConfig& cfg = {});

/// Spacing-delta grid nets of [0,1] (exact for dyadic schedules).
NetGenerator unit_interval_grid_nets();
/// Level-l interval midpoints of E0 for delta = 7^-l schedules.
NetGenerator e0_midpoint_nets(int max_depth);
/// Constant singleton net (K of a one-point space).
NetGenerator singleton_nets();

} // namespace gaugedim

#endif

#ifndef GAUGEDIM_COVERING_HPP
#define GAUGEDIM_COVERING_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gaugedim/metric.hpp"

namespace gaugedim {

enum class CoverMode { greedy, exact };
enum class CenterPolicy { anywhere, from_net };

inline const char* to_string(CoverMode m) { return m == CoverMode::exact ? "exact" : "greedy"; }

struct CoverOptions {
    CoverMode mode = CoverMode::exact;
    CenterPolicy centers = CenterPolicy::anywhere;
    std::vector<PointId> net;        // candidate centers for from_net
    std::size_t candidate_cap = 4096;
    std::size_t node_cap = 1u << 20;
    bool midpoint_augment = true;    // anywhere mode: E plus pairwise midpoints
};

struct CoverResult {
    std::uint64_t count = 0;
    CoverMode mode = CoverMode::exact;
    /// Center universe actually used. The continuum optimum is not finitely
    /// computable in general; on a line the midpoint-restricted optimum
    /// equals it, elsewhere results are restricted-centers values.
    std::string centers_label;
};

struct PackResult {
    std::uint64_t count = 0;
    CoverMode mode = CoverMode::exact;
};

/// Minimum (exact) or upper bound (greedy) number of open delta-balls
/// covering E. `anywhere` uses candidate centers = E plus pairwise midpoints
/// where the space supports them; on 1-D spaces the exact sweep realizes the
/// continuum optimum. Ball membership is strict: rho < delta.
CoverResult covering_number(const MetricSpace& space,
                            const std::vector<PointId>& E,
                            const Scale& delta,
                            const CoverOptions& opt = {});

/// Maximum number of points of E with pairwise distance >= delta (disjoint
/// open balls of diameter delta centered in E). Greedy gives a lower bound.
PackResult packing_number(const MetricSpace& space,
                          const std::vector<PointId>& E,
                          const Scale& delta,
                          CoverMode mode = CoverMode::exact,
                          std::size_t node_cap = 1u << 20);

struct CoveringEntry {
    Scale delta;
    std::uint64_t n_cover = 0;
    std::optional<std::uint64_t> n_cover_dense;
    std::optional<std::uint64_t> n_pack;
    CoverMode mode = CoverMode::exact;
};

/// Scale-indexed record delta_i -> (N, N-hat, N_p); the input to every
/// dimension estimator. Entries are kept in strictly decreasing delta order.
struct CoveringProfile {
    std::vector<CoveringEntry> entries;

    /// Checks the profile invariants; throws precondition_error on violation.
    ///  - delta strictly decreasing, n_cover nondecreasing as delta decreases
    ///  - n_cover(2 delta) <= n_pack(delta) at matching scales
    void validate() const;
};

struct ProfileOptions {
    CoverOptions cover;
    bool with_packing = false;
    CoverMode packing_mode = CoverMode::exact;
    /// Optional per-scale dense net generator; when set, n_cover_dense is
    /// computed with centers restricted to the generated net.
    std::function<std::vector<PointId>(MetricSpace&, const Scale&)> dense_net;
};

/// Materializes the delta -> N map over a schedule. Any per-scale failure
/// aborts with the offending delta in the message.
CoveringProfile covering_profile(const MetricSpace& space,
                                 const std::vector<PointId>& E,
                                 const std::vector<Scale>& schedule,
                                 const ProfileOptions& opt = {});

namespace setcover {

/// Column-major cover masks: one bitset of covered elements per candidate.
struct Instance {
    std::size_t n_elements = 0;
    std::vector<std::vector<std::uint64_t>> masks;
};

std::uint64_t greedy_cover(const Instance& inst);
/// Branch and bound with the greedy value as incumbent; dedup, dominance
/// elimination and unit propagation up front. Throws capacity_error when the
/// node budget is exhausted, precondition_error when no cover exists.
std::uint64_t exact_cover(const Instance& inst, std::size_t node_cap);

} // namespace setcover

} // namespace gaugedim

#endif

#include "gaugedim/hyperspace.hpp"

#include <algorithm>
#include <cmath>

#include "gaugedim/constructions.hpp"
#include "gaugedim/errors.hpp"

namespace gaugedim {

void CompactApprox::validate() const {
    if (!space) throw precondition_error("compact approximation without a space");
    if (points.empty()) throw precondition_error("compact approximation must be nonempty");
    for (PointId p : points)
        if (p >= space->size()) throw precondition_error("point id out of range");
    if (space->is_line()) {
        auto sorted = points;
        std::sort(sorted.begin(), sorted.end(), [&](PointId a, PointId b) {
            return space->coordinate_less(a, b);
        });
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (space->distance(sorted[i - 1], sorted[i]) == 0.0)
                throw precondition_error("duplicate points in compact approximation");
    } else if (points.size() <= 2048) {
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (space->distance(points[i], points[j]) == 0.0)
                    throw precondition_error("duplicate points in compact approximation");
    }
}

double hausdorff_distance(const MetricSpace& space,
                          const std::vector<PointId>& E,
                          const std::vector<PointId>& F) {
    if (E.empty() || F.empty()) throw precondition_error("Hausdorff distance of empty set");
    double worst = 0.0;
    for (PointId a : E) {
        double best = std::numeric_limits<double>::infinity();
        for (PointId b : F) best = std::min(best, space.distance(a, b));
        worst = std::max(worst, best);
    }
    for (PointId b : F) {
        double best = std::numeric_limits<double>::infinity();
        for (PointId a : E) best = std::min(best, space.distance(a, b));
        worst = std::max(worst, best);
    }
    return worst;
}

bool hausdorff_lt(const MetricSpace& space,
                  const std::vector<PointId>& E,
                  const std::vector<PointId>& F,
                  const Scale& delta) {
    if (E.empty() || F.empty()) throw precondition_error("Hausdorff distance of empty set");
    for (PointId a : E) {
        bool close = false;
        for (PointId b : F)
            if (space.in_open_ball(b, a, delta)) {
                close = true;
                break;
            }
        if (!close) return false;
    }
    for (PointId b : F) {
        bool close = false;
        for (PointId a : E)
            if (space.in_open_ball(a, b, delta)) {
                close = true;
                break;
            }
        if (!close) return false;
    }
    return true;
}

std::vector<std::vector<PointId>> hyperspace_net(const MetricSpace& space,
                                                 const std::vector<PointId>& F,
                                                 bool include_empty,
                                                 std::size_t cap) {
    if (include_empty)
        throw precondition_error("the empty set is not a point of the hyperspace");
    if (F.empty()) throw precondition_error("hyperspace net of empty net");
    if (F.size() > cap) throw capacity_error("hyperspace net size above cap");
    for (PointId p : F)
        if (p >= space.size()) throw precondition_error("net point out of range");
    std::size_t n = F.size();
    std::vector<std::vector<PointId>> out;
    out.reserve((std::size_t(1) << n) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<PointId> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) sub.push_back(F[i]);
        out.push_back(std::move(sub));
    }
    return out;
}

HyperCoverResult hyperspace_covering_number(const MetricSpace& space,
                                            const std::vector<PointId>& E,
                                            const Scale& delta,
                                            HyperMode mode,
                                            std::size_t subset_cap,
                                            std::size_t node_cap) {
    if (E.empty()) throw precondition_error("hyperspace covering of empty set");
    const std::size_t n = E.size();

    HyperCoverResult res;
    res.packing_m = packing_number(space, E, delta.doubled()).count;
    CoverOptions ecenters;
    ecenters.centers = CenterPolicy::from_net;
    ecenters.net = E;
    ecenters.node_cap = node_cap;
    res.covering_n = covering_number(space, E, delta, ecenters).count;
    if (res.packing_m > 62 || res.covering_n > 62)
        throw capacity_error("hyperspace bounds exceed 64-bit counts; use log-space profiles");
    res.lower = (std::uint64_t(1) << res.packing_m) - 1;
    res.upper = std::uint64_t(1) << res.covering_n;

    if (mode == HyperMode::bounds) return res;
    if (n > 20 || ((std::size_t(1) << n) - 1) > subset_cap)
        throw capacity_error("hyperspace exact cover above subset cap");

    // close[i]: points within open delta of E[i] (includes i)
    std::vector<std::uint32_t> close(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i == j || space.in_open_ball(E[i], E[j], delta)) close[i] |= 1u << j;
    // union of close[] over the members of each subset mask
    const std::size_t nsub = (std::size_t(1) << n) - 1;
    std::vector<std::uint32_t> uclose(nsub + 1, 0);
    for (std::size_t m = 1; m <= nsub; ++m) {
        std::size_t low = m & (~m + 1);
        uclose[m] = uclose[m & (m - 1)] | close[__builtin_ctzll(low)];
    }
    // ball at subset t covers subset l iff rho_H(l, t) < delta
    auto covers = [&](std::uint32_t t, std::uint32_t l) {
        return (l & ~uclose[t]) == 0 && (t & ~uclose[l]) == 0;
    };
    setcover::Instance inst;
    inst.n_elements = nsub;
    std::size_t words = (nsub + 63) / 64;
    inst.masks.reserve(nsub);
    for (std::size_t t = 1; t <= nsub; ++t) {
        std::vector<std::uint64_t> mask(words, 0);
        for (std::size_t l = 1; l <= nsub; ++l)
            if (covers(static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(l)))
                mask[(l - 1) / 64] |= 1ull << ((l - 1) % 64);
        inst.masks.push_back(std::move(mask));
    }
    std::uint64_t count = mode == HyperMode::exact ? setcover::exact_cover(inst, node_cap)
                                                   : setcover::greedy_cover(inst);
    if (mode == HyperMode::exact) {
        res.exact = count;
        if (!(res.lower <= *res.exact && *res.exact <= res.upper))
            throw no_bracket_error("hyperspace sandwich violated (internal error)");
    } else {
        res.exact = count; // greedy upper estimate, not sandwich-checked
    }
    return res;
}

HyperVerifyReport verify_hyperspace_minkowski(const NetGenerator& nets,
                                              const GaugeFamily& family,
                                              const std::vector<Scale>& schedule,
                                              DimKind kind,
                                              const HyperVerifyConfig& cfg) {
    if (schedule.size() < 4) throw precondition_error("hyperspace verification needs >= 4 scales");

    HyperVerifyReport rep;
    rep.tolerance = cfg.tolerance;

    for (const Scale& delta : schedule) {
        CompactApprox net = nets(delta);
        net.validate();
        CoverOptions ecenters;
        ecenters.centers = CenterPolicy::from_net;
        ecenters.net = net.points;
        std::uint64_t n = covering_number(*net.space, net.points, delta, ecenters).count;
        std::uint64_t m = packing_number(*net.space, net.points, delta.doubled()).count;
        rep.base_profile.entries.emplace_back(delta, std::log2(static_cast<double>(n)));
        rep.hyper_upper_profile.entries.emplace_back(delta, static_cast<double>(n));
        // log2(2^m - 1) = m + log2(1 - 2^-m)
        double lower_log = static_cast<double>(m) +
                           (m < 50 ? std::log2(1.0 - std::exp2(-static_cast<double>(m))) : 0.0);
        rep.hyper_lower_profile.entries.emplace_back(delta, lower_log);
    }

    GaugeFamily jumped = GaugeFamily::jump_of(family);
    rep.base = estimate_log_profile(rep.base_profile, family, kind, cfg.estimator, "bisection");
    rep.hyper_upper =
        estimate_log_profile(rep.hyper_upper_profile, jumped, kind, cfg.estimator, "bisection");
    rep.hyper_lower =
        estimate_log_profile(rep.hyper_lower_profile, jumped, kind, cfg.estimator, "bisection");
    rep.diff_upper = rep.hyper_upper.value - rep.base.value;
    rep.diff_lower = rep.hyper_lower.value - rep.base.value;
    rep.pass = std::max(std::fabs(rep.diff_upper), std::fabs(rep.diff_lower)) <= cfg.tolerance;
    return rep;
}

NetGenerator unit_interval_grid_nets() {
    return [](const Scale& delta) {
        if (!(delta.value > 0.0 && delta.value <= 1.0))
            throw precondition_error("grid net scale out of range");
        auto steps = static_cast<std::size_t>(std::ceil(1.0 / delta.value));
        if (steps > (1u << 24)) throw capacity_error("grid net too fine");
        auto space = std::make_shared<EuclideanSpace>(1);
        CompactApprox net;
        net.points.reserve(steps + 1);
        for (std::size_t j = 0; j <= steps; ++j)
            net.points.push_back(space->add_point(std::min(1.0, j * delta.value)));
        net.space = space;
        net.resolution = delta;
        return net;
    };
}

NetGenerator e0_midpoint_nets(int max_depth) {
    return [max_depth](const Scale& delta) {
        // depth from delta = 7^-l
        int l = static_cast<int>(std::lround(-std::log(delta.value) / std::log(7.0)));
        if (l < 0 || l > max_depth) throw precondition_error("E0 net depth out of range");
        IntervalSet set = self_similar_e0(l);
        auto space = std::make_shared<RationalLineSpace>();
        CompactApprox net;
        for (std::size_t i = 0; i < set.size(); ++i) {
            Rational mid = (set.interval(i).lo() + set.interval(i).hi()).half();
            net.points.push_back(space->add_point(mid));
        }
        net.space = space;
        net.resolution = delta;
        return net;
    };
}

NetGenerator singleton_nets() {
    return [](const Scale& delta) {
        auto space = std::make_shared<EuclideanSpace>(1);
        CompactApprox net;
        net.points.push_back(space->add_point(0.0));
        net.space = space;
        net.resolution = delta;
        return net;
    };
}

} // namespace gaugedim

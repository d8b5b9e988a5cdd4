#include "gaugedim/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "gaugedim/errors.hpp"

namespace gaugedim {

namespace setcover {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& b) {
    std::size_t n = 0;
    for (auto w : b) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
}

std::size_t and_popcount(const Bits& a, const Bits& b) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        n += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
    return n;
}

bool any(const Bits& b) {
    for (auto w : b)
        if (w) return true;
    return false;
}

bool subset_of(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

void and_not_inplace(Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] &= ~b[i];
}

struct Prepared {
    std::size_t n = 0;
    std::size_t words = 0;
    std::vector<Bits> masks; // deduped, dominance-filtered, coverage-desc order
};

Prepared prepare(const Instance& inst) {
    Prepared p;
    p.n = inst.n_elements;
    p.words = (inst.n_elements + 63) / 64;
    std::vector<Bits> ms;
    ms.reserve(inst.masks.size());
    for (const auto& m : inst.masks) {
        if (m.size() != p.words) throw precondition_error("set-cover mask width mismatch");
        if (any(m)) ms.push_back(m);
    }
    std::sort(ms.begin(), ms.end(), [](const Bits& a, const Bits& b) {
        std::size_t pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa > pb : a > b;
    });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    // dominance: drop masks contained in an earlier (larger) one
    for (const auto& m : ms) {
        bool dominated = false;
        for (const auto& big : p.masks) {
            if (subset_of(m, big)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) p.masks.push_back(m);
    }
    return p;
}

Bits full_mask(std::size_t n, std::size_t words) {
    Bits b(words, ~0ull);
    if (n % 64) b[words - 1] = (~0ull) >> (64 - n % 64);
    if (n == 0) b.assign(words, 0);
    return b;
}

struct Solver {
    const Prepared& p;
    std::size_t best;
    std::size_t nodes = 0;
    std::size_t node_cap;

    Solver(const Prepared& prep, std::size_t incumbent, std::size_t cap)
        : p(prep), best(incumbent), node_cap(cap) {}

    void run(Bits uncovered, std::size_t chosen) {
        if (!any(uncovered)) {
            if (chosen < best) best = chosen;
            return;
        }
        if (++nodes > node_cap) throw capacity_error("set-cover node budget exhausted");
        // bound: every candidate covers at most max_cov uncovered elements
        std::size_t max_cov = 0;
        for (const auto& m : p.masks) max_cov = std::max(max_cov, and_popcount(m, uncovered));
        if (max_cov == 0) throw precondition_error("set-cover instance has uncoverable elements");
        std::size_t need = (popcount(uncovered) + max_cov - 1) / max_cov;
        if (chosen + need >= best) return;

        // least-covered uncovered element; unit propagation when forced
        std::size_t pick = p.n;
        std::size_t pick_deg = std::numeric_limits<std::size_t>::max();
        for (std::size_t e = 0; e < p.n; ++e) {
            if (!(uncovered[e / 64] >> (e % 64) & 1)) continue;
            std::size_t deg = 0;
            for (const auto& m : p.masks)
                if (m[e / 64] >> (e % 64) & 1) ++deg;
            if (deg < pick_deg) {
                pick_deg = deg;
                pick = e;
                if (deg <= 1) break;
            }
        }
        std::vector<const Bits*> branches;
        for (const auto& m : p.masks)
            if (m[pick / 64] >> (pick % 64) & 1) branches.push_back(&m);
        std::sort(branches.begin(), branches.end(), [&](const Bits* a, const Bits* b) {
            return and_popcount(*a, uncovered) > and_popcount(*b, uncovered);
        });
        for (const Bits* m : branches) {
            Bits next = uncovered;
            and_not_inplace(next, *m);
            run(std::move(next), chosen + 1);
        }
    }
};

} // namespace

std::uint64_t greedy_cover(const Instance& inst) {
    Prepared p = prepare(inst);
    Bits uncovered = full_mask(p.n, p.words);
    std::uint64_t used = 0;
    while (any(uncovered)) {
        std::size_t bi = p.masks.size(), bc = 0;
        for (std::size_t i = 0; i < p.masks.size(); ++i) {
            std::size_t c = and_popcount(p.masks[i], uncovered);
            if (c > bc) {
                bc = c;
                bi = i;
            }
        }
        if (bc == 0) throw precondition_error("set-cover instance has uncoverable elements");
        and_not_inplace(uncovered, p.masks[bi]);
        ++used;
    }
    return used;
}

std::uint64_t exact_cover(const Instance& inst, std::size_t node_cap) {
    Prepared p = prepare(inst);
    std::uint64_t incumbent = greedy_cover(inst);
    Solver s(p, incumbent, node_cap);
    s.run(full_mask(p.n, p.words), 0);
    return s.best;
}

} // namespace setcover

namespace {

// ------------------------------------------------------------- 1-D sweeps

std::vector<PointId> sorted_by_coordinate(const MetricSpace& space, std::vector<PointId> ids) {
    std::sort(ids.begin(), ids.end(), [&](PointId a, PointId b) {
        if (space.coordinate_less(a, b)) return true;
        if (space.coordinate_less(b, a)) return false;
        return a < b;
    });
    return ids;
}

// min open windows of length 2*delta covering the sorted points (continuum
// center optimum, equal to the E+midpoint restricted optimum on a line)
std::uint64_t line_cover_continuum(const MetricSpace& space,
                                   const std::vector<PointId>& sorted,
                                   const Scale& delta) {
    Scale span = delta.doubled();
    std::uint64_t n = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        ++n;
        std::size_t j = i;
        while (j < sorted.size() && space.gap_vs(sorted[i], sorted[j], span) < 0) ++j;
        i = j;
    }
    return n;
}

// restricted candidate centers: greedy rightmost-reaching center is optimal
std::uint64_t line_cover_restricted(const MetricSpace& space,
                                    const std::vector<PointId>& sorted,
                                    const std::vector<PointId>& sorted_candidates,
                                    const Scale& delta) {
    std::uint64_t n = 0;
    std::size_t i = 0;
    std::size_t c_lo = 0;
    while (i < sorted.size()) {
        PointId p = sorted[i];
        double x = space.coordinate(p);
        // candidates with coordinate in (x - delta, x + delta); boundary
        // decided by the space's (exact where supported) comparison
        while (c_lo < sorted_candidates.size() &&
               space.coordinate(sorted_candidates[c_lo]) < x &&
               !space.in_open_ball(sorted_candidates[c_lo], p, delta))
            ++c_lo;
        std::size_t c_hi = c_lo;
        std::size_t best = sorted_candidates.size();
        while (c_hi < sorted_candidates.size() &&
               (space.coordinate(sorted_candidates[c_hi]) <= x ||
                space.in_open_ball(sorted_candidates[c_hi], p, delta))) {
            if (space.in_open_ball(sorted_candidates[c_hi], p, delta)) best = c_hi;
            ++c_hi;
        }
        if (best == sorted_candidates.size())
            throw precondition_error("candidate centers cannot cover the set at this scale");
        ++n;
        PointId center = sorted_candidates[best];
        while (i < sorted.size() && space.in_open_ball(center, sorted[i], delta)) ++i;
    }
    return n;
}

std::uint64_t line_pack(const MetricSpace& space,
                        const std::vector<PointId>& sorted,
                        const Scale& delta) {
    std::uint64_t n = 0;
    bool have = false;
    PointId last = 0;
    for (PointId p : sorted) {
        if (!have || space.separated(last, p, delta)) {
            last = p;
            have = true;
            ++n;
        }
    }
    return n;
}

// ------------------------------------------------- general-space fallback

setcover::Instance build_cover_instance(const MetricSpace& space,
                                        const std::vector<PointId>& E,
                                        const std::vector<PointId>& candidates,
                                        const Scale& delta) {
    setcover::Instance inst;
    inst.n_elements = E.size();
    std::size_t words = (E.size() + 63) / 64;
    inst.masks.reserve(candidates.size());
    for (PointId c : candidates) {
        std::vector<std::uint64_t> m(words, 0);
        for (std::size_t e = 0; e < E.size(); ++e)
            if (space.in_open_ball(c, E[e], delta)) m[e / 64] |= 1ull << (e % 64);
        inst.masks.push_back(std::move(m));
    }
    return inst;
}

std::uint64_t exact_max_separated(const MetricSpace& space,
                                  const std::vector<PointId>& E,
                                  const Scale& delta,
                                  std::size_t node_cap) {
    const std::size_t n = E.size();
    if (n > 64) throw capacity_error("exact packing limited to 64 points off the line");
    // conflict[i]: points too close to i (distance < delta)
    std::vector<std::uint64_t> conflict(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!space.separated(E[i], E[j], delta)) {
                conflict[i] |= 1ull << j;
                conflict[j] |= 1ull << i;
            }
    std::uint64_t best = 0;
    std::size_t nodes = 0;
    std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    // max independent set, branch on remaining vertex of max degree
    auto rec = [&](auto&& self, std::uint64_t allowed, std::uint64_t chosen_count) -> void {
        if (++nodes > node_cap) throw capacity_error("packing node budget exhausted");
        if (chosen_count + static_cast<std::uint64_t>(__builtin_popcountll(allowed)) <= best) return;
        if (!allowed) {
            best = std::max(best, chosen_count);
            return;
        }
        int v = __builtin_ctzll(allowed);
        // include v
        self(self, allowed & ~(1ull << v) & ~conflict[v], chosen_count + 1);
        // exclude v
        self(self, allowed & ~(1ull << v), chosen_count);
    };
    rec(rec, all, 0);
    return best;
}

std::uint64_t greedy_separated(const MetricSpace& space,
                               const std::vector<PointId>& E,
                               const Scale& delta) {
    std::vector<PointId> chosen;
    for (PointId p : E) {
        bool ok = true;
        for (PointId q : chosen)
            if (!space.separated(p, q, delta)) {
                ok = false;
                break;
            }
        if (ok) chosen.push_back(p);
    }
    return chosen.size();
}

} // namespace

CoverResult covering_number(const MetricSpace& space,
                            const std::vector<PointId>& E,
                            const Scale& delta,
                            const CoverOptions& opt) {
    if (E.empty()) throw precondition_error("covering_number of empty set");

    CoverResult res;
    res.mode = opt.mode;

    if (space.is_line()) {
        auto sorted = sorted_by_coordinate(space, E);
        if (opt.centers == CenterPolicy::anywhere) {
            res.count = line_cover_continuum(space, sorted, delta);
            res.centers_label = "restricted-centers exact (1-d sweep, continuum-equivalent)";
        } else {
            auto cands = sorted_by_coordinate(space, opt.net);
            if (cands.empty()) throw precondition_error("from_net covering with empty net");
            res.count = line_cover_restricted(space, sorted, cands, delta);
            res.centers_label = "net-centers exact (1-d sweep)";
        }
        // the sweep is already optimal; greedy mode reports the same value
        return res;
    }

    // candidate set
    std::vector<PointId> candidates;
    std::unique_ptr<MetricSpace> owned;
    const MetricSpace* sp = &space;
    if (opt.centers == CenterPolicy::from_net) {
        if (opt.net.empty()) throw precondition_error("from_net covering with empty net");
        candidates = opt.net;
        res.centers_label = "net-centers";
    } else {
        candidates = E;
        std::size_t with_mid = E.size() + E.size() * (E.size() - 1) / 2;
        if (opt.midpoint_augment && space.supports_midpoints() && with_mid <= opt.candidate_cap) {
            owned = space.clone();
            for (std::size_t i = 0; i < E.size(); ++i)
                for (std::size_t j = i + 1; j < E.size(); ++j)
                    candidates.push_back(owned->add_midpoint(E[i], E[j]));
            sp = owned.get();
            res.centers_label = "restricted-centers (E + midpoints)";
        } else {
            res.centers_label = "restricted-centers (E)";
        }
    }
    if (opt.mode == CoverMode::exact && candidates.size() > opt.candidate_cap)
        throw capacity_error("exact covering: candidate count above cap");

    auto inst = build_cover_instance(*sp, E, candidates, delta);
    res.count = opt.mode == CoverMode::exact ? setcover::exact_cover(inst, opt.node_cap)
                                             : setcover::greedy_cover(inst);
    return res;
}

PackResult packing_number(const MetricSpace& space,
                          const std::vector<PointId>& E,
                          const Scale& delta,
                          CoverMode mode,
                          std::size_t node_cap) {
    if (E.empty()) throw precondition_error("packing_number of empty set");
    PackResult res;
    res.mode = mode;
    if (space.is_line()) {
        auto sorted = sorted_by_coordinate(space, E);
        res.count = line_pack(space, sorted, delta);
        return res;
    }
    res.count = mode == CoverMode::exact ? exact_max_separated(space, E, delta, node_cap)
                                         : greedy_separated(space, E, delta);
    return res;
}

void CoveringProfile::validate() const {
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (!(entries[i].delta.value < entries[i - 1].delta.value))
            throw precondition_error("profile deltas must be strictly decreasing");
        if (entries[i].n_cover < entries[i - 1].n_cover)
            throw precondition_error("covering counts must be nondecreasing as delta decreases");
    }
    for (const auto& e : entries) {
        if (!e.n_pack) continue;
        // find the entry at 2*delta, if the schedule contains it
        for (const auto& f : entries) {
            bool match = false;
            if (e.delta.exact && f.delta.exact)
                match = (*e.delta.exact * Rational(2)) == *f.delta.exact;
            else
                match = std::fabs(f.delta.value - 2.0 * e.delta.value) <=
                        1e-12 * f.delta.value;
            if (match && f.n_cover > *e.n_pack)
                throw precondition_error("profile violates N(E,2d) <= N_p(E,d)");
        }
    }
}

CoveringProfile covering_profile(const MetricSpace& space,
                                 const std::vector<PointId>& E,
                                 const std::vector<Scale>& schedule,
                                 const ProfileOptions& opt) {
    if (schedule.empty()) throw precondition_error("empty schedule");
    CoveringProfile prof;
    for (const auto& delta : schedule) {
        try {
            CoveringEntry entry;
            entry.delta = delta;
            entry.mode = opt.cover.mode;
            entry.n_cover = covering_number(space, E, delta, opt.cover).count;
            if (opt.dense_net) {
                auto clone = space.clone();
                CoverOptions dense = opt.cover;
                dense.centers = CenterPolicy::from_net;
                dense.net = opt.dense_net(*clone, delta);
                entry.n_cover_dense = covering_number(*clone, E, delta, dense).count;
            }
            if (opt.with_packing)
                entry.n_pack = packing_number(space, E, delta, opt.packing_mode,
                                              opt.cover.node_cap).count;
            prof.entries.push_back(std::move(entry));
        } catch (const capacity_error& e) {
            throw capacity_error("at delta=" + std::to_string(delta.value) + ": " + e.what());
        } catch (const precondition_error& e) {
            throw precondition_error("at delta=" + std::to_string(delta.value) + ": " + e.what());
        }
    }
    prof.validate();
    return prof;
}

} // namespace gaugedim

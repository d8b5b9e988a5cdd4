#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gaugedim/constructions.hpp"
#include "gaugedim/covering.hpp"
#include "gaugedim/errors.hpp"
#include "oracles.hpp"

using namespace gaugedim;

namespace {

// oracle wrapper: exact cover over an explicit candidate list
std::uint64_t oracle_cover(const MetricSpace& sp, const std::vector<PointId>& E,
                           const std::vector<PointId>& candidates, const Scale& delta) {
    std::vector<std::uint64_t> covers;
    for (PointId c : candidates) {
        std::uint64_t m = 0;
        for (std::size_t e = 0; e < E.size(); ++e)
            if (sp.in_open_ball(c, E[e], delta)) m |= 1ull << e;
        covers.push_back(m);
    }
    return oracles::min_cover(covers, static_cast<int>(E.size()));
}

std::uint64_t oracle_pack(const MetricSpace& sp, const std::vector<PointId>& E,
                          const Scale& delta) {
    std::vector<std::vector<bool>> sep(E.size(), std::vector<bool>(E.size(), true));
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = 0; j < E.size(); ++j)
            if (i != j) sep[i][j] = sp.separated(E[i], E[j], delta);
    return oracles::max_separated(sep);
}

} // namespace

TEST_CASE("covering pair examples") {
    EuclideanSpace line(1);
    std::vector<PointId> E{line.add_point(0.0), line.add_point(1.0)};
    CHECK(covering_number(line, E, Scale::of(0.6)).count == 1); // center 0.5 covers both
    CHECK(covering_number(line, E, Scale::of(0.4)).count == 2);
    CHECK_THROWS_AS(covering_number(line, {}, Scale::of(0.5)), precondition_error);
}

TEST_CASE("E0 depth-3 endpoints at the exact scale") {
    IntervalSet e0 = self_similar_e0(3);
    auto pts = sample_points(e0, 1, SampleMode::endpoints);
    RationalLineSpace space = make_line_space(pts);
    std::vector<PointId> E(space.size());
    for (std::size_t i = 0; i < E.size(); ++i) E[i] = static_cast<PointId>(i);

    // exact rational boundary: N = 2^3 at delta = 7^-3
    CHECK(covering_number(space, E, Scale::power_of(7, 3)).count == 8);
    // robust window just above the boundary gives the same count
    CHECK(covering_number(space, E, Scale::of(0.0032)).count == 8);
}

TEST_CASE("cover sweep agrees with branch-and-bound off the line") {
    // same 16 endpoints embedded in the plane forces the set-cover path
    IntervalSet e0 = self_similar_e0(3);
    auto pts = sample_points(e0, 1, SampleMode::endpoints);
    EuclideanSpace plane(2);
    std::vector<PointId> E;
    for (const auto& r : pts) E.push_back(plane.add_point({r.to_double(), 0.0}));
    RationalLineSpace lspace = make_line_space(pts);
    std::vector<PointId> L(lspace.size());
    for (std::size_t i = 0; i < L.size(); ++i) L[i] = static_cast<PointId>(i);

    for (double d : {0.0032, 0.01, 0.02, 0.09}) {
        Scale delta = Scale::of(d);
        CHECK(covering_number(plane, E, delta).count ==
              covering_number(lspace, L, delta).count);
    }
}

TEST_CASE("packing examples") {
    EuclideanSpace line(1);
    std::vector<PointId> E{line.add_point(0.0), line.add_point(1.0)};
    CHECK(packing_number(line, E, Scale::of(0.5)).count == 2);

    EuclideanSpace line2(1);
    std::vector<PointId> F{line2.add_point(0.0), line2.add_point(0.4), line2.add_point(1.0)};
    CHECK(packing_number(line2, F, Scale::of(0.5)).count == oracle_pack(line2, F, Scale::of(0.5)));
    CHECK(packing_number(line2, F, Scale::of(0.5)).count == 2);
    CHECK(packing_number(line2, {F[0]}, Scale::of(0.5)).count == 1);
    CHECK_THROWS_AS(packing_number(line2, {}, Scale::of(0.5)), precondition_error);
}

TEST_CASE("separation boundary uses rho >= delta") {
    EuclideanSpace line(1);
    std::vector<PointId> E{line.add_point(0.0), line.add_point(0.5)};
    // distance exactly 0.5: still packable at delta = 0.5
    CHECK(packing_number(line, E, Scale::of(0.5)).count == 2);
    // but not coverable by one open 0.25-ball
    CHECK(covering_number(line, E, Scale::of(0.25)).count == 2);
}

TEST_CASE("covering and packing match the exhaustive oracle on random instances") {
    oracles::Rng rng(11);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = rng.range(2, 8);
        int space_kind = trial % 3;
        if (space_kind == 0) {
            EuclideanSpace line(1);
            std::vector<PointId> E;
            for (int i = 0; i < n; ++i) E.push_back(line.add_point(rng.uniform()));
            Scale delta = Scale::of(0.02 + 0.4 * rng.uniform());
            // oracle candidates: E plus midpoints (the anywhere universe)
            auto clone = line.clone();
            std::vector<PointId> cands = E;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    cands.push_back(clone->add_midpoint(E[i], E[j]));
            if (cands.size() > 20) continue;
            CHECK(covering_number(line, E, delta).count ==
                  oracle_cover(*clone, E, cands, delta));
            CHECK(packing_number(line, E, delta).count == oracle_pack(line, E, delta));
            ++checked;
        } else if (space_kind == 1) {
            EuclideanSpace plane(2);
            std::vector<PointId> E;
            for (int i = 0; i < n; ++i)
                E.push_back(plane.add_point({rng.uniform(), rng.uniform()}));
            Scale delta = Scale::of(0.05 + 0.4 * rng.uniform());
            auto clone = plane.clone();
            std::vector<PointId> cands = E;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    cands.push_back(clone->add_midpoint(E[i], E[j]));
            if (cands.size() > 20) continue;
            CHECK(covering_number(plane, E, delta).count ==
                  oracle_cover(*clone, E, cands, delta));
            CHECK(packing_number(plane, E, delta).count == oracle_pack(plane, E, delta));
            ++checked;
        } else {
            // random metric from embedded points, centers restricted to E
            std::vector<double> xs;
            for (int i = 0; i < n; ++i) xs.push_back(rng.uniform());
            std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m[i][j] = std::fabs(xs[i] - xs[j]);
            bool degenerate = false;
            for (int i = 0; i < n && !degenerate; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (m[i][j] == 0.0) degenerate = true;
            if (degenerate) continue;
            MatrixSpace space(m);
            std::vector<PointId> E;
            for (int i = 0; i < n; ++i) E.push_back(static_cast<PointId>(i));
            Scale delta = Scale::of(0.05 + 0.4 * rng.uniform());
            CHECK(covering_number(space, E, delta).count ==
                  oracle_cover(space, E, E, delta));
            CHECK(packing_number(space, E, delta).count == oracle_pack(space, E, delta));
            ++checked;
        }
    }
    CHECK(checked >= 60);
}

TEST_CASE("exact below greedy, monotone in delta, cross relation") {
    oracles::Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.range(3, 10);
        EuclideanSpace plane(2);
        std::vector<PointId> E;
        for (int i = 0; i < n; ++i) E.push_back(plane.add_point({rng.uniform(), rng.uniform()}));
        double d = 0.05 + 0.3 * rng.uniform();

        CoverOptions greedy;
        greedy.mode = CoverMode::greedy;
        std::uint64_t g = covering_number(plane, E, Scale::of(d), greedy).count;
        std::uint64_t x = covering_number(plane, E, Scale::of(d)).count;
        CHECK(x <= g);

        // monotone: smaller delta needs at least as many balls
        CHECK(covering_number(plane, E, Scale::of(d / 2)).count >= x);

        // N(E,2d) <= N_p(E,d) <= N(E,d/2)
        std::uint64_t np = packing_number(plane, E, Scale::of(d)).count;
        CHECK(covering_number(plane, E, Scale::of(2 * d)).count <= np);
        CHECK(np <= covering_number(plane, E, Scale::of(d / 2)).count);

        // greedy packing is a lower bound
        CHECK(packing_number(plane, E, Scale::of(d), CoverMode::greedy).count <= np);
    }
}

TEST_CASE("covering profile on E0 endpoints+midpoints") {
    IntervalSet e0 = self_similar_e0(6);
    auto pts = sample_points(e0, 1, SampleMode::endpoints);
    // add interval midpoints
    for (std::size_t i = 0; i < e0.size(); ++i)
        pts.push_back((e0.interval(i).lo() + e0.interval(i).hi()).half());
    std::sort(pts.begin(), pts.end());
    RationalLineSpace space = make_line_space(pts);
    std::vector<PointId> E(space.size());
    for (std::size_t i = 0; i < E.size(); ++i) E[i] = static_cast<PointId>(i);

    ProfileOptions opt;
    opt.with_packing = true;
    CoveringProfile prof = covering_profile(space, E, geometric_schedule(7, 6), opt);
    REQUIRE(prof.entries.size() == 6);
    for (int l = 1; l <= 6; ++l)
        CHECK(prof.entries[l - 1].n_cover == (std::uint64_t(1) << l));
    prof.validate();
}

TEST_CASE("covering profile of 1/n cluster") {
    auto pts = one_over_n_points(100);
    RationalLineSpace space = make_line_space(pts);
    std::vector<PointId> E(space.size());
    for (std::size_t i = 0; i < E.size(); ++i) E[i] = static_cast<PointId>(i);
    std::uint64_t n = covering_number(space, E, Scale::of(0.1)).count;
    CHECK(n <= 4);
    CHECK(n == 4); // cluster below 0.21, then 1/4 and 1/3, then 1/2, then 1
    CHECK_THROWS_AS(covering_profile(space, E, {}, {}), precondition_error);
}

TEST_CASE("dense-centered covering and the separable bridge") {
    // N-hat(E, d-hat) <= N(E, d) when the net is finer than d-hat - d
    oracles::Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        EuclideanSpace line(1);
        std::vector<PointId> E;
        int n = rng.range(2, 12);
        for (int i = 0; i < n; ++i) E.push_back(line.add_point(rng.uniform()));
        double d = 0.03 + 0.2 * rng.uniform();
        double dhat = d * (1.5 + rng.uniform());

        std::uint64_t N = covering_number(line, E, Scale::of(d)).count;

        auto clone = line.clone();
        auto* lc = dynamic_cast<EuclideanSpace*>(clone.get());
        CoverOptions opt;
        opt.centers = CenterPolicy::from_net;
        double spacing = (dhat - d) * 0.9;
        for (double x = 0.0; x < 1.0 + spacing; x += spacing)
            opt.net.push_back(lc->add_point(std::min(x, 1.0)));
        std::uint64_t Nhat = covering_number(*clone, E, Scale::of(dhat), opt).count;
        CHECK(Nhat <= N);
    }
}

TEST_CASE("profile options: dense nets recorded per scale") {
    EuclideanSpace line(1);
    std::vector<PointId> E;
    for (int i = 0; i <= 16; ++i) E.push_back(line.add_point(i / 16.0));
    ProfileOptions opt;
    opt.dense_net = [](MetricSpace& sp, const Scale& delta) {
        auto& grid = dynamic_cast<EuclideanSpace&>(sp);
        std::vector<PointId> net;
        for (double x = 0.0; x <= 1.0 + 1e-12; x += delta.value / 2)
            net.push_back(grid.add_point(std::min(x, 1.0)));
        return net;
    };
    CoveringProfile prof =
        covering_profile(line, E, schedule_from_values({0.5, 0.25, 0.125}), opt);
    for (const auto& e : prof.entries) {
        REQUIRE(e.n_cover_dense.has_value());
        CHECK(*e.n_cover_dense >= e.n_cover); // midpoint centers can only do better
    }
}

TEST_CASE("sequence-space covering and packing match the oracle") {
    oracles::Rng rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        SequenceSpace seqs;
        std::vector<PointId> E;
        int n = rng.range(2, 8);
        for (int i = 0; i < n; ++i) {
            std::string bits;
            for (int j = 0; j < 6; ++j) bits.push_back(rng.range(0, 1) ? '1' : '0');
            E.push_back(seqs.add_point(bits));
        }
        // scales off the 2^-k grid to avoid double-equality ties
        Scale delta = Scale::of(0.75 * std::exp2(-rng.range(0, 4)));
        CoverOptions opt; // sequence space has no midpoints: centers = E
        CHECK(covering_number(seqs, E, delta, opt).count == oracle_cover(seqs, E, E, delta));
        CHECK(packing_number(seqs, E, delta).count == oracle_pack(seqs, E, delta));
    }
}

TEST_CASE("restricted-net line sweep equals the oracle") {
    oracles::Rng rng(103);
    for (int trial = 0; trial < 60; ++trial) {
        EuclideanSpace line(1);
        std::vector<PointId> E;
        int n = rng.range(2, 8);
        for (int i = 0; i < n; ++i) E.push_back(line.add_point(rng.uniform()));
        CoverOptions opt;
        opt.centers = CenterPolicy::from_net;
        int m = rng.range(2, 10);
        for (int i = 0; i < m; ++i) opt.net.push_back(line.add_point(rng.uniform()));
        Scale delta = Scale::of(0.05 + 0.5 * rng.uniform());
        std::uint64_t got;
        try {
            got = covering_number(line, E, delta, opt).count;
        } catch (const precondition_error&) {
            // net cannot reach some point: the oracle must agree
            bool coverable = true;
            for (PointId p : E) {
                bool hit = false;
                for (PointId c : opt.net)
                    if (line.in_open_ball(c, p, delta)) hit = true;
                coverable = coverable && hit;
            }
            CHECK(!coverable);
            continue;
        }
        CHECK(got == oracle_cover(line, E, opt.net, delta));
    }
}

TEST_CASE("profile cross relation checked at matching scales") {
    oracles::Rng rng(97);
    EuclideanSpace line(1);
    std::vector<PointId> E;
    for (int i = 0; i < 24; ++i) E.push_back(line.add_point(rng.uniform()));
    ProfileOptions opt;
    opt.with_packing = true;
    // base-2 schedule contains each 2*delta, so validate() exercises
    // N(E, 2 delta) <= N_p(E, delta) on every adjacent pair
    CoveringProfile prof = covering_profile(line, E, geometric_schedule(2, 8), opt);
    prof.validate();
    for (std::size_t i = 1; i < prof.entries.size(); ++i)
        CHECK(prof.entries[i - 1].n_cover <= *prof.entries[i].n_pack);
}

TEST_CASE("set cover engine basics and caps") {
    setcover::Instance inst;
    inst.n_elements = 3;
    inst.masks = {{0b011}, {0b110}, {0b100}};
    CHECK(setcover::exact_cover(inst, 1u << 20) == 2);
    CHECK(setcover::greedy_cover(inst) >= 2);

    setcover::Instance hollow;
    hollow.n_elements = 2;
    hollow.masks = {{0b01}};
    CHECK_THROWS_AS(setcover::exact_cover(hollow, 1u << 20), precondition_error);

    // node budget
    oracles::Rng rng(5);
    setcover::Instance big;
    big.n_elements = 24;
    std::uint64_t all = 0;
    for (int c = 0; c < 40; ++c) {
        std::uint64_t m = 0;
        for (int e = 0; e < 24; ++e)
            if (rng.uniform() < 0.25) m |= 1ull << e;
        big.masks.push_back({m});
        all |= m;
    }
    if (all == (1ull << 24) - 1)
        CHECK_THROWS_AS(setcover::exact_cover(big, 2), capacity_error);
}

TEST_CASE("exact covering candidate cap off the line") {
    oracles::Rng rng(23);
    EuclideanSpace plane(2);
    std::vector<PointId> E;
    for (int i = 0; i < 30; ++i) E.push_back(plane.add_point({rng.uniform(), rng.uniform()}));
    CoverOptions opt;
    opt.candidate_cap = 10;
    CHECK_THROWS_AS(covering_number(plane, E, Scale::of(0.2), opt), capacity_error);
}

TEST_CASE("from-net covering fails loudly when the net is too coarse") {
    EuclideanSpace line(1);
    std::vector<PointId> E{line.add_point(0.0), line.add_point(1.0)};
    CoverOptions opt;
    opt.centers = CenterPolicy::from_net;
    opt.net = {E[0]}; // cannot reach the point at 1.0
    CHECK_THROWS_AS(covering_number(line, E, Scale::of(0.25), opt), precondition_error);
}

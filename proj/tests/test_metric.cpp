#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "gaugedim/errors.hpp"
#include "gaugedim/metric.hpp"
#include "oracles.hpp"

using namespace gaugedim;

TEST_CASE("euclidean distances") {
    EuclideanSpace line(1);
    PointId a = line.add_point(0.0), b = line.add_point(1.0);
    CHECK(line.distance(a, b) == 1.0);

    EuclideanSpace plane(2);
    PointId p = plane.add_point({0.0, 0.0});
    PointId q = plane.add_point({3.0, 4.0});
    CHECK(plane.distance(p, q) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK_THROWS_AS(plane.add_point({1.0}), precondition_error);
}

TEST_CASE("explicit matrix space") {
    std::vector<std::vector<double>> m{{0.0, 0.3, 0.4}, {0.3, 0.0, 0.5}, {0.4, 0.5, 0.0}};
    MatrixSpace space(m);
    CHECK(space.distance(0, 1) == 0.3);
    CHECK(space.distance(1, 0) == 0.3);

    // asymmetric
    auto bad = m;
    bad[0][1] = 0.31;
    CHECK_THROWS_AS(MatrixSpace{bad}, precondition_error);
    // triangle violation
    auto tri = m;
    tri[1][2] = tri[2][1] = 2.0;
    CHECK_THROWS_AS(MatrixSpace{tri}, precondition_error);
    // negative entry
    auto neg = m;
    neg[0][2] = neg[2][0] = -0.1;
    CHECK_THROWS_AS(MatrixSpace{neg}, precondition_error);
}

TEST_CASE("diameter") {
    EuclideanSpace line(1);
    std::vector<PointId> E{line.add_point(0.0), line.add_point(0.5), line.add_point(1.0)};
    CHECK(diameter(line, E) == 1.0);
    CHECK(diameter(line, {E[0]}) == 0.0);
    CHECK_THROWS_AS(diameter(line, {}), precondition_error);

    EuclideanSpace plane(2);
    std::vector<PointId> sq{plane.add_point({0, 0}), plane.add_point({0, 1}),
                            plane.add_point({1, 0}), plane.add_point({1, 1})};
    CHECK(diameter(plane, sq) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("metric axioms hold on sampled pairs and triples") {
    oracles::Rng rng(7);

    EuclideanSpace plane(2);
    std::vector<PointId> pts;
    for (int i = 0; i < 40; ++i) pts.push_back(plane.add_point({rng.uniform(), rng.uniform()}));

    RationalLineSpace rats;
    std::vector<PointId> rpts;
    for (int i = 0; i < 40; ++i)
        rpts.push_back(rats.add_point(Rational(rng.range(0, 1000), rng.range(1, 50))));

    SequenceSpace seqs;
    std::vector<PointId> spts;
    for (int i = 0; i < 40; ++i) {
        std::string bits;
        for (int j = 0; j < 12; ++j) bits.push_back(rng.range(0, 1) ? '1' : '0');
        spts.push_back(seqs.add_point(bits));
    }

    // explicit matrix from embedded points keeps the axioms by construction
    std::vector<std::vector<double>> m(20, std::vector<double>(20, 0.0));
    std::vector<double> xs;
    for (int i = 0; i < 20; ++i) xs.push_back(rng.uniform() * (1 + i));
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) m[i][j] = std::fabs(xs[i] - xs[j]);
    MatrixSpace mat(m);
    std::vector<PointId> mpts;
    for (int i = 0; i < 20; ++i) mpts.push_back(static_cast<PointId>(i));

    auto check_space = [&](const MetricSpace& sp, const std::vector<PointId>& ids) {
        for (int it = 0; it < 10000; ++it) {
            PointId a = ids[rng.range(0, static_cast<int>(ids.size()) - 1)];
            PointId b = ids[rng.range(0, static_cast<int>(ids.size()) - 1)];
            PointId c = ids[rng.range(0, static_cast<int>(ids.size()) - 1)];
            double ab = sp.distance(a, b);
            CHECK(ab == sp.distance(b, a));
            CHECK(sp.distance(a, a) == 0.0);
            CHECK(ab <= sp.distance(a, c) + sp.distance(c, b) + 1e-12);
        }
    };
    check_space(plane, pts);
    check_space(rats, rpts);
    check_space(seqs, spts);
    check_space(mat, mpts);
}

TEST_CASE("rational line: exact boundary comparisons") {
    RationalLineSpace line;
    PointId a = line.add_point(Rational(1, 7));
    PointId b = line.add_point(Rational(2, 7));
    Scale d7 = Scale::power_of(7, 1);
    // distance is exactly 1/7: not inside the open ball, but separated
    CHECK(line.distance_vs(a, b, d7) == 0);
    CHECK(!line.in_open_ball(a, b, d7));
    CHECK(line.separated(a, b, d7));
    // midpoints stay exact
    PointId m = line.add_midpoint(a, b);
    CHECK(line.point(m) == Rational(3, 14));
    CHECK(line.in_open_ball(m, a, d7));
}

TEST_CASE("rational from_double is exact") {
    CHECK(Rational::from_double(0.75) == Rational(3, 4));
    CHECK(Rational::from_double(std::exp2(-20)) == Rational::power(2, -20));
    Rational third = Rational::from_double(1.0 / 3.0);
    CHECK(third != Rational(1, 3)); // 1/3 is not a double
    CHECK(std::fabs(third.to_double() - 1.0 / 3.0) == 0.0);
}

TEST_CASE("sequence space metric") {
    SequenceSpace seqs;
    PointId a = seqs.add_point("0011");
    PointId b = seqs.add_point("0100");
    PointId c = seqs.add_point("0011");
    CHECK(seqs.distance(a, b) == doctest::Approx(0.5).epsilon(1e-15)); // lcp 1
    CHECK(seqs.distance(a, c) == 0.0);
}

TEST_CASE("dyadic net of interval and box") {
    auto net1 = dyadic_net({0.0}, {1.0}, 0.25);
    REQUIRE(net1.size() == 5);
    CHECK(net1.front()[0] == 0.0);
    CHECK(net1.back()[0] == 1.0);

    auto net2 = dyadic_net({0.0, 0.0}, {1.0, 1.0}, 0.5);
    CHECK(net2.size() <= 9);
    // covering check: random points of the box are within delta of the net
    oracles::Rng rng(3);
    for (int i = 0; i < 2000; ++i) {
        double x = rng.uniform(), y = rng.uniform();
        double best = 1e9;
        for (const auto& p : net2)
            best = std::min(best, std::hypot(p[0] - x, p[1] - y));
        CHECK(best <= 0.5 + 1e-12);
    }

    CHECK_THROWS_AS(dyadic_net({0.0}, {1.0}, 0.0), precondition_error);
    CHECK_THROWS_AS(dyadic_net({0.0, 0.0}, {1.0, 1.0}, 1e-6, 100), capacity_error);
}

TEST_CASE("dyadic enumeration decode and candidates") {
    CHECK(DyadicEnumeration::decode("101") == 0.625);
    CHECK(DyadicEnumeration::decode("") == 0.0);
    CHECK_THROWS_AS(DyadicEnumeration::decode("102"), precondition_error);

    auto cands = DyadicEnumeration::candidates_near(0.5, 0.125, 3);
    REQUIRE(cands.size() == 3); // 3/8, 1/2, 5/8
    CHECK(cands[0].minimal_codeword == "011");
    CHECK(cands[1].minimal_codeword == "1");
    CHECK(cands[2].minimal_codeword == "101");

    // too-coarse net leaves no candidate inside delta
    auto none = DyadicEnumeration::candidates_near(0.3, 1e-9, 2);
    CHECK(none.empty());
}

TEST_CASE("dyadic candidates from bit expansion") {
    // x = 1/3 = 0.010101...
    std::vector<std::uint8_t> bits;
    for (int i = 0; i < 64; ++i) bits.push_back(i % 2 == 1 ? 1 : 0);
    auto cands = DyadicEnumeration::candidates_near_bits(bits, 4);
    REQUIRE(cands.size() == 2);
    CHECK(cands[0].minimal_codeword == "0101"); // 5/16
    CHECK(cands[1].minimal_codeword == "011");  // 6/16
    for (const auto& c : cands)
        CHECK(std::fabs(c.value - 1.0 / 3.0) <= std::exp2(-4));
}

TEST_CASE("csv and json readers validate input") {
    const char* csv_path = "test_points.csv";
    {
        std::ofstream out(csv_path);
        out << "0.1,0.2\n0.3,0.4\n";
    }
    auto pts = read_points_csv(csv_path);
    REQUIRE(pts.size() == 2);
    CHECK(pts[1][1] == 0.4);

    {
        std::ofstream out(csv_path);
        out << "0.1,0.2\n-0.3,0.4\n";
    }
    CHECK_THROWS_AS(read_points_csv(csv_path), precondition_error);

    {
        std::ofstream out(csv_path);
        out << "0.1,0.2\nnan,0.4\n";
    }
    CHECK_THROWS_AS(read_points_csv(csv_path), precondition_error);

    {
        std::ofstream out(csv_path);
        out << "0.1,0.2\n0.3\n";
    }
    CHECK_THROWS_AS(read_points_csv(csv_path), precondition_error);

    const char* json_path = "test_points.json";
    {
        std::ofstream out(json_path);
        out << "[[0.0,0.1],[0.2,0.3]]";
    }
    CHECK(read_points_json(json_path).size() == 2);
    {
        std::ofstream out(json_path);
        out << "[[0.0,0.1],[0.2,0.3],[0.1,0.1]]";
    }
    CHECK_THROWS_AS(read_matrix_json(json_path), precondition_error); // not square

    std::remove(csv_path);
    std::remove(json_path);
}

TEST_CASE("schedules") {
    auto sched = geometric_schedule(7, 6);
    REQUIRE(sched.size() == 6);
    CHECK(sched[2].value == doctest::Approx(std::pow(7.0, -3)).epsilon(1e-15));
    CHECK(*sched[2].exact == Rational::power(7, -3));

    CHECK_THROWS_AS(schedule_from_values({0.5, 0.5}), precondition_error);
    CHECK_THROWS_AS(schedule_from_values({0.5, -0.1}), precondition_error);
    CHECK_THROWS_AS(schedule_from_values({}), precondition_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "otg/geometry.hpp"

using namespace otg;

TEST_CASE("shift translates componentwise") {
    const Box unit({0.0, 0.0}, {1.0, 1.0});
    CHECK(shift(Vec{0.0, 0.0}, unit) == unit);
    CHECK(shift(Vec{2.0, -1.0}, unit) == Box({2.0, -1.0}, {3.0, 0.0}));
    CHECK(shift(Vec{0.2, 0.2}, Box({-0.2, -0.2}, {0.2, 0.2})) == Box({0.0, 0.0}, {0.4, 0.4}));
    CHECK_THROWS_AS(shift(Vec{1.0}, unit), std::invalid_argument);
}

TEST_CASE("shift round trip") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> d(-8.0, 8.0);
    for (int trial = 0; trial < 200; ++trial) {
        double x0 = d(gen), x1 = d(gen), y0 = d(gen), y1 = d(gen);
        const Box b({std::min(x0, x1), std::min(y0, y1)}, {std::max(x0, x1), std::max(y0, y1)});
        const Vec c{d(gen), d(gen)};
        CHECK(shift(-1.0 * c, shift(c, b)) == b);
    }
}

TEST_CASE("ball builds the centered box") {
    CHECK(ball(Vec{0.0, 0.0}, Vec{1.0, 1.0}) == Box({-1.0, -1.0}, {1.0, 1.0}));
    CHECK(ball(Vec{5.0, 4.0}, Vec{0.2, 0.2}) == Box({4.8, 3.8}, {5.2, 4.2}));
    CHECK(ball(Vec{0.2, 0.2, 0.2}, Vec{0.2, 0.2, 0.2}) == Box({0.0, 0.0, 0.0}, {0.4, 0.4, 0.4}));
    CHECK_THROWS_AS(ball(Vec{0.0}, Vec{0.0}), std::invalid_argument);
    CHECK_THROWS_AS(ball(Vec{0.0}, Vec{-0.1}), std::invalid_argument);
}

TEST_CASE("grid cell counts and representative points") {
    const GridSpec g(Box({0.0, 0.0}, {10.0, 8.0}), Vec{0.2, 0.2});
    CHECK(g.cells(0) == 25);
    CHECK(g.cells(1) == 20);
    CHECK(g.cell_count() == 500);
    CHECK(g.rep(CellIndex{{0, 0}}) == Vec{0.2, 0.2});
    CHECK(g.rep(CellIndex{{1, 0}})[0] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(g.rep(CellIndex{{24, 19}})[0] == doctest::Approx(9.8).epsilon(1e-12));
    CHECK(g.rep(CellIndex{{24, 19}})[1] == doctest::Approx(7.8).epsilon(1e-12));

    const GridSpec g3(Box({0.0, 0.0, 0.0}, {10.0, 10.0, 10.0}), Vec{0.2, 0.2, 0.2});
    CHECK(g3.cell_count() == 25 * 25 * 25);

    const GridSpec g1(Box({0.0}, {1.0}), Vec{0.5});
    CHECK(g1.cells(0) == 1);
    CHECK(g1.rep(CellIndex{{0}}) == Vec{0.5});
}

TEST_CASE("last cell overhangs when the extent does not divide") {
    const GridSpec g(Box({0.0}, {1.0}), Vec{0.3});
    CHECK(g.cells(0) == 2);
    // second cell spans [0.6, 1.2], overhanging the domain
    CHECK(g.cell_box(CellIndex{{1}}).upper()[0] == doctest::Approx(1.2));
    CHECK(g.cell_of_point(Vec{0.99}) == CellIndex{{1}});
}

TEST_CASE("cell_of_point locates and tie-breaks to the lower index") {
    const GridSpec g(Box({0.0, 0.0}, {10.0, 8.0}), Vec{0.2, 0.2});
    CHECK(g.cell_of_point(Vec{0.1, 0.1}) == CellIndex{{0, 0}});
    CHECK(g.cell_of_point(Vec{9.9, 7.9}) == CellIndex{{24, 19}});
    CHECK(g.cell_of_point(Vec{0.4, 0.4}) == CellIndex{{0, 0}});
    CHECK(g.cell_of_point(Vec{10.0, 8.0}) == CellIndex{{24, 19}});
    CHECK(g.cell_of_point(Vec{0.0, 0.0}) == CellIndex{{0, 0}});
    CHECK_THROWS_AS(g.cell_of_point(Vec{10.1, 0.0}), std::out_of_range);
}

TEST_CASE("located cell contains the point") {
    const GridSpec g(Box({0.0, 0.0}, {10.0, 8.0}), Vec{0.2, 0.2});
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> dx(0.0, 10.0), dy(0.0, 8.0);
    for (int trial = 0; trial < 500; ++trial) {
        const Vec x{dx(gen), dy(gen)};
        CHECK(g.cell_box(g.cell_of_point(x)).contains(x));
    }
}

TEST_CASE("cells cover the domain") {
    for (const double upper : {1.0, 0.9, 1.7}) {
        const GridSpec g(Box({0.0, 0.0}, {upper, 1.3}), Vec{0.25, 0.2});
        std::mt19937 gen(3);
        std::uniform_real_distribution<double> dx(0.0, upper), dy(0.0, 1.3);
        for (int trial = 0; trial < 300; ++trial) {
            const Vec x{dx(gen), dy(gen)};
            bool covered = false;
            for (int i = 0; i < g.cells(0) && !covered; ++i)
                for (int j = 0; j < g.cells(1) && !covered; ++j)
                    covered = g.cell_box(CellIndex{{i, j}}).contains(x);
            CHECK(covered);
        }
    }
}

TEST_CASE("neighbors is the in-grid Moore neighborhood") {
    const GridSpec g(Box({0.0, 0.0}, {10.0, 8.0}), Vec{0.2, 0.2});
    CHECK(g.neighbors(CellIndex{{5, 5}}).size() == 8);
    CHECK(g.neighbors(CellIndex{{0, 0}}).size() == 3);
    CHECK(g.neighbors(CellIndex{{24, 19}}).size() == 3);
    CHECK(g.neighbors(CellIndex{{0, 5}}).size() == 5);

    const GridSpec g3(Box({0.0, 0.0, 0.0}, {2.0, 2.0, 2.0}), Vec{0.2, 0.2, 0.2});
    CHECK(g3.neighbors(CellIndex{{2, 2, 2}}).size() == 26);
    CHECK(g3.neighbors(CellIndex{{0, 0, 0}}).size() == 7);
}

TEST_CASE("neighbors matches the 2*eta box definition") {
    // all representative points inside ball(rep(c), 2*eta), excluding c
    const GridSpec g(Box({0.0, 0.0}, {3.0, 2.0}), Vec{0.25, 0.25});
    for (int i = 0; i < g.cells(0); ++i) {
        for (int j = 0; j < g.cells(1); ++j) {
            const CellIndex c{{i, j}};
            const Box reach = ball(g.rep(c), Vec{0.5, 0.5});
            std::set<CellIndex> expect;
            for (int a = 0; a < g.cells(0); ++a)
                for (int b = 0; b < g.cells(1); ++b) {
                    const CellIndex o{{a, b}};
                    if (o != c && reach.contains(g.rep(o))) expect.insert(o);
                }
            const auto got = g.neighbors(c);
            CHECK(std::set<CellIndex>(got.begin(), got.end()) == expect);
        }
    }
}

TEST_CASE("neighbors is symmetric") {
    const GridSpec g(Box({0.0, 0.0}, {2.0, 1.6}), Vec{0.2, 0.2});
    for (int i = 0; i < g.cells(0); ++i)
        for (int j = 0; j < g.cells(1); ++j) {
            const CellIndex c{{i, j}};
            for (const CellIndex& n : g.neighbors(c)) {
                const auto back = g.neighbors(n);
                CHECK(std::count(back.begin(), back.end(), c) == 1);
            }
        }
}

TEST_CASE("intersects uses closed intervals") {
    const Box a({0.0, 0.0}, {1.0, 1.0});
    CHECK_FALSE(intersects(a, Box({2.0, 2.0}, {3.0, 3.0})));
    CHECK(intersects(a, Box({0.5, 0.5}, {2.0, 2.0})));
    CHECK(intersects(a, Box({1.0, 1.0}, {2.0, 2.0})));  // touching counts
    CHECK_THROWS_AS(intersects(a, Box({0.0}, {1.0})), std::invalid_argument);
}

TEST_CASE("intersects is symmetric and reflexive") {
    std::mt19937 gen(23);
    std::uniform_real_distribution<double> d(-4.0, 4.0);
    for (int trial = 0; trial < 300; ++trial) {
        auto mk = [&] {
            double x0 = d(gen), x1 = d(gen), y0 = d(gen), y1 = d(gen);
            return Box({std::min(x0, x1), std::min(y0, y1)},
                       {std::max(x0, x1), std::max(y0, y1)});
        };
        const Box a = mk(), b = mk();
        CHECK(intersects(a, b) == intersects(b, a));
        CHECK(intersects(a, a));
    }
}

TEST_CASE("clamp_into translates boxes inside the outer box") {
    const Box outer({0.0, 0.0}, {10.0, 8.0});
    CHECK(clamp_into(Box({-1.0, 3.0}, {1.0, 4.0}), outer) == Box({0.0, 3.0}, {2.0, 4.0}));
    CHECK(clamp_into(Box({9.5, 7.5}, {10.5, 8.5}), outer) == Box({9.0, 7.0}, {10.0, 8.0}));
    const Box inside({1.0, 1.0}, {2.0, 2.0});
    CHECK(clamp_into(inside, outer) == inside);
    CHECK_THROWS_AS(clamp_into(Box({0.0, 0.0}, {11.0, 1.0}), outer), std::invalid_argument);
}

TEST_CASE("box invariants are enforced") {
    CHECK_THROWS_AS(Box({1.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(Box({0.0, 0.0}, {1.0}), std::invalid_argument);
    const Box degenerate({1.0, 1.0}, {1.0, 2.0});  // allowed as a probe
    CHECK(degenerate.degenerate());
}

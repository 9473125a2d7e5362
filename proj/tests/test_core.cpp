#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "roughstat/core.hpp"

using namespace roughstat;

TEST_CASE("norm on reference points") {
    CHECK(norm(Point{{3.0, 4.0}}, NormKind::L2) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(norm(Point{{3.0, 4.0}}, NormKind::L1) == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(norm(Point{{3.0, -4.0}}, NormKind::LInf) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(norm(Point{{0.0, 0.0, 0.0}}, NormKind::L2) == 0.0);
}

TEST_CASE("norm rejects zero-dimensional points") {
    CHECK_THROWS_AS(norm(Point{}, NormKind::L2), InvalidInput);
}

TEST_CASE("only L2 is strictly convex") {
    CHECK(strictly_convex(NormKind::L2));
    CHECK_FALSE(strictly_convex(NormKind::L1));
    CHECK_FALSE(strictly_convex(NormKind::LInf));
}

TEST_CASE("norm axioms on random points") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    std::uniform_real_distribution<double> scale(-5.0, 5.0);
    std::uniform_int_distribution<int> dims(1, 5);
    const NormKind kinds[] = {NormKind::L1, NormKind::L2, NormKind::LInf};

    for (int trial = 0; trial < 500; ++trial) {
        int d = dims(rng);
        Point p, q;
        for (int i = 0; i < d; ++i) {
            p.coords.push_back(coord(rng));
            q.coords.push_back(coord(rng));
        }
        double c = scale(rng);
        for (NormKind kind : kinds) {
            double np = norm(p, kind);
            CHECK(np >= 0.0);

            Point scaled;
            for (double v : p.coords) scaled.coords.push_back(c * v);
            CHECK(norm(scaled, kind) ==
                  doctest::Approx(std::abs(c) * np).epsilon(1e-12));

            Point sum;
            for (int i = 0; i < d; ++i)
                sum.coords.push_back(p.coords[static_cast<std::size_t>(i)] +
                                     q.coords[static_cast<std::size_t>(i)]);
            double lhs = norm(sum, kind);
            double rhs = np + norm(q, kind);
            CHECK(lhs <= rhs * (1.0 + 1e-12) + 1e-15);
        }
    }
}

TEST_CASE("norm is zero only at the origin") {
    CHECK(norm(Point{{0.0, 0.0}}, NormKind::L1) == 0.0);
    CHECK(norm(Point{{1e-300, 0.0}}, NormKind::LInf) > 0.0);
}

TEST_CASE("default checkpoint schedules") {
    CHECK(default_checkpoints(4000).values == std::vector<index_t>{1000, 2000, 4000});
    CHECK(default_checkpoints(1000).values == std::vector<index_t>{1000});

    auto big = default_checkpoints(1'000'000);
    CHECK(big.values.front() == 1000);
    CHECK(big.values[big.size() - 2] == 512'000);
    CHECK(big.values.back() == 1'000'000);
    CHECK(big.size() == 11);

    CHECK_THROWS_AS(default_checkpoints(999), InvalidInput);
}

TEST_CASE("default checkpoints are strictly increasing and end at N") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<index_t> ns(1000, 50'000'000);
    for (int trial = 0; trial < 200; ++trial) {
        index_t n = ns(rng);
        auto cps = default_checkpoints(n);
        cps.validate();
        CHECK(cps.horizon() == n);
        for (std::size_t j = 1; j < cps.size(); ++j)
            CHECK(cps.values[j] > cps.values[j - 1]);
    }
}

TEST_CASE("rough params validation") {
    RoughParams ok;
    ok.r = 1.5;
    ok.alpha = 0.5;
    CHECK_NOTHROW(ok.validate());

    RoughParams bad_r = ok;
    bad_r.r = -0.1;
    CHECK_THROWS_AS(bad_r.validate(), InvalidInput);

    RoughParams bad_alpha = ok;
    bad_alpha.alpha = 0.0;
    CHECK_THROWS_AS(bad_alpha.validate(), InvalidInput);
    bad_alpha.alpha = 1.5;
    CHECK_THROWS_AS(bad_alpha.validate(), InvalidInput);

    RoughParams bad_ladder = ok;
    bad_ladder.eps_ladder = {0.1, 0.1};
    CHECK_THROWS_AS(bad_ladder.validate(), InvalidInput);
    bad_ladder.eps_ladder = {0.1, -0.2};
    CHECK_THROWS_AS(bad_ladder.validate(), InvalidInput);
    bad_ladder.eps_ladder.clear();
    CHECK_THROWS_AS(bad_ladder.validate(), InvalidInput);
}

TEST_CASE("norm kind names round-trip") {
    for (NormKind kind : {NormKind::L1, NormKind::L2, NormKind::LInf})
        CHECK(norm_kind_from_string(to_string(kind)) == kind);
    CHECK_THROWS_AS(norm_kind_from_string("l3"), InvalidInput);
}

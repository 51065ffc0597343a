#include <doctest.h>

#include <random>
#include <stdexcept>

#include "somkit/weights.hpp"
#include "support/oracles.hpp"

using namespace somkit;
using namespace testsupport;

TEST_CASE("euclidean_distance basics") {
    CHECK(euclidean_distance(std::vector<double>{0, 0, 0}, std::vector<double>{0, 0, 0}) ==
          0.0);
    CHECK(euclidean_distance(std::vector<double>{0, 3}, std::vector<double>{4, 0}) ==
          doctest::Approx(5.0));
}

TEST_CASE("euclidean_distance matches the component-loop oracle") {
    std::mt19937 gen(101);
    for (int i = 0; i < 20; ++i) {
        const auto a = random_vector(gen, 8, -5.0, 5.0);
        const auto b = random_vector(gen, 8, -5.0, 5.0);
        CHECK(approx_rel(euclidean_distance(a, b), oracle_distance(a, b), 1e-12));
        CHECK(euclidean_distance(a, b) == euclidean_distance(b, a));
    }
}

TEST_CASE("euclidean_distance rejects mismatched dimensions, naming both") {
    const std::vector<double> a{1, 2, 3};
    const std::vector<double> b{1, 2};
    CHECK_THROWS_AS(euclidean_distance(a, b), std::invalid_argument);
    try {
        euclidean_distance(a, b);
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("3") != std::string::npos);
        CHECK(msg.find("2") != std::string::npos);
    }
}

TEST_CASE("find_bmu picks the nearest weight vector") {
    WeightMatrix wm(2, 2);
    const double rows[4][2] = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    for (std::size_t j = 0; j < 4; ++j) {
        std::copy(rows[j], rows[j] + 2, wm.row(j).begin());
    }
    const auto result = find_bmu(std::vector<double>{0.9, 1.1}, wm);
    CHECK(to_flat_index(result.position, 2) == 1);
    CHECK(result.distance == doctest::Approx(0.1414213562).epsilon(1e-6));
}

TEST_CASE("find_bmu ties break to the smallest flat index") {
    WeightMatrix wm(2, 3);
    for (std::size_t j = 0; j < 4; ++j) {
        for (auto& v : wm.row(j)) v = 0.5;
    }
    const auto result = find_bmu(std::vector<double>{0.1, 0.9, 0.4}, wm);
    CHECK(to_flat_index(result.position, 2) == 0);

    // A duplicated minimum elsewhere still resolves to the lower index.
    std::copy(wm.row(3).begin(), wm.row(3).end(), wm.row(1).begin());
    const auto again = find_bmu(std::vector<double>{0.5, 0.5, 0.5}, wm);
    CHECK(to_flat_index(again.position, 2) == 0);
}

TEST_CASE("find_bmu agrees with a brute-force scan on random instances") {
    std::mt19937 gen(202);
    std::uniform_int_distribution<std::size_t> side_dist(1, 6);
    std::uniform_int_distribution<std::size_t> dim_dist(1, 8);
    for (int i = 0; i < 100; ++i) {
        const auto wm = random_weight_matrix(gen, side_dist(gen), dim_dist(gen));
        const auto sample = random_vector(gen, wm.dim());
        const auto got = find_bmu(sample, wm);
        const auto [want_flat, want_dist] = oracle_bmu(wm, sample);
        CHECK(to_flat_index(got.position, wm.side()) == want_flat);
        CHECK(approx_rel(got.distance, want_dist, 1e-12));
    }
}

TEST_CASE("a sample equal to a unique weight row wins with distance 0") {
    std::mt19937 gen(7);
    const auto wm = random_weight_matrix(gen, 4, 5);
    const std::vector<double> sample(wm.row(9).begin(), wm.row(9).end());
    const auto result = find_bmu(sample, wm);
    CHECK(to_flat_index(result.position, 4) == 9);
    CHECK(result.distance == 0.0);
}

TEST_CASE("find_two_bmus returns the two nearest, distinct positions") {
    WeightMatrix wm(2, 1);
    for (std::size_t j = 0; j < 4; ++j) {
        wm.row(j)[0] = static_cast<double>(j);
    }
    const auto [first, second] = find_two_bmus(std::vector<double>{0.4}, wm);
    CHECK(to_flat_index(first, 2) == 0);
    CHECK(to_flat_index(second, 2) == 1);
}

TEST_CASE("find_two_bmus ties break by flat index") {
    WeightMatrix wm(2, 2);
    for (std::size_t j = 0; j < 4; ++j) {
        for (auto& v : wm.row(j)) v = 0.25;
    }
    const auto [first, second] = find_two_bmus(std::vector<double>{0.9, 0.1}, wm);
    CHECK(to_flat_index(first, 2) == 0);
    CHECK(to_flat_index(second, 2) == 1);
}

TEST_CASE("find_two_bmus agrees with the sorted-distance oracle") {
    std::mt19937 gen(303);
    std::uniform_int_distribution<std::size_t> side_dist(2, 6);
    std::uniform_int_distribution<std::size_t> dim_dist(1, 8);
    for (int i = 0; i < 100; ++i) {
        const auto wm = random_weight_matrix(gen, side_dist(gen), dim_dist(gen));
        const auto sample = random_vector(gen, wm.dim());
        const auto [first, second] = find_two_bmus(sample, wm);
        const auto order = oracle_sorted_by_distance(wm, sample);
        CHECK(to_flat_index(first, wm.side()) == order[0]);
        CHECK(to_flat_index(second, wm.side()) == order[1]);
        CHECK(first != second);
    }
}

TEST_CASE("find_two_bmus needs at least two neurons") {
    WeightMatrix wm(1, 2);
    CHECK_THROWS_AS(find_two_bmus(std::vector<double>{0.0, 0.0}, wm), std::invalid_argument);
}

TEST_CASE("grid_distance") {
    CHECK(grid_distance({2, 3}, {2, 3}) == 0.0);
    CHECK(grid_distance({0, 0}, {3, 4}) == doctest::Approx(5.0));

    std::mt19937 gen(404);
    std::uniform_int_distribution<std::size_t> coord(0, 9);
    for (int i = 0; i < 200; ++i) {
        const GridPosition p{coord(gen), coord(gen)};
        const GridPosition q{coord(gen), coord(gen)};
        const GridPosition r{coord(gen), coord(gen)};
        const double dr = double(p.row) - double(q.row);
        const double dc = double(p.col) - double(q.col);
        CHECK(grid_distance(p, q) == doctest::Approx(std::sqrt(dr * dr + dc * dc)));
        CHECK(grid_distance(p, q) == grid_distance(q, p));
        CHECK(grid_distance(p, r) <= grid_distance(p, q) + grid_distance(q, r) + 1e-12);
    }
}

TEST_CASE("flat index round-trips for every side up to 10") {
    for (std::size_t side = 1; side <= 10; ++side) {
        for (std::size_t flat = 0; flat < side * side; ++flat) {
            const GridPosition p = from_flat_index(flat, side);
            CHECK(p.row < side);
            CHECK(p.col < side);
            CHECK(to_flat_index(p, side) == flat);
        }
    }
}

TEST_CASE("init_weights is deterministic and in range") {
    const auto a = init_weights(2, 3, 42);
    const auto b = init_weights(2, 3, 42);
    CHECK(a.data() == b.data());

    const auto c = init_weights(4, 2, 7);
    REQUIRE(c.data().size() == 32);
    for (const double v : c.data()) {
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }

    const auto s1 = init_weights(3, 3, 1);
    const auto s2 = init_weights(3, 3, 2);
    CHECK(s1.data() != s2.data());
}

TEST_CASE("init_weights rejects zero sizes") {
    CHECK_THROWS_AS(init_weights(0, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(init_weights(3, 0, 1), std::invalid_argument);
}

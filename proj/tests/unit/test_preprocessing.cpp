#include <doctest.h>

#include <random>

#include "somkit/dataset.hpp"
#include "somkit/errors.hpp"
#include "somkit/normalize.hpp"
#include "support/oracles.hpp"
#include "support/temp.hpp"

using namespace somkit;
using namespace testsupport;

#ifndef SOMKIT_TEST_DATA_DIR
#error "SOMKIT_TEST_DATA_DIR must be defined"
#endif

TEST_CASE("load_csv parses a headered numeric file") {
    TempDir tmp;
    write_file(tmp.file("rgb.csv"), "r,g,b\n0,0,0\n255,255,255\n");
    const auto ds = load_csv(tmp.file("rgb.csv"), {.has_header = true});
    REQUIRE(ds.size() == 2);
    CHECK(ds.dim() == 3);
    CHECK(ds.column_names == std::vector<std::string>{"r", "g", "b"});
    CHECK(ds.rows[1] == std::vector<double>{255, 255, 255});
    CHECK_FALSE(ds.has_labels());
}

TEST_CASE("load_csv extracts the iris label column") {
    const auto ds = load_csv(std::string(SOMKIT_TEST_DATA_DIR) + "/iris.csv",
                             {.has_header = true, .label_column = "species"});
    REQUIRE(ds.size() == 150);
    CHECK(ds.dim() == 4);
    REQUIRE(ds.labels.size() == 150);
    CHECK(ds.labels.front() == "setosa");
    CHECK(ds.labels.back() == "virginica");
    CHECK(ds.column_names == std::vector<std::string>{"sepal_length", "sepal_width",
                                                      "petal_length", "petal_width"});
}

TEST_CASE("load_csv names the offending cell") {
    TempDir tmp;
    write_file(tmp.file("bad.csv"), "1,x,3\n");
    try {
        load_csv(tmp.file("bad.csv"));
        FAIL("expected DataError");
    } catch (const DataError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("row 1") != std::string::npos);
        CHECK(msg.find("column 2") != std::string::npos);
    }
}

TEST_CASE("load_csv error paths") {
    TempDir tmp;
    CHECK_THROWS_AS(load_csv(tmp.file("missing.csv")), DataError);

    write_file(tmp.file("empty.csv"), "");
    CHECK_THROWS_AS(load_csv(tmp.file("empty.csv")), DataError);

    write_file(tmp.file("header_only.csv"), "a,b\n");
    CHECK_THROWS_AS(load_csv(tmp.file("header_only.csv"), {.has_header = true}), DataError);

    write_file(tmp.file("ragged.csv"), "1,2\n3\n");
    CHECK_THROWS_AS(load_csv(tmp.file("ragged.csv")), DataError);

    write_file(tmp.file("inf.csv"), "1,inf\n");
    CHECK_THROWS_AS(load_csv(tmp.file("inf.csv")), DataError);

    write_file(tmp.file("nolabel.csv"), "a,b\n1,2\n");
    CHECK_THROWS_AS(
        load_csv(tmp.file("nolabel.csv"), {.has_header = true, .label_column = "missing"}),
        DataError);
}

TEST_CASE("load_csv accepts alternative delimiters and label-by-index") {
    TempDir tmp;
    write_file(tmp.file("semi.csv"), "1;2;red\n3;4;blue\n");
    const auto ds =
        load_csv(tmp.file("semi.csv"), {.label_column = "2", .delimiter = ';'});
    REQUIRE(ds.size() == 2);
    CHECK(ds.dim() == 2);
    CHECK(ds.labels == std::vector<std::string>{"red", "blue"});
}

TEST_CASE("feature rows are identical with and without a label column") {
    TempDir tmp;
    write_file(tmp.file("labeled.csv"), "1.5,2.5,a\n3.5,4.5,b\n");
    write_file(tmp.file("plain.csv"), "1.5,2.5\n3.5,4.5\n");
    const auto labeled = load_csv(tmp.file("labeled.csv"), {.label_column = "2"});
    const auto plain = load_csv(tmp.file("plain.csv"));
    CHECK(labeled.rows == plain.rows);
}

TEST_CASE("fit_normalization computes per-feature ranges") {
    Dataset ds;
    ds.rows = {{0, 10}, {4, 10}};
    const auto p = fit_normalization(ds);
    CHECK(p.mins == std::vector<double>{0, 10});
    CHECK(p.maxs == std::vector<double>{4, 10});
    CHECK(p.degenerate == std::vector<bool>{false, true});
}

TEST_CASE("fit_normalization on a single row marks everything degenerate") {
    Dataset ds;
    ds.rows = {{3.5, -1.0, 0.0}};
    const auto p = fit_normalization(ds);
    CHECK(p.degenerate == std::vector<bool>{true, true, true});
    CHECK(p.mins == p.maxs);
}

TEST_CASE("fit_normalization matches a brute-force column scan and ignores row order") {
    std::mt19937 gen(11);
    Dataset ds;
    ds.rows = random_rows(gen, 50, 5, -10.0, 10.0);
    const auto p = fit_normalization(ds);
    for (std::size_t c = 0; c < 5; ++c) {
        const auto stats = oracle_column_stats(ds.rows, c);
        CHECK(p.mins[c] == stats.min);
        CHECK(p.maxs[c] == stats.max);
    }

    Dataset shuffled = ds;
    std::shuffle(shuffled.rows.begin(), shuffled.rows.end(), gen);
    CHECK(fit_normalization(shuffled) == p);
}

TEST_CASE("fit_normalization rejects an empty dataset") {
    CHECK_THROWS_AS(fit_normalization(Dataset{}), DataError);
}

TEST_CASE("normalize endpoints and degenerate features") {
    Dataset ds;
    ds.rows = {{0, 7}, {255, 7}};
    const auto p = fit_normalization(ds);
    const auto norm = normalize(ds, p);
    CHECK(norm.rows[1][0] == 1.0);
    CHECK(norm.rows[0][0] == 0.0);
    CHECK(norm.rows[0][1] == 0.0);  // degenerate feature maps to 0
    CHECK(norm.rows[1][1] == 0.0);
}

TEST_CASE("denormalize endpoints and degenerate features") {
    NormalizationParams p;
    p.mins = {0};
    p.maxs = {255};
    p.degenerate = {false};
    CHECK(denormalize({1.0}, p) == std::vector<double>{255.0});

    NormalizationParams q;
    q.mins = {7};
    q.maxs = {7};
    q.degenerate = {true};
    CHECK(denormalize({0.0}, q) == std::vector<double>{7.0});
    CHECK(denormalize({0.42}, q) == std::vector<double>{7.0});
}

TEST_CASE("normalize/denormalize round-trips within 1e-9") {
    std::mt19937 gen(12);
    Dataset ds;
    ds.rows = random_rows(gen, 40, 6, -100.0, 100.0);
    const auto p = fit_normalization(ds);
    const auto norm = normalize(ds, p);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (const double v : norm.rows[i]) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        const auto back = denormalize(norm.rows[i], p);
        for (std::size_t c = 0; c < ds.dim(); ++c) {
            CHECK(approx_rel(back[c], ds.rows[i][c], 1e-9));
        }
        // The other composition order on already-normalized vectors.
        const auto there = normalize_vector(denormalize(norm.rows[i], p), p);
        for (std::size_t c = 0; c < ds.dim(); ++c) {
            CHECK(approx_rel(there[c], norm.rows[i][c], 1e-9));
        }
    }
}

TEST_CASE("normalize passes labels through and rejects bad dimensions") {
    Dataset ds;
    ds.rows = {{1, 2}, {3, 4}};
    ds.labels = {"a", "b"};
    const auto p = fit_normalization(ds);
    CHECK(normalize(ds, p).labels == ds.labels);

    NormalizationParams wrong;
    wrong.mins = {0};
    wrong.maxs = {1};
    wrong.degenerate = {false};
    CHECK_THROWS_AS(normalize(ds, wrong), DataError);
    CHECK_THROWS_AS(denormalize({1, 2, 3}, wrong), DataError);
}

TEST_CASE("summarize two-point and constant columns") {
    Dataset ds;
    ds.rows = {{1, 5}, {3, 5}};
    const auto stats = summarize(ds);
    CHECK(stats[0].min == 1);
    CHECK(stats[0].max == 3);
    CHECK(stats[0].mean == doctest::Approx(2.0));
    CHECK(stats[0].stddev == doctest::Approx(1.0));  // population convention
    CHECK(stats[1].stddev == 0.0);
}

TEST_CASE("summarize matches the two-pass oracle on random data") {
    std::mt19937 gen(13);
    Dataset ds;
    ds.rows = random_rows(gen, 64, 4, -3.0, 9.0);
    const auto stats = summarize(ds);
    for (std::size_t c = 0; c < 4; ++c) {
        const auto want = oracle_column_stats(ds.rows, c);
        CHECK(approx_rel(stats[c].min, want.min, 1e-12));
        CHECK(approx_rel(stats[c].max, want.max, 1e-12));
        CHECK(approx_rel(stats[c].mean, want.mean, 1e-12));
        CHECK(approx_rel(stats[c].stddev, want.stddev, 1e-12));
    }
    CHECK_THROWS_AS(summarize(Dataset{}), DataError);
}

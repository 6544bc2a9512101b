#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "bnsl/dataset.hpp"
#include "bnsl/simulate.hpp"
#include "../support/oracles.hpp"

using namespace bnsl;

namespace {

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "bnsl_unit";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
    auto path = scratch(name);
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("csv without header") {
    const auto d = load_csv(write_file("three.csv", "a,x\nb,x\na,y\n"), false);
    CHECK(d.n() == 3);
    CHECK(d.p() == 2);
    CHECK(d.cardinality(0) == 2);
    CHECK(d.cardinality(1) == 2);
    // lexicographic levels
    CHECK(d.column(0)[0] == 0);
    CHECK(d.column(0)[1] == 1);
    CHECK(d.column(1)[2] == 1);
}

TEST_CASE("constant column is rejected") {
    const auto path = write_file("const.csv", "a,b\n0,1\n0,2\n0,1\n");
    try {
        load_csv(path, true);
        FAIL("expected DataError");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("degenerate variable") != std::string::npos);
    }
}

TEST_CASE("missing file is a data error") {
    CHECK_THROWS_AS(load_csv(scratch("does_not_exist.csv"), true), DataError);
}

TEST_CASE("ragged rows are a data error") {
    CHECK_THROWS_AS(load_csv(write_file("ragged.csv", "a,b\n0,1\n1\n"), true), DataError);
}

TEST_CASE("sampled asia round-trips through csv") {
    const auto bn = builtin_net("asia");
    const auto d = sample(bn, 25000, 7);
    const auto path = scratch("asia.csv");
    write_csv(d, path);
    const auto back = load_csv(path, true);
    CHECK(back.n() == 25000);
    CHECK(back.p() == 8);
    for (int v = 0; v < 8; ++v) {
        CHECK(back.cardinality(v) == 2);
        CHECK(std::equal(d.column(v).begin(), d.column(v).end(), back.column(v).begin()));
    }
}

TEST_CASE("count with no variables is a single cell") {
    const auto d = load_csv(write_file("three2.csv", "a,x\nb,x\na,y\n"), false);
    const auto t = count(d, {});
    REQUIRE(t.cells.size() == 1);
    CHECK(t.cells[0] == 3);
}

TEST_CASE("count of one column") {
    const auto d = load_csv(write_file("three3.csv", "a,x\nb,x\na,y\n"), false);
    const int v[] = {0};
    const auto t = count(d, v);
    REQUIRE(t.cells.size() == 2);
    CHECK(t.cells[0] == 2);
    CHECK(t.cells[1] == 1);
}

TEST_CASE("count matches a row scan") {
    const auto d = oracle::random_data(6, 500, 2, 3);
    const std::vector<int> vars{1, 3, 5};
    const auto t = count(d, vars);
    CHECK(t.total == 500);
    oracle::each_config(d, vars, [&](const std::vector<int>& x) {
        CHECK(t.cells[t.index(x)] == oracle::count_rows(d, vars, x));
    });
}

TEST_CASE("marginalize sums out a variable") {
    const auto d = oracle::random_data(4, 300, 3, 4);
    const std::vector<int> vars{0, 2, 3};
    const auto t = count(d, vars).marginalize(1);
    const std::vector<int> kept{0, 3};
    CHECK(t.variables == kept);
    oracle::each_config(d, kept, [&](const std::vector<int>& x) {
        CHECK(t.cells[t.index(x)] == oracle::count_rows(d, kept, x));
    });
}

TEST_CASE("count rejects bad variable lists") {
    const auto d = oracle::random_data(3, 50, 2, 5);
    const int dup[] = {0, 0};
    const int bad[] = {0, 7};
    CHECK_THROWS_AS(count(d, dup), std::invalid_argument);
    CHECK_THROWS_AS(count(d, bad), std::invalid_argument);
    const int all[] = {0, 1, 2};
    CHECK_THROWS_AS(count(d, all, 4), CellBudgetExceeded);
}

TEST_CASE("permuted reorders columns") {
    const auto d = oracle::random_data(4, 40, 3, 6);
    const int perm[] = {2, 0, 3, 1};
    const auto q = d.permuted(perm);
    for (int k = 0; k < 4; ++k) {
        CHECK(q.cardinality(k) == d.cardinality(perm[k]));
        CHECK(std::equal(q.column(k).begin(), q.column(k).end(), d.column(perm[k]).begin()));
    }
}

#include "resrec/matrix.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace resrec;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    ExactMatrix m(static_cast<int>(rows.size()),
                  rows.empty() ? 0 : static_cast<int>(rows.front().size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    return m;
}

// Independent oracle for small determinants: cofactor expansion along row 0.
BigInt det_cofactor(const ExactMatrix& m) {
    const int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    BigInt acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        ExactMatrix sub = m.with_deleted({1}, {j + 1});
        BigInt term = m(0, j) * det_cofactor(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST_CASE("determinants of the worked matrices") {
    ExactMatrix d4 = from_rows({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
    CHECK(det_fraction_free(d4) == 5);

    ExactMatrix path6 = from_rows({{1, -1, 0, 0, 0, 0},
                                   {-1, 2, -1, 0, 0, 0},
                                   {0, -1, 2, -1, 0, 0},
                                   {0, 0, -1, 2, -1, 0},
                                   {0, 0, 0, -1, 2, -1},
                                   {0, 0, 0, 0, -1, 1}});
    CHECK(det_fraction_free(path6) == 0);

    ExactMatrix k4_minor = from_rows({{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}});
    CHECK(det_fraction_free(k4_minor) == 16);

    CHECK(det_fraction_free(ExactMatrix(0, 0)) == 1);
}

TEST_CASE("fraction-free determinant equals cofactor expansion on random matrices") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> size(1, 6);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int i = 0; i < 250; ++i) {
        int n = size(rng);
        ExactMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = entry(rng);
        CHECK(det_fraction_free(m) == det_cofactor(m));
    }
}

TEST_CASE("determinant rejects non-square input") {
    CHECK_THROWS_WITH(det_fraction_free(ExactMatrix(2, 3)),
                      Catch::Matchers::ContainsSubstring("square"));
}

TEST_CASE("row/column deletion") {
    ExactMatrix m = from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    SECTION("empty deletion is the identity") { CHECK(m.with_deleted({}, {}) == m); }
    SECTION("order preserved") {
        ExactMatrix got = m.with_deleted({2}, {1, 3});
        ExactMatrix want = from_rows({{2}, {8}});
        CHECK(got == want);
    }
    SECTION("errors") {
        CHECK_THROWS_WITH(m.with_deleted({0}, {}), Catch::Matchers::ContainsSubstring("out of range"));
        CHECK_THROWS_WITH(m.with_deleted({4}, {}), Catch::Matchers::ContainsSubstring("out of range"));
        CHECK_THROWS_WITH(m.with_deleted({2, 2}, {}), Catch::Matchers::ContainsSubstring("duplicate"));
    }
}

TEST_CASE("pivoting handles zero leading minors") {
    ExactMatrix m = from_rows({{0, 1}, {1, 0}});
    CHECK(det_fraction_free(m) == -1);
    ExactMatrix z = from_rows({{0, 0}, {1, 2}});
    CHECK(det_fraction_free(z) == 0);
}

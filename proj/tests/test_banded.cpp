#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "leland/banded.hpp"
#include "support/dense.hpp"

using namespace leland;
using testsupport::dense_apply;
using testsupport::dense_solve;
using testsupport::from_banded;

namespace {

BandedMatrix random_banded(std::size_t n, std::size_t hb, unsigned seed,
                           double diag_boost = 0.0) {
    BandedMatrix m(n, hb);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = (i >= hb ? i - hb : 0); j <= std::min(n - 1, i + hb); ++j)
            m.set(i, j, dist(rng) + (i == j ? diag_boost : 0.0));
    return m;
}

std::vector<double> random_vector(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("banded storage get/set semantics") {
    BandedMatrix m(5, 1);
    m.set(2, 1, 3.0);
    m.add(2, 1, 0.5);
    CHECK(m.at(2, 1) == 3.5);
    CHECK(m.at(2, 2) == 0.0);
    CHECK(m.at(0, 4) == 0.0);  // inside the matrix, outside the band
    CHECK(m.max_abs() == 3.5);
    CHECK_THROWS_AS(m.at(5, 0), std::out_of_range);
    CHECK_THROWS_AS(m.set(0, 2, 1.0), std::out_of_range);  // off-band write
    CHECK_THROWS_AS(m.add(4, 2, 1.0), std::out_of_range);
}

TEST_CASE("banded apply matches dense multiply") {
    for (std::size_t hb : {1u, 2u}) {
        const BandedMatrix m = random_banded(15, hb, 7 + static_cast<unsigned>(hb));
        const auto x = random_vector(15, 99);
        const auto got = leland::apply(m, x);
        const auto want = dense_apply(from_banded(m), x);
        CHECK(testsupport::max_abs_diff(got, want) < 1e-13);
    }
}

TEST_CASE("apply rejects mismatched dimensions") {
    const BandedMatrix m = random_banded(6, 1, 3);
    CHECK_THROWS_AS(leland::apply(m, std::vector<double>(5)), std::invalid_argument);
}

TEST_CASE("LU solve matches dense elimination") {
    for (std::size_t hb : {1u, 2u, 3u}) {
        for (std::size_t n : {4u, 11u, 20u}) {
            CAPTURE(hb);
            CAPTURE(n);
            const BandedMatrix m = random_banded(n, hb, 11 * static_cast<unsigned>(n + hb), 4.0);
            const auto b = random_vector(n, 5);
            const auto got = BandedLU(m).solve(b);
            const auto want = dense_solve(from_banded(m), b);
            CHECK(testsupport::max_abs_diff(got, want) < 1e-11);
        }
    }
}

TEST_CASE("LU handles matrices that need pivoting") {
    // zero diagonal entry: elimination without row swaps would divide by zero
    BandedMatrix m(4, 1);
    m.set(0, 0, 0.0);
    m.set(0, 1, 2.0);
    m.set(1, 0, 1.0);
    m.set(1, 1, 1.0);
    m.set(1, 2, -1.0);
    m.set(2, 1, 3.0);
    m.set(2, 2, 1.5);
    m.set(2, 3, 1.0);
    m.set(3, 2, 1.0);
    m.set(3, 3, 2.0);
    const std::vector<double> b = {2.0, 1.0, 4.5, 5.0};
    const auto got = BandedLU(m).solve(b);
    const auto want = dense_solve(from_banded(m), b);
    CHECK(testsupport::max_abs_diff(got, want) < 1e-12);

    // a row-swapped dominant tridiagonal: well conditioned, but every even
    // column starts with the small entry on the diagonal
    const std::size_t n = 12;
    BandedMatrix sw(n, 2);
    auto src_entry = [](std::size_t i, std::size_t j) -> double {
        if (i == j) return 4.0;
        if (i + 1 == j || j + 1 == i) return -1.0;
        return 0.0;
    };
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t source = (r % 2 == 0) ? r + 1 : r - 1;  // swap row pairs
        for (std::size_t j = (source >= 1 ? source - 1 : 0); j <= std::min(n - 1, source + 1);
             ++j)
            sw.set(r, j, src_entry(source, j));
    }
    const auto rb = random_vector(n, 50);
    const auto g = BandedLU(sw).solve(rb);
    const auto w = dense_solve(from_banded(sw), rb);
    CHECK(testsupport::max_abs_diff(g, w) < 1e-10);
}

TEST_CASE("solving then multiplying returns the right-hand side") {
    const BandedMatrix m = random_banded(16, 2, 23, 3.0);
    const auto b = random_vector(16, 8);
    const auto x = solve_banded(m, b);
    const auto back = leland::apply(m, x);
    CHECK(testsupport::max_abs_diff(back, b) < 1e-10);
}

TEST_CASE("identity solve is exact") {
    BandedMatrix eye(7, 1);
    for (std::size_t i = 0; i < 7; ++i) eye.set(i, i, 1.0);
    const auto b = random_vector(7, 77);
    const auto x = solve_banded(eye, b);
    for (std::size_t i = 0; i < 7; ++i) CHECK(x[i] == b[i]);
}

TEST_CASE("singular matrix is rejected") {
    BandedMatrix m(3, 1);
    m.set(0, 0, 1.0);
    m.set(0, 1, 2.0);
    m.set(1, 0, 2.0);
    m.set(1, 1, 4.0);  // row 1 = 2 x row 0, singular
    m.set(2, 2, 1.0);
    CHECK_THROWS_AS(BandedLU{m}, std::runtime_error);

    BandedMatrix z(3, 1);  // all zeros
    CHECK_THROWS_AS(BandedLU{z}, std::runtime_error);
}

TEST_CASE("solve rejects mismatched right-hand side") {
    const BandedMatrix m = random_banded(6, 1, 13, 4.0);
    const BandedLU lu(m);
    CHECK_THROWS_AS(lu.solve(std::vector<double>(7)), std::invalid_argument);
}

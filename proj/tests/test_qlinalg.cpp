#include <doctest.h>

#include "germlab/qlinalg.hpp"

using namespace germlab;

namespace {
QMat mat(const std::vector<std::vector<long>>& rows) {
    QMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.at(r, c) = rows[r][c];
    return m;
}
} // namespace

TEST_CASE("rank, kernel, solve") {
    QMat a = mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(a.rank() == 2);
    QMat k = a.kernel();
    CHECK(k.cols() == 1);
    CHECK((a * k).is_zero());

    QMat b = mat({{6}, {12}, {2}});
    auto x = a.solve(b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);

    QMat inconsistent = mat({{1}, {0}, {0}});
    CHECK(!a.solve(inconsistent).has_value());
}

TEST_CASE("inverse and powers") {
    QMat a = mat({{2, 1}, {1, 1}});
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK(a * *inv == QMat::identity(2));
    CHECK(a.pow(3) == a * a * a);
    CHECK(!mat({{1, 2}, {2, 4}}).inverse().has_value());
}

TEST_CASE("complement_in extends a span") {
    QMat small = mat({{1}, {0}, {0}});
    QMat big = mat({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    QMat c = complement_in(small, big);
    CHECK(c.cols() == 2);
    CHECK(span_dim(small.hcat(c)) == 3);
}

TEST_CASE("characteristic polynomial (Faddeev-LeVerrier)") {
    QMat a = mat({{0, -1}, {1, 1}}); // companion of s^2 - s + 1
    std::vector<Rational> cp = char_poly(a);
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == 1);
    CHECK(cp[1] == -1);
    CHECK(cp[2] == 1);
    CHECK(eval_poly(cp, a).is_zero()); // Cayley-Hamilton
}

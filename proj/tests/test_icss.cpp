#include <doctest.h>

#include "germlab/models.hpp"

using namespace germlab;

namespace {

QMat mat(const std::vector<std::vector<long>>& rows) {
    QMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.at(r, c) = rows[r][c];
    return m;
}

int entry_dim(const Page& p, int i, int j) {
    auto it = p.entries.find({i, j});
    return it == p.entries.end() ? 0 : it->second;
}

} // namespace

TEST_CASE("alternating part of two swapped points") {
    EquivariantComplex c = two_copy_swap_complex({1});
    EmbeddedComplex alt = alternating_part(c);
    REQUIRE(alt.dims.size() == 1);
    CHECK(alt.dims[0] == 1); // span of (1, -1)
}

TEST_CASE("trivial action has no alternating part") {
    EquivariantComplex c;
    c.k = 2;
    c.dims = {3};
    c.action.push_back({QMat::identity(3)});
    EmbeddedComplex alt = alternating_part(c);
    CHECK(alt.dims[0] == 0);
}

TEST_CASE("diagonal stalks have no alternating part") {
    // one point fixed by the transposition: the fat-diagonal stalk
    EquivariantComplex c;
    c.k = 2;
    c.dims = {1};
    c.action.push_back({QMat::identity(1)});
    CHECK(alternating_part(c).dims[0] == 0);
}

TEST_CASE("alternating projectors are idempotent and commute with d") {
    // two swapped copies of a two-cell interval model
    EquivariantComplex c;
    c.k = 2;
    c.dims = {4, 2};
    c.d.push_back(mat({{1, -1, 0, 0}, {0, 0, 1, -1}}));
    QMat s0(4, 4), s1(2, 2);
    s0.at(0, 2) = s0.at(2, 0) = s0.at(1, 3) = s0.at(3, 1) = 1;
    s1.at(0, 1) = s1.at(1, 0) = 1;
    c.action.push_back({s0, s1});
    auto proj = alternating_projectors(c);
    for (size_t i = 0; i < proj.size(); ++i)
        CHECK(proj[i] * proj[i] == proj[i]);
    CHECK(proj[1] * c.d[0] == c.d[0] * proj[0]);
    CHECK_NOTHROW(alternating_part(c));
}

TEST_CASE("alternating part rejects k > 6") {
    EquivariantComplex c;
    c.k = 7;
    c.dims = {1};
    for (int t = 0; t < 6; ++t)
        c.action.push_back({QMat::identity(1)});
    CHECK_THROWS(alternating_part(c));
}

TEST_CASE("validation rejects broken actions") {
    EquivariantComplex c;
    c.k = 2;
    c.dims = {2};
    c.action.push_back({mat({{1, 1}, {0, 1}})}); // not an involution
    CHECK_THROWS(c.validate());

    EquivariantComplex nc;
    nc.k = 2;
    nc.dims = {2, 2};
    nc.d.push_back(mat({{1, 0}, {0, 0}}));
    QMat swap = mat({{0, 1}, {1, 0}});
    nc.action.push_back({swap, QMat::identity(2)}); // does not commute with d
    CHECK_THROWS(nc.validate());
}

TEST_CASE("bi-germ model of xy: collapse at page one and the suspension") {
    ICSSModel m = bigerm_pair_model({1, 1}, false); // circle fiber
    IcssResult res = run_icss(m);
    CHECK(res.total_betti == std::vector<int>{0, 0, 1});
    REQUIRE(!res.pages.empty());
    const Page& e1 = res.pages.front();
    CHECK(entry_dim(e1, 1, 1) == 1);
    CHECK(entry_dim(e1, 0, 1) == 0);
    CHECK(entry_dim(e1, -1, 1) == 0);
    // single column: E_1 = E_infty
    const Page& last = res.pages.back();
    CHECK(e1.entries == last.entries);
    // E_1 entries sit inside the declared window [kn-(k-1)p-d, kn-(k-1)p] = [1,1]
    for (const auto& [ij, dim] : e1.entries)
        if (dim > 0)
            CHECK(ij.first == 1);
}

TEST_CASE("bi-germ model of x^2+y^3: two vanishing spheres") {
    ICSSModel m = bigerm_pair_model({1, 2}, false);
    IcssResult res = run_icss(m);
    CHECK(res.total_betti == std::vector<int>{0, 0, 2});
}

TEST_CASE("trivial family model has no vanishing cohomology") {
    ICSSModel m;
    m.k_max = 2;
    IcssColumn col;
    col.k = 2;
    col.fiber = two_copy_swap_complex({1, 1});
    col.total = col.fiber; // fiber = total, inclusion = identity
    for (int dim : col.fiber.dims)
        col.restriction.push_back(QMat::identity(static_cast<size_t>(dim)));
    m.columns.push_back(col);
    IcssResult res = run_icss(m);
    for (int b : res.total_betti)
        CHECK(b == 0);
}

TEST_CASE("totals are invariant under subdividing the fiber model") {
    // circle as two vertices and two edges, doubled with the swap action
    EquivariantComplex fiber;
    fiber.k = 2;
    fiber.dims = {4, 4};
    QMat d0(4, 4);
    // per copy: d(f)(e) = f(head) - f(tail) on a two-cell circle
    for (int copy = 0; copy < 2; ++copy) {
        int o = 2 * copy;
        d0.at(o, o) = 1;
        d0.at(o, o + 1) = -1;
        d0.at(o + 1, o) = -1;
        d0.at(o + 1, o + 1) = 1;
    }
    fiber.d.push_back(d0);
    QMat s(4, 4);
    s.at(0, 2) = s.at(2, 0) = 1;
    s.at(1, 3) = s.at(3, 1) = 1;
    fiber.action.push_back({s, s});
    ICSSModel m;
    m.k_max = 2;
    IcssColumn col;
    col.k = 2;
    col.fiber = fiber;
    m.columns.push_back(col);
    IcssResult res = run_icss(m);
    CHECK(res.total_betti == std::vector<int>{0, 0, 1}); // same as the formal model
}

TEST_CASE("page dimensions monotone nonincreasing across pages") {
    ICSSModel m = bigerm_pair_model({1, 3, 2}, false);
    IcssResult res = run_icss(m);
    for (size_t pi = 1; pi < res.pages.size(); ++pi)
        for (const auto& [ij, dim] : res.pages[pi].entries) {
            int before = entry_dim(res.pages[pi - 1], ij.first, ij.second);
            CHECK(dim <= before);
        }
}

TEST_CASE("augmented exactness on the transverse double point") {
    AbsoluteIcssModel m = transverse_double_point_absolute_model();
    CHECK(check_augmented_exactness(m, {1}));
}

TEST_CASE("augmented exactness of the xy bi-germ at nonzero parameter") {
    AbsoluteIcssModel m = bigerm_absolute_model({1, 1});
    CHECK(check_augmented_exactness(m, {1, 0, 1})); // suspension of the circle
    CHECK(!check_augmented_exactness(m, {1, 1, 1}));
}

TEST_CASE("corrupted differential fails the exactness check") {
    AbsoluteIcssModel m = bigerm_absolute_model({1, 1});
    for (auto& f : m.face_maps)
        for (auto& mat_ : f.fiber)
            mat_ = QMat::zero(mat_.rows(), mat_.cols());
    CHECK(!check_augmented_exactness(m, {1, 0, 1}));
}

TEST_CASE("k-two alternating cohomology matches the single-copy model") {
    // dim Alt H^0(M u M) with the swap equals dim H^0(M)
    for (std::vector<int> betti : {std::vector<int>{1}, {1, 1}, {1, 2, 1}}) {
        EquivariantComplex c = two_copy_swap_complex(betti);
        EmbeddedComplex alt = alternating_part(c);
        for (size_t i = 0; i < betti.size(); ++i)
            CHECK(alt.dims[i] == betti[i]);
    }
}

TEST_CASE("two-column model: bounds combine along the antidiagonal") {
    ICSSModel m;
    m.k_max = 3;
    IcssColumn c2;
    c2.k = 2;
    c2.fiber = two_copy_swap_complex({1, 0, 1}); // Alt H^2 = 1
    for (int dim : c2.fiber.dims)
        c2.fiber_monodromy.push_back(QMat::identity(static_cast<size_t>(dim)));
    m.columns.push_back(c2);
    // k = 3: six swapped copies along the regular orbit, degrees 0 and 1
    IcssColumn c3;
    c3.k = 3;
    c3.fiber.k = 3;
    c3.fiber.dims = {6, 6};
    c3.fiber.d.push_back(QMat::zero(6, 6));
    auto perm6 = [&](std::vector<int> images) {
        QMat p(6, 6);
        for (int i = 0; i < 6; ++i)
            p.at(static_cast<size_t>(images[static_cast<size_t>(i)]),
                 static_cast<size_t>(i)) = 1;
        return p;
    };
    // left-regular representation of S_3, generators (12), (23)
    // element order: e, (12), (13), (23), (123), (132)
    QMat s12 = perm6({1, 0, 5, 4, 3, 2});
    QMat s23 = perm6({3, 5, 4, 0, 2, 1});
    c3.fiber.action.push_back({s12, s12});
    c3.fiber.action.push_back({s23, s23});
    for (int dim : c3.fiber.dims)
        c3.fiber_monodromy.push_back(QMat::identity(static_cast<size_t>(dim)));
    m.columns.push_back(c3);

    IcssMonodromyReport rep = propagate_icss_monodromy(m);
    // column k=2 contributes at l = 1 + 2 = 3; column k=3 at l = 1 + 2 = 3
    REQUIRE(rep.icss.total_betti.size() >= 4);
    CHECK(rep.icss.total_betti[3] == 2);
    const DegreeMonodromy& d3 = rep.degrees[3];
    CHECK(!d3.exact);
    CHECK(d3.j_upper == 2); // cm2 sum of two J = 1 entries
    CHECK(d3.j_lower == 1);
}

TEST_CASE("single-column monodromy is exact") {
    ICSSModel m = bigerm_pair_model({1, 1}, true);
    IcssMonodromyReport rep = propagate_icss_monodromy(m);
    REQUIRE(rep.degrees.size() >= 3);
    const DegreeMonodromy& d2 = rep.degrees[2];
    CHECK(d2.exact);
    REQUIRE(d2.exact_data.has_value());
    JordanModule expected;
    expected.add({1, 0}, 1, 1);
    CHECK(*d2.exact_data == expected);
}

TEST_CASE("non-root-of-unity monodromy is rejected") {
    ICSSModel m = bigerm_pair_model({1, 1}, true);
    // scale the degree-1 monodromy: eigenvalue 2 is not a root of unity
    m.columns[0].fiber_monodromy[1] = QMat::identity(2) * Rational(2);
    CHECK_THROWS_AS(propagate_icss_monodromy(m), NonCyclotomicError);
}

#include <doctest.h>

#include "germlab/monodromy.hpp"

#include <numeric>
#include <random>

using namespace germlab;

namespace {

QMat mat(const std::vector<std::vector<long>>& rows) {
    QMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.at(r, c) = rows[r][c];
    return m;
}

QMat companion(const qpoly::Poly& p) {
    size_t n = static_cast<size_t>(qpoly::degree(p));
    QMat m(n, n);
    for (size_t i = 1; i < n; ++i)
        m.at(i, i - 1) = 1;
    for (size_t i = 0; i < n; ++i)
        m.at(i, n - 1) = -p[i] / p[n];
    return m;
}

struct RandomModule {
    QMat h;
    JordanModule data;
};

// direct sum of companion blocks of Phi_m^a, conjugated by a random
// invertible matrix: Jordan data known by construction
RandomModule random_module(std::mt19937& rng, int max_factors = 2, int max_size = 3) {
    static const long orders[] = {1, 2, 3, 4, 6};
    std::uniform_int_distribution<int> dfac(1, max_factors), dsize(1, max_size), dord(0, 4);
    RandomModule out;
    std::vector<QMat> blocks;
    int nfac = dfac(rng);
    for (int f = 0; f < nfac; ++f) {
        long m = orders[dord(rng)];
        int a = dsize(rng);
        qpoly::Poly phi = cyclotomic(m);
        qpoly::Poly power{Rational(1)};
        for (int i = 0; i < a; ++i)
            power = qpoly::mul(power, phi);
        blocks.push_back(companion(power));
        for (long e = 0; e < m; ++e) {
            if (m == 1 && e != 0)
                continue;
            if (m > 1 && std::gcd(e, m) != 1)
                continue;
            out.data.add({m, e}, a, 1);
        }
    }
    size_t dim = 0;
    for (const auto& b : blocks)
        dim += b.rows();
    QMat h(dim, dim);
    size_t off = 0;
    for (const auto& b : blocks) {
        for (size_t r = 0; r < b.rows(); ++r)
            for (size_t c = 0; c < b.cols(); ++c)
                h.at(off + r, off + c) = b.at(r, c);
        off += b.rows();
    }
    // random conjugation
    std::uniform_int_distribution<int> dent(-2, 2);
    while (true) {
        QMat g(dim, dim);
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c)
                g.at(r, c) = dent(rng);
        auto gi = g.inverse();
        if (!gi)
            continue;
        out.h = g * h * *gi;
        return out;
    }
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == qpoly::Poly{-1, 1});
    CHECK(cyclotomic(2) == qpoly::Poly{1, 1});
    CHECK(cyclotomic(6) == qpoly::Poly{1, -1, 1}); // s^2 - s + 1
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    // product over divisors reassembles s^m - 1
    for (long m : {4L, 6L, 12L}) {
        qpoly::Poly prod{Rational(1)};
        for (long d = 1; d <= m; ++d)
            if (m % d == 0)
                prod = qpoly::mul(prod, cyclotomic(d));
        qpoly::Poly want(static_cast<size_t>(m) + 1, Rational(0));
        want[0] = -1;
        want[static_cast<size_t>(m)] = 1;
        CHECK(prod == want);
    }
}

TEST_CASE("jordan_data on the spec fixtures") {
    JordanModule id3 = jordan_data(QMat::identity(3));
    CHECK(id3.support() == std::set<Eigenvalue>{{1, 0}});
    CHECK(id3.max_block_size() == 1);
    CHECK(id3.dimension() == 3);

    // single Jordan block of size 2 at eigenvalue 1
    JordanModule block2 = jordan_data(mat({{1, 1}, {0, 1}}));
    CHECK(block2.max_block_size() == 2);
    CHECK(block2.support() == std::set<Eigenvalue>{{1, 0}});

    // companion of Phi_6: both primitive sixth roots, J = 1
    JordanModule phi6 = jordan_data(companion(cyclotomic(6)));
    CHECK(phi6.support() == std::set<Eigenvalue>{{6, 1}, {6, 5}});
    CHECK(phi6.max_block_size() == 1);
}

TEST_CASE("jordan_data rejects bad inputs") {
    CHECK_THROWS_AS(jordan_data(mat({{2}})), NonCyclotomicError);
    CHECK_THROWS_AS(jordan_data(mat({{1, 0}, {0, 0}})), std::invalid_argument); // singular
}

TEST_CASE("supp and J of direct sums") {
    JordanModule a, b;
    a.add({1, 0}, 2, 1);
    b.add({2, 1}, 1, 1);
    JordanModule s = a.direct_sum(b);
    CHECK(s.support() == std::set<Eigenvalue>{{1, 0}, {2, 1}});
    CHECK(s.max_block_size() == 2);
    JordanModule zero;
    CHECK(zero.max_block_size() == 0);
    CHECK(zero.support().empty());
}

TEST_CASE("jordan_data is conjugation invariant (seeded suite)") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 50; ++trial) {
        RandomModule m = random_module(rng);
        JordanModule got = jordan_data(m.h);
        CHECK(got == m.data);
    }
}

TEST_CASE("root-of-unity certificate for accepted matrices") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        RandomModule m = random_module(rng);
        long order_lcm = 1;
        for (const auto& ev : jordan_data(m.h).support())
            order_lcm = std::lcm(order_lcm, ev.order);
        QMat nilp = m.h.pow(static_cast<unsigned>(order_lcm)) -
                    QMat::identity(m.h.rows());
        CHECK(nilp.pow(static_cast<unsigned>(m.h.rows())).is_zero());
    }
}

TEST_CASE("cm1 trivial cases") {
    QMat h = companion(cyclotomic(4)); // J = 1 on a 2-dim module
    QMat zero22 = QMat::zero(2, 2);
    Cm1Report rep = check_cm1(zero22, zero22, h, h, h);
    CHECK(rep.ok());
    CHECK(rep.subquotient == rep.middle);

    // B = one block of size 2 at eigenvalue 1, u includes the eigenline, v = 0
    QMat b = mat({{1, 1}, {0, 1}});
    QMat u(2, 2);
    u.at(0, 0) = 1; // image = eigenline
    Cm1Report rep2 = check_cm1(u, zero22, QMat::identity(2), b, QMat::identity(2));
    CHECK(rep2.ok());
    CHECK(rep2.subquotient.max_block_size() == 1);
    CHECK(rep2.middle.max_block_size() == 2);
}

TEST_CASE("cm1 validates its inputs") {
    QMat h = QMat::identity(2);
    QMat u = mat({{1, 0}, {0, 1}});
    CHECK_THROWS(check_cm1(u, u, h, h, h)); // v o u != 0
    QMat hb = mat({{0, -1}, {1, 0}});
    CHECK_THROWS(check_cm1(u, QMat::zero(2, 2), h, hb, h)); // u not equivariant
}

TEST_CASE("cm2 exactness bounds: tight and split cases") {
    // A = C = block(1,1), B = block(1,2): 2 <= J(B) <= 2
    QMat one = QMat::identity(1);
    QMat b = mat({{1, 1}, {0, 1}});
    QMat i(2, 1);
    i.at(0, 0) = 1;
    QMat p(1, 2);
    p.at(0, 1) = 1;
    Cm2Report rep = check_cm2(i, p, one, b, one);
    CHECK(rep.ok());
    CHECK(rep.b.max_block_size() == 2);

    // split B = A + C: lower bound tight
    QMat hsplit = mat({{1, 0}, {0, -1}});
    QMat hc = mat({{-1}});
    QMat psplit(1, 2);
    psplit.at(0, 1) = 1;
    Cm2Report rep2 = check_cm2(i, psplit, one, hsplit, hc);
    CHECK(rep2.ok());
    CHECK(rep2.b.max_block_size() == 1);
}

TEST_CASE("cm1 randomized suite (200 seeded cases)") {
    std::mt19937 rng(20260810);
    int done = 0;
    while (done < 200) {
        RandomModule m = random_module(rng, 3, 3);
        // split the characteristic polynomial into two factors
        std::vector<Rational> cp = char_poly(m.h);
        qpoly::Poly c(cp.begin(), cp.end());
        qpoly::trim(c);
        // u = c1(h), v = c2(h) with c = c1 c2: v o u = c(h) = 0 (Cayley-Hamilton)
        qpoly::Poly c1{Rational(1)}, c2{Rational(1)};
        bool toggle = false;
        for (long mm : {1L, 2L, 3L, 4L, 6L}) {
            qpoly::Poly phi = cyclotomic(mm);
            while (qpoly::divides(phi, c)) {
                c = qpoly::divmod(c, phi).first;
                (toggle ? c1 : c2) = qpoly::mul(toggle ? c1 : c2, phi);
                toggle = !toggle;
            }
        }
        REQUIRE(qpoly::degree(c) == 0);
        std::vector<Rational> c1v(c1.begin(), c1.end()), c2v(c2.begin(), c2.end());
        QMat u = eval_poly(c1v, m.h);
        QMat v = eval_poly(c2v, m.h);
        Cm1Report rep = check_cm1(u, v, m.h, m.h, m.h);
        CHECK(rep.ok());
        ++done;
    }
}

TEST_CASE("cm2 randomized suite (200 seeded cases)") {
    std::mt19937 rng(20260811);
    std::uniform_int_distribution<int> dent(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        RandomModule a = random_module(rng, 2, 2);
        RandomModule c = random_module(rng, 2, 2);
        size_t da = a.h.rows(), dc = c.h.rows();
        QMat x(da, dc);
        for (size_t r = 0; r < da; ++r)
            for (size_t cc = 0; cc < dc; ++cc)
                x.at(r, cc) = dent(rng);
        // extension of C by A
        QMat hb(da + dc, da + dc);
        for (size_t r = 0; r < da; ++r)
            for (size_t cc = 0; cc < da; ++cc)
                hb.at(r, cc) = a.h.at(r, cc);
        for (size_t r = 0; r < da; ++r)
            for (size_t cc = 0; cc < dc; ++cc)
                hb.at(r, da + cc) = x.at(r, cc);
        for (size_t r = 0; r < dc; ++r)
            for (size_t cc = 0; cc < dc; ++cc)
                hb.at(da + r, da + cc) = c.h.at(r, cc);
        QMat i(da + dc, da);
        for (size_t r = 0; r < da; ++r)
            i.at(r, r) = 1;
        QMat p(dc, da + dc);
        for (size_t r = 0; r < dc; ++r)
            p.at(r, da + r) = 1;
        Cm2Report rep = check_cm2(i, p, a.h, hb, c.h);
        CHECK(rep.ok());
    }
}

TEST_CASE("monodromy bound formulas") {
    for (int ell = 1; ell <= 10; ++ell) {
        MonodromyBoundsReport rep = monodromy_bounds(2, 4, ell, false);
        // independent evaluation: sum of (i+1) over 0 <= i < ell
        long sum = 0;
        for (int i = 0; i < ell; ++i)
            sum += i + 1;
        CHECK(rep.general_bound == sum);
        CHECK(!rep.isolated_applicable);
    }
    MonodromyBoundsReport small = monodromy_bounds(2, 4, 2, true);
    REQUIRE(small.isolated.size() == 1);
    CHECK(small.isolated[0].degree == 1);
    CHECK(small.isolated[0].bound == 1);

    MonodromyBoundsReport big = monodromy_bounds(16, 21, 2, true);
    REQUIRE(big.isolated.size() == 3);
    CHECK(big.isolated[0].degree == 12);
    CHECK(big.isolated[0].bound == 12);
    CHECK(big.isolated[1].degree == 8);
    CHECK(big.isolated[1].bound == 7);
    CHECK(big.isolated[2].degree == 4);
    CHECK(big.isolated[2].bound == 2);
}
